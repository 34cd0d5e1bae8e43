//! Command-line front end.
//!
//! [`run`] parses an argument vector, dispatches to `hodge-core` and returns
//! a [`CommandResult`] that the binary prints as JSON. Exit codes: 0 ok,
//! 1 mismatch (a verification found residuals), 2 usage or computation error.

mod scale;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hodge_core::characters;
use hodge_core::hodge as hg;
use hodge_core::hurwitz::{self, HurwitzMatrix};
use hodge_core::kernel::expand_at_unity;
use hodge_core::partitions::{enumerate, Partition};
use hodge_core::verify::{self, Residual, Suite};
use hodge_core::wfunctions;
use hodge_core::{Error, GaussianRational, LaurentPoly, Rational, RationalFunction, Series, TauPoly};

pub use scale::parse_scale;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub inputs: Value,
    pub output: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residuals: Option<Vec<Residual>>,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Error => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[derive(Debug, Parser)]
#[command(name = "hodge", about = "Exact two-partition Hodge integral generating functions", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
enum Command {
    /// Partitions of d with κ, z and |Aut|.
    Partitions(PartitionsArgs),
    /// Character value χ_ν(C_μ), or the whole table of S_d.
    Char(CharArgs),
    /// W_μ or W_{μ,ν} as a rational function in v = q^{1/2}, or its λ-series.
    W(WArgs),
    /// Double Hurwitz number H•_g(μ⁺, μ⁻).
    Hurwitz(HurwitzArgs),
    /// The matrix Φ•_d, exactly or as λ-series at a scale.
    Phi(PhiArgs),
    /// Cut-and-join matrix CJ_d.
    Cjmatrix(CjArgs),
    /// R•_{μ⁺,μ⁻}(λ; τ) to a λ-order.
    RSeries(RSeriesArgs),
    /// Connected coefficient G_{g,μ⁺,μ⁻}(τ), or the normalized integral.
    Hodge(HodgeArgs),
    /// K•_{μ⁺,μ⁻}(λ) by the framing route, the W route, or both.
    K(KArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

fn partition_arg(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn suite_arg(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

#[derive(Debug, Args, Serialize)]
struct PartitionsArgs {
    #[arg(long)]
    d: usize,
}

#[derive(Debug, Args, Serialize)]
struct CharArgs {
    #[arg(long, value_parser = partition_arg, requires = "mu", conflicts_with = "d")]
    nu: Option<Partition>,
    #[arg(long, value_parser = partition_arg, requires = "nu")]
    mu: Option<Partition>,
    /// Print the full table of S_d instead.
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum WRoute {
    Def,
    Skew,
}

#[derive(Debug, Args, Serialize)]
struct WArgs {
    #[arg(long, value_parser = partition_arg)]
    mu: Partition,
    #[arg(long, value_parser = partition_arg)]
    nu: Option<Partition>,
    /// Expand at q = e^{iλ} to this λ-order.
    #[arg(long)]
    series: Option<i64>,
    #[arg(long, value_enum, default_value = "skew")]
    route: WRoute,
}

#[derive(Debug, Args, Serialize)]
struct HurwitzArgs {
    #[arg(long)]
    g: u32,
    #[arg(long = "mu-plus", value_parser = partition_arg)]
    mu_plus: Partition,
    #[arg(long = "mu-minus", value_parser = partition_arg)]
    mu_minus: Partition,
}

#[derive(Debug, Args, Serialize)]
struct PhiArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, conflicts_with = "series", required_unless_present = "series")]
    exact: bool,
    #[arg(long, requires = "scale")]
    series: Option<i64>,
    /// Scale c in Φ•(cλ), e.g. `1`, `-i*tau`, `i/tau`.
    #[arg(long, allow_hyphen_values = true)]
    scale: Option<String>,
}

#[derive(Debug, Args, Serialize)]
struct CjArgs {
    #[arg(long)]
    d: usize,
}

#[derive(Debug, Args, Serialize)]
struct RSeriesArgs {
    #[arg(long = "mu-plus", value_parser = partition_arg)]
    mu_plus: Partition,
    #[arg(long = "mu-minus", value_parser = partition_arg)]
    mu_minus: Partition,
    #[arg(long)]
    order: i64,
}

#[derive(Debug, Args, Serialize)]
struct HodgeArgs {
    #[arg(long)]
    g: u32,
    #[arg(long = "mu-plus", value_parser = partition_arg)]
    mu_plus: Partition,
    #[arg(long = "mu-minus", value_parser = partition_arg)]
    mu_minus: Partition,
    #[arg(long)]
    normalized: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum KRoute {
    Kg,
    W,
}

#[derive(Debug, Args, Serialize)]
struct KArgs {
    #[arg(long = "mu-plus", value_parser = partition_arg)]
    mu_plus: Partition,
    #[arg(long = "mu-minus", value_parser = partition_arg)]
    mu_minus: Partition,
    #[arg(long)]
    order: i64,
    /// Omit to compute both routes and compare them.
    #[arg(long, value_enum)]
    route: Option<KRoute>,
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    /// One of chars, rcj, initial, kg, gk, key, sum, cj.
    #[arg(value_parser = suite_arg)]
    #[serde(serialize_with = "ser_suite")]
    suite: Suite,
    #[arg(long, num_args = 2, value_names = ["D_PLUS", "D_MINUS"])]
    caps: Vec<usize>,
    /// λ-order; required by the series suites (rcj, initial, kg, gk, sum).
    #[arg(long)]
    order: Option<i64>,
}

fn ser_suite<S: serde::Serializer>(s: &Suite, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(s.name())
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Partitions(_) => "partitions",
            Command::Char(_) => "char",
            Command::W(_) => "w",
            Command::Hurwitz(_) => "hurwitz",
            Command::Phi(_) => "phi",
            Command::Cjmatrix(_) => "cjmatrix",
            Command::RSeries(_) => "r-series",
            Command::Hodge(_) => "hodge",
            Command::K(_) => "k",
            Command::Verify(_) => "verify",
        }
    }
}

/// Outcome of a subcommand before it is wrapped into a [`CommandResult`].
struct Outcome {
    output: Value,
    status: Status,
    residuals: Option<Vec<Residual>>,
}

impl Outcome {
    fn ok(output: Value) -> Self {
        Outcome { output, status: Status::Ok, residuals: None }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

/// Parse `argv` (including the program name) and execute it.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Status::Ok,
                _ => Status::Error,
            };
            let key = if status == Status::Ok { "help" } else { "usage_error" };
            return CommandResult {
                command: String::new(),
                inputs: Value::Null,
                output: json!({ key: text }),
                status,
                residuals: None,
            };
        }
    };
    let command = cli.command.name().to_string();
    let inputs = serde_json::to_value(&cli.command).expect("serializable");
    let outcome = execute(&cli.command);
    match outcome {
        Ok(o) => CommandResult { command, inputs, output: o.output, status: o.status, residuals: o.residuals },
        Err(f) => {
            let output = match f {
                Failure::Usage(msg) => json!({ "usage_error": msg }),
                Failure::Compute(e) => {
                    let mut v = json!({ "error": e.to_string() });
                    if let Error::InsufficientPrecision { required, available } = e {
                        v["required_order"] = json!(required);
                        v["available_order"] = json!(available);
                    }
                    v
                }
            };
            CommandResult { command, inputs, output, status: Status::Error, residuals: None }
        }
    }
}

fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Partitions(a) => Ok(Outcome::ok(partitions_cmd(a.d))),
        Command::Char(a) => char_cmd(a),
        Command::W(a) => w_cmd(a),
        Command::Hurwitz(a) => {
            let value = hurwitz::hurwitz_number(a.g, &a.mu_plus, &a.mu_minus)?;
            let r = 2 * a.g as i64 - 2 + (a.mu_plus.len() + a.mu_minus.len()) as i64;
            Ok(Outcome::ok(json!({ "value": value, "branch_points": r })))
        }
        Command::Phi(a) => phi_cmd(a),
        Command::Cjmatrix(a) => {
            let cj = hurwitz::cj_matrix(a.d);
            Ok(Outcome::ok(json!({ "basis": cj.basis, "matrix": cj.entries })))
        }
        Command::RSeries(a) => {
            let s = hg::r_disconnected(&a.mu_plus, &a.mu_minus, a.order)?;
            Ok(Outcome::ok(tau_series_json(&s)))
        }
        Command::Hodge(a) => hodge_cmd(a),
        Command::K(a) => k_cmd(a),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn partitions_cmd(d: usize) -> Value {
    let parts: Vec<Value> = enumerate(d)
        .iter()
        .map(|p| {
            json!({
                "partition": p,
                "kappa": p.kappa().to_string(),
                "z": p.z().to_string(),
                "aut": p.aut().to_string(),
            })
        })
        .collect();
    json!({ "d": d, "count": parts.len(), "partitions": parts })
}

fn char_cmd(a: &CharArgs) -> Result<Outcome, Failure> {
    match (&a.nu, &a.mu, a.d) {
        (Some(nu), Some(mu), None) => {
            let chi = characters::chi(nu, mu)?;
            Ok(Outcome::ok(json!({ "chi": chi.to_string() })))
        }
        (None, None, Some(d)) => {
            let table = characters::table(d);
            let rows: Vec<Vec<String>> =
                table.rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
            Ok(Outcome::ok(json!({ "d": d, "basis": table.basis(), "table": rows })))
        }
        _ => Err(Failure::Usage("give either --nu and --mu, or --d".into())),
    }
}

/// Rewrite a rational function in `v` with only even exponents in `q = v²`.
fn in_q(f: &RationalFunction) -> Option<String> {
    let halve = |p: &LaurentPoly<Rational>| -> Option<LaurentPoly<Rational>> {
        p.terms().map(|(e, c)| if e % 2 == 0 { Some((e / 2, c.clone())) } else { None }).collect::<Option<Vec<_>>>().map(LaurentPoly::from_terms)
    };
    let num = halve(f.num())?;
    let den = halve(f.den())?;
    Some(RationalFunction::new(num, den).ok()?.display_in("q"))
}

fn rational_function_json(f: &RationalFunction, var: &str) -> Value {
    json!({
        "text": f.display_in(var),
        "num": f.num(),
        "den": f.den(),
    })
}

fn gaussian_series_json(s: &Series<GaussianRational>) -> Value {
    json!({ "series": s, "text": s.display_in("lambda") })
}

fn tau_series_text(s: &Series<TauPoly>) -> String {
    let mut parts: Vec<String> = s
        .terms()
        .map(|(k, c)| {
            let cs = format!("({})", c.display_in("tau"));
            match k {
                0 => cs,
                1 => format!("{cs}*lambda"),
                _ => format!("{cs}*lambda^{k}"),
            }
        })
        .collect();
    parts.push(format!("O(lambda^{})", s.order() + 1));
    parts.join(" + ")
}

fn tau_series_json(s: &Series<TauPoly>) -> Value {
    json!({ "series": s, "text": tau_series_text(s) })
}

fn w_cmd(a: &WArgs) -> Result<Outcome, Failure> {
    let (f, route) = match &a.nu {
        None => (wfunctions::w_mu(&a.mu), "w_mu"),
        Some(nu) => match a.route {
            WRoute::Skew => (wfunctions::w_munu(&a.mu, nu), "skew"),
            WRoute::Def => (wfunctions::w_munu_def(&a.mu, nu), "def"),
        },
    };
    let out = match a.series {
        Some(order) => {
            let s = expand_at_unity(&f, order)?;
            json!({ "route": route, "lambda": gaussian_series_json(&s) })
        }
        None => json!({
            "route": route,
            "v": rational_function_json(&f, "v"),
            "q": in_q(&f),
        }),
    };
    Ok(Outcome::ok(out))
}

fn phi_cmd(a: &PhiArgs) -> Result<Outcome, Failure> {
    let m = HurwitzMatrix::new(a.d);
    if a.exact {
        let text: Vec<Vec<String>> = m.entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
        return Ok(Outcome::ok(json!({ "basis": m.basis, "matrix": m.entries, "text": text })));
    }
    let order = a.series.ok_or_else(|| Failure::Usage("--series ORDER is required without --exact".into()))?;
    let expr = a.scale.as_deref().ok_or_else(|| Failure::Usage("--scale is required with --series".into()))?;
    let c = parse_scale(expr).map_err(Failure::Usage)?;
    if order < 0 {
        return Err(Failure::Usage("--series ORDER must be nonnegative".into()));
    }
    let matrix: Vec<Vec<Value>> =
        m.entries.iter().map(|r| r.iter().map(|e| tau_series_json(&e.to_series(&c, order))).collect()).collect();
    Ok(Outcome::ok(json!({ "basis": m.basis, "scale": c.display_in("tau"), "matrix": matrix })))
}

fn hodge_cmd(a: &HodgeArgs) -> Result<Outcome, Failure> {
    if a.normalized {
        let f = hg::normalized_integral(a.g, &a.mu_plus, &a.mu_minus)?;
        return Ok(Outcome::ok(json!({ "normalized": rational_function_json(&f, "tau") })));
    }
    let h = hg::hodge_coefficient(a.g, &a.mu_plus, &a.mu_minus)?;
    let lambda_degree = 2 * a.g as i64 - 2 + (a.mu_plus.len() + a.mu_minus.len()) as i64;
    Ok(Outcome::ok(json!({
        "lambda_degree": lambda_degree,
        "value": h.value,
        "text": h.value.display_in("tau"),
    })))
}

fn k_cmd(a: &KArgs) -> Result<Outcome, Failure> {
    let kg = || hg::k_via_kg(&a.mu_plus, &a.mu_minus, a.order);
    let kw = || hg::k_via_w(&a.mu_plus, &a.mu_minus, a.order);
    match a.route {
        Some(KRoute::Kg) => Ok(Outcome::ok(json!({ "route": "kg", "k": tau_series_json(&kg()?) }))),
        Some(KRoute::W) => Ok(Outcome::ok(json!({ "route": "w", "k": tau_series_json(&kw()?) }))),
        None => {
            let (x, y) = (kg()?, kw()?);
            let tau_free = x.terms().all(|(_, c)| c.is_constant());
            let agree = x == y;
            let mut residuals = Vec::new();
            if !agree {
                residuals.push(Residual {
                    check: "framing routes agree".into(),
                    entry: format!("{} {}", a.mu_plus, a.mu_minus),
                    detail: format!("{} vs {}", tau_series_text(&x), tau_series_text(&y)),
                });
            }
            if !tau_free {
                residuals.push(Residual {
                    check: "tau independence".into(),
                    entry: format!("{} {}", a.mu_plus, a.mu_minus),
                    detail: tau_series_text(&x),
                });
            }
            let status = if residuals.is_empty() { Status::Ok } else { Status::Mismatch };
            Ok(Outcome {
                output: json!({ "route": "both", "agree": agree, "tau_free": tau_free, "k": tau_series_json(&x) }),
                status,
                residuals: Some(residuals),
            })
        }
    }
}

fn verify_cmd(a: &VerifyArgs) -> Result<Outcome, Failure> {
    if a.caps.len() != 2 {
        return Err(Failure::Usage("--caps takes two values D+ D-".into()));
    }
    let caps = (a.caps[0], a.caps[1]);
    let needs_order = matches!(a.suite, Suite::Rcj | Suite::Initial | Suite::Kg | Suite::Gk | Suite::Sum);
    let order = match a.order {
        Some(o) => o,
        None if needs_order => {
            return Err(Failure::Usage(format!("suite {} needs --order", a.suite.name())));
        }
        None => 0,
    };
    let report = verify::run_suite(a.suite, caps, order);
    let status = if report.passed() { Status::Ok } else { Status::Mismatch };
    Ok(Outcome {
        output: json!({ "suite": report.suite, "checked": report.checked, "passed": report.passed() }),
        status,
        residuals: Some(report.residuals),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandResult {
        run(std::iter::once("hodge").chain(args.iter().copied()))
    }

    #[test]
    fn char_example() {
        let r = run_args(&["char", "--nu", "[2,1]", "--mu", "[3]"]);
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.output, json!({ "chi": "-1" }));
        assert_eq!(r.command, "char");
    }

    #[test]
    fn usage_errors_exit_2() {
        for args in [&["char", "--nu", "[1,2]", "--mu", "[3]"][..], &["bogus"], &["hodge", "--g", "0"]] {
            let r = run_args(args);
            assert_eq!(r.exit_code(), 2, "{args:?}: {}", r.to_json());
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let r = run_args(&["char", "--nu", "[2]", "--mu", "[1]"]);
        assert_eq!(r.exit_code(), 2);
        assert!(r.output["error"].as_str().unwrap().contains("size mismatch"));
    }

    #[test]
    fn help_is_ok() {
        let r = run_args(&["--help"]);
        assert_eq!(r.exit_code(), 0);
        assert!(r.output["help"].as_str().unwrap().contains("verify"));
    }

    #[test]
    fn w_in_q() {
        let r = run_args(&["w", "--mu", "[1]", "--nu", "[1]"]);
        assert_eq!(r.output["q"], json!("(q^2 - q + 1) / (q^2 - 2*q + 1)"));
    }
}
