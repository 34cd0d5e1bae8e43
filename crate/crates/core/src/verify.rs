//! Verification suites.
//!
//! Each suite returns a [`Report`] listing the number of exact comparisons
//! made and every mismatch found. A suite passes when there are no
//! residuals. The CLI `verify` command is a thin wrapper over [`run_suite`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{GaussianRational, Rational, Ring};
use crate::partitions::{enumerate_up_to, Partition};
use crate::{characters, hodge, hurwitz, wfunctions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub check: String,
    pub entry: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checked: usize,
    pub residuals: Vec<Residual>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), checked: 0, residuals: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }

    /// Count one comparison; on failure record `detail()`.
    pub fn record(&mut self, ok: bool, check: &str, entry: impl fmt::Display, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.residuals.push(Residual { check: check.to_string(), entry: entry.to_string(), detail: detail() });
        }
    }

    /// Record an error raised while computing a check.
    pub fn record_error(&mut self, check: &str, entry: impl fmt::Display, err: &Error) {
        self.record(false, check, entry, || err.to_string());
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.residuals.extend(other.residuals);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "mismatch" };
        write!(f, "{}: {} ({} checks, {} residuals)", self.suite, status, self.checked, self.residuals.len())
    }
}

/// The named suites of the `verify` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Chars,
    Rcj,
    Initial,
    Kg,
    Gk,
    Key,
    Sum,
    Cj,
}

impl Suite {
    pub const ALL: [Suite; 8] =
        [Suite::Chars, Suite::Rcj, Suite::Initial, Suite::Kg, Suite::Gk, Suite::Key, Suite::Sum, Suite::Cj];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chars => "chars",
            Suite::Rcj => "rcj",
            Suite::Initial => "initial",
            Suite::Kg => "kg",
            Suite::Gk => "gk",
            Suite::Key => "key",
            Suite::Sum => "sum",
            Suite::Cj => "cj",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

/// Run one suite. `caps = (D⁺, D⁻)` bound the partition sizes; suites over a
/// single degree use `max(D⁺, D⁻)`. `order` is the λ-order for series suites.
pub fn run_suite(suite: Suite, caps: (usize, usize), order: i64) -> Report {
    let d = caps.0.max(caps.1);
    match suite {
        Suite::Chars => characters_suite(d),
        Suite::Rcj => hodge::rcj_check(caps, order),
        Suite::Initial => hodge::initial_value_check(caps, order),
        Suite::Kg => hodge::kg_check(caps, order),
        Suite::Gk => hodge::gk_roundtrip(caps, order),
        Suite::Key => key_suite(caps),
        Suite::Sum => sum_suite(d, order),
        Suite::Cj => hurwitz::cut_join_check(d),
    }
}

/// Orthogonality of both kinds, hook-length dimensions and `f_ν(2) = κ_ν/2`
/// for all degrees up to `d`.
pub fn characters_suite(d: usize) -> Report {
    let mut report = Report::new("chars");
    for n in 0..=d {
        let table = characters::table(n);
        let basis = table.basis();
        let rows = table.rows();
        let zs: Vec<Rational> = basis.iter().map(|mu| Rational::from_bigint(mu.z().into())).collect();
        // Row orthogonality: Σ_μ χ_ν(μ)χ_η(μ)/z_μ = δ_{νη}.
        for (i, nu) in basis.iter().enumerate() {
            for (j, eta) in basis.iter().enumerate() {
                let mut s = Rational::zero();
                for (k, z) in zs.iter().enumerate() {
                    s += &Rational::new(rows[i][k] * rows[j][k], 1).div(z).expect("z is positive");
                }
                let expect = if i == j { Rational::one() } else { Rational::zero() };
                report.record(s == expect, "row orthogonality", format!("{nu} {eta}"), || format!("sum {s}"));
            }
        }
        // Column orthogonality: Σ_ν χ_ν(μ)χ_ν(ρ) = δ_{μρ} z_μ.
        for (k, mu) in basis.iter().enumerate() {
            for (l, rho) in basis.iter().enumerate() {
                let s: i128 = rows.iter().map(|r| r[k] as i128 * r[l] as i128).sum();
                let expect = if k == l { mu.z() as i128 } else { 0 };
                report.record(s == expect, "column orthogonality", format!("{mu} {rho}"), || format!("sum {s}"));
            }
        }
        let ones = Partition::column(n);
        for nu in basis {
            let by_table = table.value(nu, &ones).expect("class in table");
            let by_hooks = characters::dim(nu);
            report.record(by_table as i128 == by_hooks as i128, "hook length", nu, || {
                format!("chi {by_table}, hooks {by_hooks}")
            });
            let kappa_half = Rational::new(nu.kappa(), 2);
            let f = characters::f2(nu);
            report.record(f == kappa_half, "central character", nu, || format!("f2 {f}, kappa/2 {kappa_half}"));
        }
    }
    report
}

/// `W_{μ,ν}` by both routes, their symmetry in `(μ,ν)`, and the
/// specialization `W_{μ,∅} = W_μ`, for `|μ| ≤ D⁺`, `|ν| ≤ D⁻`.
pub fn key_suite(caps: (usize, usize)) -> Report {
    let mut report = Report::new("key");
    let plus = enumerate_up_to(caps.0);
    let minus = enumerate_up_to(caps.1);
    for mu in &plus {
        let w_mu = wfunctions::w_mu(mu);
        let spec = wfunctions::w_munu_def(mu, &Partition::empty());
        report.record(spec == w_mu, "specialization", mu, || format!("{spec} vs {w_mu}"));
        for nu in &minus {
            let def = wfunctions::w_munu_def(mu, nu);
            let skew = wfunctions::w_munu(mu, nu);
            report.record(def == skew, "cross-route", format!("{mu} {nu}"), || format!("{def} vs {skew}"));
            let swapped = wfunctions::w_munu_skew(nu, mu);
            report.record(swapped == skew, "symmetry", format!("{mu} {nu}"), || format!("{swapped} vs {skew}"));
        }
    }
    report
}

/// Sum formula and inverse identity for every degree up to `d`: exactly as
/// exponential sums, and as λ-series with rational and Gaussian scales.
pub fn sum_suite(d: usize, order: i64) -> Report {
    let mut report = Report::new("sum");
    let order = order.max(0);
    for n in 1..=d {
        report.absorb(hurwitz::initial_check(n));
        report.absorb(hurwitz::exact_sum_formula(n));
        report.absorb(hurwitz::exact_inverse_identity(n));
        report.absorb(hurwitz::verify_sum_formula(n, &Rational::one(), &Rational::zero(), order));
        report.absorb(hurwitz::verify_sum_formula(n, &Rational::new(1, 2), &Rational::new(-2, 3), order));
        let i = GaussianRational::i();
        let c2 = GaussianRational::new(Rational::from_int(2), Rational::from_int(-1));
        report.absorb(hurwitz::verify_sum_formula(n, &i, &c2, order));
        report.absorb(hurwitz::verify_sum_formula(n, &i, &-i.clone(), order));
    }
    report.suite = "sum".to_string();
    report
}
