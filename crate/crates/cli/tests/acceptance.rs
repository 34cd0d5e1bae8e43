//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact.
//!
//! Expected values come from small oracles written here (contents sums,
//! hook products, series inversion of `2 sin(λ/2)`, hand-written cosh/sinh
//! sums), not from the library routines under test.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hodge_core::characters;
use hodge_core::hodge;
use hodge_core::hurwitz::{self, ExpSum, HurwitzMatrix};
use hodge_core::partitions::{enumerate_up_to, Partition};
use hodge_core::verify::{self, Report};
use hodge_core::wfunctions;
use hodge_core::{GaussianRational, LaurentPoly, Rational, RationalFunction, Ring, TauPoly};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn from_report(r: &Report) -> Outcome {
    if r.passed() {
        pass(format!("{} checks", r.checked))
    } else {
        let first = &r.residuals[0];
        fail(format!("{} residuals; first {} at {}: {}", r.residuals.len(), first.check, first.entry, first.detail))
    }
}

/// Combine several outcomes; the first failure wins.
fn all(parts: Vec<Outcome>) -> Outcome {
    let mut details = Vec::new();
    for p in parts {
        if !p.ok {
            return p;
        }
        details.push(p.detail);
    }
    pass(details.join("; "))
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Outcome {
    if elapsed < limit {
        pass(format!("{what} {:.2}s < {}s", elapsed.as_secs_f64(), limit.as_secs()))
    } else {
        fail(format!("{what} took {:.2}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()))
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn local_conjugate(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width).map(|j| parts.iter().filter(|&&r| r >= j).count()).collect()
}

/// `d! / Π hooks`.
fn hook_dimension(parts: &[usize]) -> u128 {
    let conj = local_conjugate(parts);
    let n: usize = parts.iter().sum();
    let mut prod: u128 = 1;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            prod *= (row - j - 1 + conj[j] - i - 1 + 1) as u128;
        }
    }
    factorial(n) / prod
}

/// Twice the sum of contents `j − i` over the boxes.
fn twice_contents(parts: &[usize]) -> i64 {
    parts.iter().enumerate().map(|(i, &row)| (0..row).map(|j| 2 * (j as i64 - i as i64)).sum::<i64>()).sum()
}

fn local_z(parts: &[usize]) -> u128 {
    let mut z: u128 = 1;
    let mut k = 0;
    while k < parts.len() {
        let j = parts[k];
        let m = parts[k..].iter().take_while(|&&x| x == j).count();
        z *= factorial(m) * (j as u128).pow(m as u32);
        k += m;
    }
    z
}

fn inverse_z(mu: &Partition) -> Rational {
    Rational::from_big(1.into(), local_z(mu.parts()).into())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let report = verify::characters_suite(8);
    let mut local = Vec::new();
    for d in 0..=8 {
        let table = characters::table(d);
        let basis = table.basis();
        let rows = table.rows();
        let ones = Partition::column(d);
        for nu in basis {
            let by_table = table.value(nu, &ones).unwrap();
            let by_hooks = hook_dimension(nu.parts());
            if by_table as i128 != by_hooks as i128 {
                local.push(format!("dim {nu}: {by_table} vs {by_hooks}"));
            }
        }
        // Second orthogonality with centralizers from a local z.
        for (k, mu) in basis.iter().enumerate() {
            for l in 0..basis.len() {
                let s: i128 = rows.iter().map(|r| r[k] as i128 * r[l] as i128).sum();
                let expect = if k == l { local_z(mu.parts()) as i128 } else { 0 };
                if s != expect {
                    local.push(format!("columns {k},{l} in degree {d}"));
                }
            }
        }
        // First orthogonality in integer form: Σ_μ |C_μ| χ_ν χ_η = d! δ.
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let s: i128 = basis
                    .iter()
                    .enumerate()
                    .map(|(k, mu)| (factorial(d) / local_z(mu.parts())) as i128 * rows[i][k] as i128 * rows[j][k] as i128)
                    .sum();
                let expect = if i == j { factorial(d) as i128 } else { 0 };
                if s != expect {
                    local.push(format!("rows {i},{j} in degree {d}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let local = if local.is_empty() { pass("local oracle agrees") } else { fail(local.join(", ")) };
    all(vec![from_report(&report), local, within(elapsed, Duration::from_secs(30), "runtime")])
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for nu in enumerate_up_to(8) {
        let expect = Rational::new(twice_contents(nu.parts()), 2);
        let f = characters::f2(&nu);
        let kappa_half = Rational::new(nu.kappa(), 2);
        if f != expect || kappa_half != expect {
            return fail(format!("{nu}: f2 {f}, kappa/2 {kappa_half}, contents {expect}"));
        }
        count += 1;
    }
    pass(format!("{count} partitions"))
}

fn criterion_3() -> Outcome {
    let m = HurwitzMatrix::new(2);
    if m.basis != vec![p(&[2]), p(&[1, 1])] {
        return fail(format!("basis {:?}", m.basis));
    }
    // (1/2)cosh λ and (1/2)sinh λ written out by hand.
    let half_cosh = ExpSum::exp(1, q(1, 4)).add(&ExpSum::exp(-1, q(1, 4)));
    let half_sinh = ExpSum::exp(1, q(1, 4)).add(&ExpSum::exp(-1, q(-1, 4)));
    let expect = vec![vec![half_cosh.clone(), half_sinh.clone()], vec![half_sinh, half_cosh]];
    if m.entries != expect {
        return fail(format!("d=2 matrix {:?}", m.entries));
    }
    let mut checked = 0;
    for d in 1..=6 {
        let m = HurwitzMatrix::new(d);
        for (i, mu) in m.basis.iter().enumerate() {
            for (j, _) in m.basis.iter().enumerate() {
                let expect = if i == j { inverse_z(mu) } else { Rational::zero() };
                if m.entries[i][j].at_zero() != expect {
                    return fail(format!("value at zero, degree {d}, entry {i},{j}"));
                }
                checked += 1;
            }
        }
    }
    all(vec![pass("d=2 cosh/sinh matrix"), pass(format!("{checked} values at zero")), from_report(&hurwitz::initial_check(6))])
}

fn criterion_4() -> Outcome {
    let mut module = Report::new("sum and inverse");
    let mut checked = 0;
    for d in 1..=6 {
        module.absorb(hurwitz::exact_sum_formula(d));
        module.absorb(hurwitz::exact_inverse_identity(d));
        // Φ(λ) Z Φ(−λ) built from ExpSum products only.
        let m = HurwitzMatrix::new(d);
        let n = m.basis.len();
        for i in 0..n {
            for j in 0..n {
                let mut acc = ExpSum::zero();
                for k in 0..n {
                    let z = Rational::from_bigint(local_z(m.basis[k].parts()).into());
                    acc = acc.add(&m.entries[i][k].mul(&m.entries[k][j].reflect()).scale(&z));
                }
                let expect = if i == j {
                    ExpSum::constant(inverse_z(&m.basis[i]))
                } else {
                    ExpSum::zero()
                };
                if acc != expect {
                    return fail(format!("inverse identity, degree {d}, entry {i},{j}: {acc}"));
                }
                checked += 1;
            }
        }
    }
    all(vec![from_report(&module), pass(format!("{checked} local inverse entries"))])
}

fn criterion_5() -> Outcome {
    let cj2 = hurwitz::cj_matrix(2);
    let expect = vec![vec![Rational::zero(), Rational::one()], vec![Rational::one(), Rational::zero()]];
    if cj2.entries != expect {
        return fail(format!("CJ_2 = {:?}", cj2.entries));
    }
    // Hurwitz route by hand for d = 2: H•(r=1) z_ν.
    let h = hurwitz::cj_matrix_hurwitz(2).unwrap();
    if h.entries != expect {
        return fail(format!("Hurwitz-route CJ_2 = {:?}", h.entries));
    }
    all(vec![pass("CJ_2 = [[0,1],[1,0]]"), from_report(&hurwitz::cut_join_check(6))])
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let report = verify::key_suite((5, 5));
    let elapsed = start.elapsed();
    let nontrivial = enumerate_up_to(5).iter().filter(|m| !m.is_empty()).count().pow(2);
    let count = if nontrivial >= 49 { pass(format!("{nontrivial} nontrivial pairs")) } else { fail(format!("{nontrivial} pairs")) };
    // W_{(1),(1)} = 1 + 1/[1]² with [1] = v − 1/v.
    let bracket = LaurentPoly::from_terms([(1, Rational::one()), (-1, -Rational::one())]);
    let oracle = RationalFunction::constant(Rational::one())
        + &RationalFunction::new(LaurentPoly::one(), bracket.clone() * &bracket).unwrap();
    let w11 = wfunctions::w_munu_def(&p(&[1]), &p(&[1]));
    let spot = if w11 == oracle { pass("W_(1),(1) = 1 + 1/[1]^2") } else { fail(format!("W_(1),(1) = {w11}")) };
    all(vec![from_report(&report), count, spot, within(elapsed, Duration::from_secs(120), "runtime")])
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let report = hodge::rcj_check((3, 3), 8);
    let elapsed = start.elapsed();
    all(vec![from_report(&report), within(elapsed, Duration::from_secs(300), "runtime")])
}

fn criterion_8() -> Outcome {
    let report = hodge::initial_value_check((3, 3), 8);
    // (q² − q + 1)/(q − 1)² with q = v².
    let num = LaurentPoly::from_terms([(4, Rational::one()), (2, -Rational::one()), (0, Rational::one())]);
    let den = LaurentPoly::from_terms([(4, Rational::one()), (2, Rational::from_int(-2)), (0, Rational::one())]);
    let coincidence = RationalFunction::new(num, den).unwrap();
    let skew = hodge::initial_value_skew(&p(&[1]), &p(&[1]));
    let spot = if skew == coincidence { pass("(1),(1) at tau=-1 matches") } else { fail(format!("(1),(1) skew form {skew}")) };
    all(vec![from_report(&report), spot])
}

fn criterion_9() -> Outcome {
    all(vec![from_report(&hodge::kg_check((2, 2), 6)), from_report(&hodge::gk_roundtrip((2, 2), 6))])
}

/// Coefficients of `λ/(2 sin(λ/2))` up to `λ^{2n}` by inverting the series
/// `Σ_k (−1)^k λ^{2k} / (4^k (2k+1)!)` term by term.
fn lambda_over_two_sine(n: usize) -> Vec<Rational> {
    let s: Vec<Rational> = (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Rational::from_big(sign.into(), (4u128.pow(k as u32) * factorial(2 * k + 1)).into())
        })
        .collect();
    let mut inv: Vec<Rational> = vec![Rational::one()];
    for m in 1..=n {
        let mut acc = Rational::zero();
        for k in 1..=m {
            acc = acc + &(s[k].clone() * &inv[m - k]);
        }
        inv.push(-acc);
    }
    inv
}

fn criterion_10() -> Outcome {
    let e = Partition::empty();
    let one = p(&[1]);
    let minus_i = |c: Rational| TauPoly::constant(GaussianRational::imag(-c));
    let oracle = lambda_over_two_sine(3);
    let mut parts = Vec::new();
    for g in 0..=3u32 {
        match hodge::hodge_coefficient(g, &one, &e) {
            Ok(h) => {
                let expect = minus_i(oracle[g as usize].clone());
                let constant = h.value.is_constant();
                if h.value != expect || !constant {
                    return fail(format!("g={g}: {} vs {}", h.value.display_in("tau"), expect.display_in("tau")));
                }
                parts.push(format!("g={g}: {}", h.value.display_in("tau")));
            }
            Err(e) => return fail(format!("g={g}: {e}")),
        }
    }
    if oracle[1] != q(1, 24) {
        return fail(format!("oracle coefficient {}", oracle[1]));
    }
    let tau_tau1 = LaurentPoly::from_terms([(1, Rational::one()), (2, Rational::one())]);
    let expect = RationalFunction::new(LaurentPoly::one(), tau_tau1).unwrap();
    match hodge::normalized_integral(0, &one, &one) {
        Ok(f) if f == expect => parts.push("(1),(1) normalized 1/(tau(tau+1))".into()),
        Ok(f) => return fail(format!("normalized (1),(1): {}", f.display_in("tau"))),
        Err(e) => return fail(format!("normalized (1),(1): {e}")),
    }
    match hodge::normalized_integral(1, &one, &e) {
        Ok(f) if f == RationalFunction::constant(q(1, 24)) => parts.push("(1),[] g=1 normalized 1/24".into()),
        Ok(f) => return fail(format!("normalized g=1: {}", f.display_in("tau"))),
        Err(e) => return fail(format!("normalized g=1: {e}")),
    }
    pass(parts.join(", "))
}

fn criterion_11() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_hodge");
    let cache = match tempfile::tempdir() {
        Ok(d) => d,
        Err(e) => return fail(format!("tempdir: {e}")),
    };
    let runs: [(&str, &[&str]); 8] = [
        ("chars", &["--caps", "8", "8"]),
        ("cj", &["--caps", "6", "6"]),
        ("sum", &["--caps", "6", "6", "--order", "6"]),
        ("key", &["--caps", "5", "5"]),
        ("kg", &["--caps", "2", "2", "--order", "6"]),
        ("gk", &["--caps", "2", "2", "--order", "6"]),
        ("rcj", &["--caps", "3", "3", "--order", "8"]),
        ("initial", &["--caps", "3", "3", "--order", "8"]),
    ];
    let start = Instant::now();
    let mut lines = Vec::new();
    for (suite, args) in runs {
        let t = Instant::now();
        let out = Command::new(exe).arg("verify").arg(suite).args(args).env("HODGE_CACHE_DIR", cache.path()).output();
        let out = match out {
            Ok(o) => o,
            Err(e) => return fail(format!("spawn {suite}: {e}")),
        };
        if !out.status.success() {
            let text = String::from_utf8_lossy(&out.stdout);
            return fail(format!("verify {suite} exited {:?}: {}", out.status.code(), text.chars().take(400).collect::<String>()));
        }
        lines.push(format!("{suite} {:.1}s", t.elapsed().as_secs_f64()));
    }
    let elapsed = start.elapsed();
    all(vec![pass(lines.join(", ")), within(elapsed, Duration::from_secs(600), "total")])
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 11] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| fail("panicked"));
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("criterion {n}: {tag} ({})", outcome.detail);
        if !outcome.ok {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
