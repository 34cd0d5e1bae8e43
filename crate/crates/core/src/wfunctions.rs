//! Hopf-link invariants `W_μ(q)` and `W_{μ,ν}(q)`.
//!
//! All rational functions here are in `v` with `q = v²`, so `q^{κ_μ/4} =
//! v^{κ_μ/2}` and `[m] = q^{m/2} − q^{−m/2} = v^m − v^{−m}` have integral
//! exponents.
//!
//! `W_{μ,ν}` is available by two independent routes: [`w_munu_def`] from the
//! defining formula `q^{|ν|/2} W_μ(q) s_ν(E_μ(t))`, and [`w_munu_skew`] from
//! the double sum of principally specialized skew Schur functions. Their
//! agreement is one of the verification suites.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Result;
use crate::kernel::{expand_at_unity, GaussianRational, LaurentPoly, Rational, RationalFunction, Ring, Series};
use crate::partitions::Partition;
use crate::symfun::{determinant, principal_spec};

type Poly = LaurentPoly<Rational>;

/// `[m] = v^m − v^{−m}`.
pub fn bracket(m: i64) -> Poly {
    LaurentPoly::from_terms([(m, Rational::one()), (-m, -Rational::one())])
}

/// `q^k − 1 = v^{2k} − 1`.
fn q_pow_minus_one(k: i64) -> Poly {
    LaurentPoly::from_terms([(2 * k, Rational::one()), (0, -Rational::one())])
}

/// `W_μ(q) = q^{κ_μ/4} Π_{i<j} [μ_i−μ_j+j−i]/[j−i] · Π_i Π_{k=1}^{μ_i} 1/[k−i+l(μ)]`.
pub fn w_mu(mu: &Partition) -> RationalFunction {
    let l = mu.len() as i64;
    let mut num = LaurentPoly::x_pow(mu.kappa() / 2);
    let mut den = Poly::one();
    for i in 1..=l {
        for j in (i + 1)..=l {
            let mi = mu.part(i as usize - 1) as i64;
            let mj = mu.part(j as usize - 1) as i64;
            num = num * &bracket(mi - mj + j - i);
            den = den * &bracket(j - i);
        }
        for k in 1..=mu.part(i as usize - 1) as i64 {
            den = den * &bracket(k - i + l);
        }
    }
    RationalFunction::new(num, den).expect("brackets of positive integers are nonzero")
}

/// Coefficients `e_n = N_n / D_n` of `E_μ(t)` with the fixed denominators
/// `D_n = Π_{i=1}^{n} (q^i − 1)`, before any cancellation.
fn e_mu_raw(mu: &Partition, k_max: usize) -> Vec<Poly> {
    // Product of the finitely many factors (1+q^{μ_j−j}t)/(1+q^{−j}t).
    let mut prod: Vec<Poly> = vec![Poly::zero(); k_max + 1];
    prod[0] = Poly::one();
    for j in 1..=mu.len() as i64 {
        let mj = mu.part(j as usize - 1) as i64;
        let mut next = vec![Poly::zero(); k_max + 1];
        // Multiply by 1/(1 + q^{-j} t) = Σ_n (−q^{−j})^n t^n.
        for (n, slot) in next.iter_mut().enumerate() {
            let mut acc = Poly::zero();
            for m in 0..=n {
                let sign = if (n - m) % 2 == 0 { Rational::one() } else { -Rational::one() };
                acc += &prod[m].shift(-2 * j * (n - m) as i64).scale(&sign);
            }
            *slot = acc;
        }
        // Multiply by (1 + q^{μ_j − j} t).
        let mut with_num = next.clone();
        for n in 1..=k_max {
            with_num[n] += &next[n - 1].shift(2 * (mj - j));
        }
        prod = with_num;
    }
    // Multiply by 1 + Σ_n t^n / D_n, putting everything over D_n.
    (0..=k_max)
        .map(|n| {
            let mut acc = Poly::zero();
            for (k, pk) in prod.iter().enumerate().take(n + 1) {
                let mut term = pk.clone();
                for i in (n - k + 1)..=n {
                    term = term * &q_pow_minus_one(i as i64);
                }
                acc += &term;
            }
            acc
        })
        .collect()
}

fn d_n(n: usize) -> Poly {
    (1..=n as i64).fold(Poly::one(), |acc, i| acc * &q_pow_minus_one(i))
}

/// The `t`-coefficients `e_0 = 1, …, e_K` of
/// `E_μ(t) = Π_j (1+q^{μ_j−j}t)/(1+q^{−j}t) · (1 + Σ_{n≥1} t^n / Π_{i=1}^n (q^i−1))`.
pub fn e_mu_coeffs(mu: &Partition, k_max: usize) -> Vec<RationalFunction> {
    e_mu_raw(mu, k_max)
        .into_iter()
        .enumerate()
        .map(|(n, num)| RationalFunction::new(num, d_n(n)).expect("nonzero denominator"))
        .collect()
}

/// `W_{μ,ν} = q^{|ν|/2} W_μ(q) s_ν(E_μ(t))`, with the `t`-coefficients of
/// `E_μ` read as elementary symmetric functions and `s_ν` evaluated by the
/// dual Jacobi–Trudi determinant `det(e_{ν'_i − i + j})`.
pub fn w_munu_def(mu: &Partition, nu: &Partition) -> RationalFunction {
    let size = nu.size();
    let conj = nu.conjugate();
    let n = conj.len();
    let raw = e_mu_raw(mu, size);
    // Row i holds indices c_i + j with c_i = ν'_i − i; scaling row i by
    // D_{c_i + n} turns every entry into a polynomial.
    let mut matrix = Vec::with_capacity(n);
    let mut row_scale = Poly::one();
    for i in 0..n {
        let c = conj.part(i) as i64 - i as i64 - 1;
        let top = c + n as i64;
        let mut row = Vec::with_capacity(n);
        for j in 1..=n as i64 {
            let k = c + j;
            if k < 0 {
                row.push(Poly::zero());
            } else {
                let mut entry = raw[k as usize].clone();
                for i2 in (k + 1)..=top {
                    entry = entry * &q_pow_minus_one(i2);
                }
                row.push(entry);
            }
        }
        if top >= 0 {
            row_scale = row_scale * &d_n(top as usize);
        }
        matrix.push(row);
    }
    let det = determinant(&matrix);
    let schur = RationalFunction::new(det, row_scale).expect("nonzero denominator");
    schur * &w_mu(mu) * &RationalFunction::x_pow(size as i64)
}

/// `W_{μ,ν} = (−1)^{|μ|+|ν|} q^{(κ_μ+κ_ν+|μ|+|ν|)/2} Σ_ρ q^{−|ρ|} s_{μ/ρ}(1,q,…) s_{ν/ρ}(1,q,…)`,
/// summed over `ρ ⊆ μ ∩ ν`.
pub fn w_munu_skew(mu: &Partition, nu: &Partition) -> RationalFunction {
    let common = mu.intersection(nu);
    let mut sum = RationalFunction::zero();
    for rho in common.subpartitions() {
        let term = principal_spec(mu, &rho) * &principal_spec(nu, &rho) * &RationalFunction::x_pow(-2 * rho.size() as i64);
        sum = sum + &term;
    }
    let sign = if (mu.size() + nu.size()).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let exp = mu.kappa() + nu.kappa() + (mu.size() + nu.size()) as i64;
    sum * &RationalFunction::x_pow(exp).scale(&sign)
}

/// Memoized `W_{μ,ν}`, computed by the skew-Schur route.
pub fn w_munu(mu: &Partition, nu: &Partition) -> RationalFunction {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), RationalFunction>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (mu.clone(), nu.clone());
    if let Some(w) = cache.lock().expect("W cache poisoned").get(&key) {
        return w.clone();
    }
    let w = w_munu_skew(mu, nu);
    cache.lock().expect("W cache poisoned").insert(key, w.clone());
    w
}

/// `W_{μ,ν}(e^{iλ})` as a Laurent series in `λ` known to `order`.
pub fn w_series(mu: &Partition, nu: &Partition, order: i64) -> Result<Series<GaussianRational>> {
    expand_at_unity(&w_munu(mu, nu), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> Poly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_int(c))))
    }

    fn rf(n: &[(i64, i64)], d: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::new(poly(n), poly(d)).unwrap()
    }

    /// (q²−q+1)/(q−1)² in v.
    fn w11() -> RationalFunction {
        rf(&[(4, 1), (2, -1), (0, 1)], &[(4, 1), (2, -2), (0, 1)])
    }

    #[test]
    fn w_mu_examples() {
        assert_eq!(w_mu(&Partition::empty()), RationalFunction::one());
        assert_eq!(w_mu(&p(&[1])), rf(&[(0, 1)], &[(1, 1), (-1, -1)]));
        let den = bracket(1) * &bracket(2);
        assert_eq!(w_mu(&p(&[2])), RationalFunction::new(LaurentPoly::x_pow(1), den).unwrap());
    }

    #[test]
    fn e_mu_examples() {
        assert_eq!(e_mu_coeffs(&Partition::empty(), 0), vec![RationalFunction::one()]);
        let e = e_mu_coeffs(&p(&[1]), 1);
        assert_eq!(e[0], RationalFunction::one());
        // (q² − q + 1)/(q(q − 1))
        assert_eq!(e[1], rf(&[(4, 1), (2, -1), (0, 1)], &[(4, 1), (2, -1)]));
        assert_eq!(e_mu_coeffs(&p(&[3, 1]), 0), vec![RationalFunction::one()]);
    }

    #[test]
    fn w_munu_examples_both_routes() {
        let e = Partition::empty();
        assert_eq!(w_munu_def(&e, &e), RationalFunction::one());
        assert_eq!(w_munu_skew(&e, &e), RationalFunction::one());
        assert_eq!(w_munu_def(&p(&[2, 1]), &e), w_mu(&p(&[2, 1])));
        assert_eq!(w_munu_def(&p(&[1]), &p(&[1])), w11());
        assert_eq!(w_munu_skew(&p(&[1]), &p(&[1])), w11());
        assert_eq!(w_munu_skew(&p(&[1]), &e), w_mu(&p(&[1])));
    }

    #[test]
    fn w_series_examples() {
        let e = Partition::empty();
        assert_eq!(w_series(&e, &e, 5).unwrap(), Series::one(5));
        let s = w_series(&p(&[1]), &e, 3).unwrap();
        let gi = |n, d| GaussianRational::imag(Rational::new(n, d));
        assert_eq!(s.coeff(-1).unwrap(), gi(-1, 1));
        assert_eq!(s.coeff(1).unwrap(), gi(-1, 24));
        assert_eq!(s.coeff(3).unwrap(), gi(-7, 5760));
        let s = w_series(&p(&[1]), &p(&[1]), 2).unwrap();
        let g = |n, d| GaussianRational::real(Rational::new(n, d));
        assert_eq!(s.valuation(), -2);
        assert_eq!(s.coeff(-2).unwrap(), g(-1, 1));
        assert_eq!(s.coeff(-1).unwrap(), GaussianRational::zero());
        assert_eq!(s.coeff(0).unwrap(), g(11, 12));
        assert_eq!(s.coeff(1).unwrap(), GaussianRational::zero());
        assert_eq!(s.coeff(2).unwrap(), g(-1, 240));
    }
}
