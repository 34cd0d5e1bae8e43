//! Double Hurwitz numbers.
//!
//! The disconnected generating function `Φ•_{μ⁺,μ⁻}(λ)` is a finite sum of
//! exponentials by the Burnside formula, so it is stored exactly as an
//! [`ExpSum`]; truncated series appear only when a scale such as `−iτ`
//! enters. Cut-and-join matrices `CJ_d` satisfy `dΦ•_d/dλ = CJ_d Φ•_d`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::characters;
use crate::error::{Error, Result};
use crate::family::PSeriesFamily;
use crate::kernel::{series_exp, Rational, Ring, Series};
use crate::partitions::{enumerate, Partition};
use crate::symfun::cut_join_monomial;
use crate::verify::Report;

/// `Σ_f a_f e^{fλ}` with integer frequencies and no zero amplitudes.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExpSum {
    terms: BTreeMap<i64, Rational>,
}

impl ExpSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::exp(0, c)
    }

    /// `a e^{fλ}`.
    pub fn exp(f: i64, a: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(f, &a);
        s
    }

    pub fn add_term(&mut self, f: i64, a: &Rational) {
        if a.is_zero() {
            return;
        }
        let entry = self.terms.entry(f).or_insert_with(Rational::zero);
        *entry += a;
        if entry.is_zero() {
            self.terms.remove(&f);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(f, a)| (*f, a))
    }

    pub fn amplitude(&self, f: i64) -> Rational {
        self.terms.get(&f).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (f, a) in other.terms() {
            out.add_term(f, a);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (f, a) in self.terms() {
            out.add_term(f, &(a.clone() * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (f, a) in self.terms() {
            for (g, b) in other.terms() {
                out.add_term(f + g, &(a.clone() * b));
            }
        }
        out
    }

    /// `d/dλ`: each amplitude is multiplied by its frequency.
    pub fn derivative(&self) -> Self {
        self.scale_frequencies(Rational::from_int)
    }

    fn scale_frequencies(&self, w: impl Fn(i64) -> Rational) -> Self {
        let mut out = Self::zero();
        for (f, a) in self.terms() {
            out.add_term(f, &(a.clone() * &w(f)));
        }
        out
    }

    /// `Φ(−λ)`.
    pub fn reflect(&self) -> Self {
        ExpSum { terms: self.terms.iter().map(|(f, a)| (-f, a.clone())).collect() }
    }

    /// Value at `λ = 0`.
    pub fn at_zero(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, a| acc + a)
    }

    /// `r!·[λ^r]Φ = Σ_f a_f f^r`.
    pub fn moment(&self, r: u32) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (f, a)| {
            let fr = if r == 0 { Rational::one() } else { Rational::from_int(*f).pow(r) };
            acc + &(a.clone() * &fr)
        })
    }

    /// λ-expansion of `Φ(cλ) = Σ_f a_f exp(f c λ)` to `order`.
    pub fn to_series<R: Ring>(&self, c: &R, order: i64) -> Series<R> {
        let mut out = Series::zero(order);
        for (f, a) in self.terms() {
            let rate = R::from_int(f) * c;
            out = out.add(&series_exp(&rate, order).scale(a));
        }
        out
    }
}

impl fmt::Display for ExpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(k, a)| if k == 0 { format!("{a}") } else { format!("{a}*e^({k}*lambda)") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ExpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExpSum({self})")
    }
}

impl Serialize for ExpSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, &Rational> = self.terms.iter().map(|(f, a)| (f.to_string(), a)).collect();
        map.serialize(s)
    }
}

fn check_sizes(mu_plus: &Partition, mu_minus: &Partition) -> Result<()> {
    if mu_plus.size() != mu_minus.size() {
        return Err(Error::SizeMismatch {
            left: mu_plus.to_string(),
            left_size: mu_plus.size(),
            right: mu_minus.to_string(),
            right_size: mu_minus.size(),
        });
    }
    Ok(())
}

fn z_rational(mu: &Partition) -> Rational {
    Rational::from_bigint(mu.z().into())
}

/// `Φ•_{μ⁺,μ⁻}(λ) = Σ_{|ν|=d} χ_ν(C_{μ⁺})χ_ν(C_{μ⁻})/(z_{μ⁺}z_{μ⁻}) · e^{f_ν(2)λ}`.
///
/// For `d = 0` this is the constant 1.
pub fn phi_expsum(mu_plus: &Partition, mu_minus: &Partition) -> Result<ExpSum> {
    check_sizes(mu_plus, mu_minus)?;
    let d = mu_plus.size();
    let table = characters::table(d);
    let zz = Rational::from_bigint(num_bigint::BigInt::from(mu_plus.z()) * num_bigint::BigInt::from(mu_minus.z()));
    let mut out = ExpSum::zero();
    for nu in table.basis() {
        let a = table.value(nu, mu_plus).expect("class") * table.value(nu, mu_minus).expect("class");
        let amp = Rational::from_int(a).div(&zz)?;
        out.add_term(nu.kappa() / 2, &amp);
    }
    Ok(out)
}

/// `H•` with `r` simple branch points: `Σ_f a_f f^r`.
pub fn hurwitz_by_branch_points(r: u32, mu_plus: &Partition, mu_minus: &Partition) -> Result<Rational> {
    Ok(phi_expsum(mu_plus, mu_minus)?.moment(r))
}

/// Possibly disconnected double Hurwitz number `H•_g(μ⁺,μ⁻)` with
/// `r = 2g − 2 + l(μ⁺) + l(μ⁻)` simple branch points; 0 when `r < 0`.
pub fn hurwitz_number(g: u32, mu_plus: &Partition, mu_minus: &Partition) -> Result<Rational> {
    check_sizes(mu_plus, mu_minus)?;
    let r = 2 * g as i64 - 2 + (mu_plus.len() + mu_minus.len()) as i64;
    if r < 0 {
        if mu_plus.is_empty() && mu_minus.is_empty() {
            return Err(Error::Domain(format!("negative branch point count {r} for the empty cover")));
        }
        return Ok(Rational::zero());
    }
    hurwitz_by_branch_points(r as u32, mu_plus, mu_minus)
}

/// λ-expansion of `Φ•_{μ⁺,μ⁻}(cλ)` to `order`, in the ring of `c`.
pub fn phi_series<R: Ring>(mu_plus: &Partition, mu_minus: &Partition, scale: &R, order: i64) -> Result<Series<R>> {
    Ok(phi_expsum(mu_plus, mu_minus)?.to_series(scale, order))
}

/// The matrix `Φ•_d(λ)` indexed by partitions of `d` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HurwitzMatrix {
    pub d: usize,
    pub basis: Vec<Partition>,
    pub entries: Vec<Vec<ExpSum>>,
}

impl HurwitzMatrix {
    pub fn new(d: usize) -> Self {
        let table = characters::table(d);
        let basis = table.basis().to_vec();
        let n = basis.len();
        let mut entries = vec![vec![ExpSum::zero(); n]; n];
        let zs: Vec<Rational> = basis.iter().map(z_rational).collect();
        for (nu, row) in basis.iter().zip(table.rows()) {
            let f = nu.kappa() / 2;
            let u: Vec<Rational> = row.iter().zip(&zs).map(|(c, z)| Rational::from_int(*c).div(z).expect("z > 0")).collect();
            for i in 0..n {
                for j in 0..n {
                    entries[i][j].add_term(f, &(u[i].clone() * &u[j]));
                }
            }
        }
        HurwitzMatrix { d, basis, entries }
    }

    pub fn entry(&self, mu_plus: &Partition, mu_minus: &Partition) -> Option<&ExpSum> {
        let i = crate::partitions::index_of(&self.basis, mu_plus)?;
        let j = crate::partitions::index_of(&self.basis, mu_minus)?;
        Some(&self.entries[i][j])
    }

    pub fn derivative(&self) -> Self {
        let entries = self.entries.iter().map(|r| r.iter().map(ExpSum::derivative).collect()).collect();
        HurwitzMatrix { d: self.d, basis: self.basis.clone(), entries }
    }

    pub fn reflect(&self) -> Self {
        let entries = self.entries.iter().map(|r| r.iter().map(ExpSum::reflect).collect()).collect();
        HurwitzMatrix { d: self.d, basis: self.basis.clone(), entries }
    }

    /// `self · Z_d · other` with `Z_d = diag(z_μ)`.
    pub fn mul_z(&self, other: &Self) -> Vec<Vec<ExpSum>> {
        let n = self.basis.len();
        let zs: Vec<Rational> = self.basis.iter().map(z_rational).collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(ExpSum::zero(), |acc, k| {
                            acc.add(&self.entries[i][k].mul(&other.entries[k][j]).scale(&zs[k]))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Left multiplication by a rational matrix.
    pub fn left_mul(&self, m: &[Vec<Rational>]) -> Vec<Vec<ExpSum>> {
        let n = self.basis.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(ExpSum::zero(), |acc, k| acc.add(&self.entries[k][j].scale(&m[i][k]))))
                    .collect()
            })
            .collect()
    }

    /// Right multiplication by a rational matrix.
    pub fn right_mul(&self, m: &[Vec<Rational>]) -> Vec<Vec<ExpSum>> {
        let n = self.basis.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(ExpSum::zero(), |acc, k| acc.add(&self.entries[i][k].scale(&m[k][j]))))
                    .collect()
            })
            .collect()
    }
}

/// Cut-and-join matrix: `CJ_{μν} = [p_μ] (1/2)(C+J) p_ν`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CJMatrix {
    pub d: usize,
    pub basis: Vec<Partition>,
    pub entries: Vec<Vec<Rational>>,
}

impl CJMatrix {
    pub fn transpose(&self) -> Vec<Vec<Rational>> {
        let n = self.basis.len();
        (0..n).map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect()).collect()
    }
}

/// `CJ_d` from the action of the cut-and-join operator on power sums.
pub fn cj_matrix(d: usize) -> CJMatrix {
    let basis = enumerate(d);
    let index: BTreeMap<&Partition, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = basis.len();
    let mut entries = vec![vec![Rational::zero(); n]; n];
    for (j, nu) in basis.iter().enumerate() {
        for (mu, c) in cut_join_monomial(nu) {
            entries[index[&mu]][j] = c;
        }
    }
    CJMatrix { d, basis, entries }
}

/// `CJ_d` from Hurwitz numbers: `CJ_{μν} = H•(μ,ν)·z_ν` with a single simple
/// branch point, that is Euler characteristic `l(μ)+l(ν)−1` of the cover.
pub fn cj_matrix_hurwitz(d: usize) -> Result<CJMatrix> {
    let basis = enumerate(d);
    let mut entries = Vec::with_capacity(basis.len());
    for mu in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for nu in &basis {
            row.push(hurwitz_by_branch_points(1, mu, nu)? * &z_rational(nu));
        }
        entries.push(row);
    }
    Ok(CJMatrix { d, basis, entries })
}

/// Connected generating function `log Φ•` in the bigraded algebra.
pub fn connected_from_disconnected<R: Ring>(family: &PSeriesFamily<R>) -> Result<PSeriesFamily<R>> {
    family.log()
}

/// The family `1 + Σ Φ•_{μ⁺,μ⁻}(λ)` for `1 ≤ |μ^±| ≤ d`, as λ-series to `order`.
pub fn phi_family(d: usize, order: i64) -> Result<PSeriesFamily<Rational>> {
    let mut family = PSeriesFamily::one((d, d), order);
    for n in 1..=d {
        let m = HurwitzMatrix::new(n);
        for (i, mu) in m.basis.iter().enumerate() {
            for (j, nu) in m.basis.iter().enumerate() {
                family.insert(mu.clone(), nu.clone(), m.entries[i][j].to_series(&Rational::one(), order))?;
            }
        }
    }
    Ok(family)
}

/// `Φ•_d(0) = Z_d^{−1}`, symmetry, and the sign identity
/// `Φ•_{μ⁺,μ⁻}(λ) = (−1)^{l(μ⁺)+l(μ⁻)} Φ•_{μ⁺,μ⁻}(−λ)`.
pub fn initial_check(d: usize) -> Report {
    let mut report = Report::new("phi-initial");
    let m = HurwitzMatrix::new(d);
    for (i, mu) in m.basis.iter().enumerate() {
        for (j, nu) in m.basis.iter().enumerate() {
            let e = &m.entries[i][j];
            let expect = if i == j { Rational::one().div(&z_rational(mu)).expect("z > 0") } else { Rational::zero() };
            let at0 = e.at_zero();
            report.record(at0 == expect, "value at zero", format!("{mu} {nu}"), || format!("{at0} vs {expect}"));
            report.record(*e == m.entries[j][i], "symmetry", format!("{mu} {nu}"), || format!("{e}"));
            let sign = if (mu.len() + nu.len()) % 2 == 0 { Rational::one() } else { -Rational::one() };
            let flipped = e.reflect().scale(&sign);
            report.record(*e == flipped, "sign symmetry", format!("{mu} {nu}"), || format!("{e} vs {flipped}"));
        }
    }
    report
}

/// `Φ•(λ₁) Z Φ•(λ₂) = Φ•(λ₁+λ₂)` as an identity of two-variable exponential
/// sums.
pub fn exact_sum_formula(d: usize) -> Report {
    let mut report = Report::new("sum-exact");
    let m = HurwitzMatrix::new(d);
    let n = m.basis.len();
    let zs: Vec<Rational> = m.basis.iter().map(z_rational).collect();
    for i in 0..n {
        for j in 0..n {
            let mut lhs: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
            for k in 0..n {
                for (f1, a) in m.entries[i][k].terms() {
                    for (f2, b) in m.entries[k][j].terms() {
                        let v = a.clone() * b * &zs[k];
                        *lhs.entry((f1, f2)).or_insert_with(Rational::zero) += &v;
                    }
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            let rhs: BTreeMap<(i64, i64), Rational> = m.entries[i][j].terms().map(|(f, a)| ((f, f), a.clone())).collect();
            report.record(lhs == rhs, "sum formula", format!("{} {}", m.basis[i], m.basis[j]), || {
                format!("lhs {lhs:?} rhs {rhs:?}")
            });
        }
    }
    report
}

/// `Φ•(λ) Z Φ•(−λ) = Z^{−1}` exactly.
pub fn exact_inverse_identity(d: usize) -> Report {
    let mut report = Report::new("inverse-exact");
    let m = HurwitzMatrix::new(d);
    let prod = m.mul_z(&m.reflect());
    for (i, mu) in m.basis.iter().enumerate() {
        for (j, nu) in m.basis.iter().enumerate() {
            let expect = if i == j {
                ExpSum::constant(Rational::one().div(&z_rational(mu)).expect("z > 0"))
            } else {
                ExpSum::zero()
            };
            let got = &prod[i][j];
            report.record(*got == expect, "inverse identity", format!("{mu} {nu}"), || format!("{got} vs {expect}"));
        }
    }
    report
}

/// `Φ•(c₁λ) Z Φ•(c₂λ) = Φ•((c₁+c₂)λ)` on λ-series to `order`.
pub fn verify_sum_formula<R: Ring + fmt::Debug>(d: usize, c1: &R, c2: &R, order: i64) -> Report {
    let mut report = Report::new("sum-series");
    let m = HurwitzMatrix::new(d);
    let n = m.basis.len();
    let c12 = c1.clone() + c2;
    let s1: Vec<Vec<Series<R>>> = m.entries.iter().map(|r| r.iter().map(|e| e.to_series(c1, order)).collect()).collect();
    let s2: Vec<Vec<Series<R>>> = m.entries.iter().map(|r| r.iter().map(|e| e.to_series(c2, order)).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = Series::zero(order);
            for k in 0..n {
                lhs = lhs.add(&s1[i][k].mul(&s2[k][j]).scale(&z_rational(&m.basis[k])));
            }
            let rhs = m.entries[i][j].to_series(&c12, order);
            report.record(lhs == rhs, "sum formula", format!("{} {} c1={c1:?} c2={c2:?}", m.basis[i], m.basis[j]), || {
                format!("{lhs:?} vs {rhs:?}")
            });
        }
    }
    report
}

/// Cut-and-join equation, both sides; operator route against Hurwitz
/// route; Schur eigenvectors; for every degree `1 ≤ n ≤ d`.
pub fn cut_join_check(d: usize) -> Report {
    let mut report = Report::new("cj");
    for n in 1..=d {
        let cj = cj_matrix(n);
        let phi = HurwitzMatrix::new(n);
        let deriv = phi.derivative();
        let left = phi.left_mul(&cj.entries);
        let right = phi.right_mul(&cj.transpose());
        let size = cj.basis.len();
        for i in 0..size {
            for j in 0..size {
                let label = format!("{} {}", cj.basis[i], cj.basis[j]);
                let dv = &deriv.entries[i][j];
                report.record(*dv == left[i][j], "derivative = CJ Phi", &label, || format!("{dv} vs {}", left[i][j]));
                report.record(*dv == right[i][j], "derivative = Phi CJ^t", &label, || format!("{dv} vs {}", right[i][j]));
            }
        }
        match cj_matrix_hurwitz(n) {
            Ok(h) => {
                for i in 0..size {
                    for j in 0..size {
                        let (a, b) = (&cj.entries[i][j], &h.entries[i][j]);
                        report.record(a == b, "operator vs Hurwitz", format!("{} {}", cj.basis[i], cj.basis[j]), || {
                            format!("{a} vs {b}")
                        });
                    }
                }
            }
            Err(e) => report.record_error("operator vs Hurwitz", n, &e),
        }
        let table = characters::table(n);
        let cjt = cj.transpose();
        for nu in table.basis() {
            let row = table.row(nu).expect("row");
            let f = characters::f2(nu);
            let x: Vec<Rational> = row.iter().map(|c| Rational::from_int(*c)).collect();
            let y: Vec<Rational> = x.iter().zip(&cj.basis).map(|(c, mu)| c.div(&z_rational(mu)).expect("z > 0")).collect();
            for (vec, mat, name) in [(&y, &cj.entries, "CJ eigenvector"), (&x, &cjt, "CJ^t eigenvector")] {
                let image: Vec<Rational> = mat
                    .iter()
                    .map(|r| r.iter().zip(vec.iter()).fold(Rational::zero(), |acc, (a, b)| acc + &(a.clone() * b)))
                    .collect();
                let expect: Vec<Rational> = vec.iter().map(|c| c.clone() * &f).collect();
                report.record(image == expect, name, nu, || format!("{image:?} vs {expect:?}"));
            }
        }
    }
    report
}
