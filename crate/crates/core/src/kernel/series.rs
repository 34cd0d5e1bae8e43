use std::fmt;

use serde::{Deserialize, Serialize};

use super::ratfunc::{multiplicity_at_one, RationalFunction};
use super::ring::Ring;
use super::{GaussianRational, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Truncated Laurent series `Σ_{k=valuation}^{order} c_k λ^k + O(λ^{order+1})`.
///
/// The coefficient at `valuation` is nonzero unless the series is zero to
/// its declared order, in which case `coeffs` is empty and
/// `valuation == order + 1`. Arithmetic tracks how far each result is known.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Ring + serde::de::DeserializeOwned"))]
pub struct Series<R> {
    valuation: i64,
    order: i64,
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Build from coefficients starting at `start`, known up to `order`.
    /// Coefficients beyond `order` are dropped.
    pub fn new(start: i64, mut coeffs: Vec<R>, order: i64) -> Self {
        let keep = (order - start + 1).max(0) as usize;
        coeffs.truncate(keep);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(order),
            Some(k) => {
                coeffs.drain(..k);
                let mut s = Series { valuation: start + k as i64, order, coeffs };
                s.pad();
                s
            }
        }
    }

    pub fn zero(order: i64) -> Self {
        Series { valuation: order + 1, order, coeffs: Vec::new() }
    }

    pub fn constant(c: R, order: i64) -> Self {
        Self::new(0, vec![c], order)
    }

    pub fn one(order: i64) -> Self {
        Self::constant(R::one(), order)
    }

    /// The monomial `c λ^k` known to `order`.
    pub fn monomial(c: R, k: i64, order: i64) -> Self {
        Self::new(k, vec![c], order)
    }

    fn pad(&mut self) {
        let len = (self.order - self.valuation + 1).max(0) as usize;
        self.coeffs.resize(len, R::zero());
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `λ^k`; `None` beyond the known order.
    pub fn coeff(&self, k: i64) -> Option<R> {
        if k > self.order {
            None
        } else if k < self.valuation {
            Some(R::zero())
        } else {
            Some(self.coeffs[(k - self.valuation) as usize].clone())
        }
    }

    /// Coefficient of `λ^k`, failing loudly when `k` is beyond the order.
    pub fn coeff_checked(&self, k: i64) -> Result<R> {
        self.coeff(k).ok_or(Error::InsufficientPrecision { required: k, available: self.order })
    }

    /// `(exponent, coefficient)` pairs for the nonzero known terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        let v = self.valuation;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (v + i as i64, c))
    }

    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        Self::new(self.valuation, self.coeffs.clone(), order)
    }

    /// Require the series to be known at least to `order`, then cut to it.
    pub fn require_order(&self, order: i64) -> Result<Self> {
        if self.order < order {
            return Err(Error::InsufficientPrecision { required: order, available: self.order });
        }
        Ok(self.truncate(order))
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series::new(self.valuation, self.coeffs.iter().map(f).collect(), self.order)
    }

    /// Multiply by `λ^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero(self.order + k);
        }
        Series { valuation: self.valuation + k, order: self.order + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map_coeffs(|x| x.clone() * c)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|x| x.scale(r))
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|x| -x.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let start = self.valuation.min(rhs.valuation);
        if start > order {
            return Self::zero(order);
        }
        let len = (order - start + 1) as usize;
        let mut coeffs = vec![R::zero(); len];
        for (src, v) in [(&self.coeffs, self.valuation), (&rhs.coeffs, rhs.valuation)] {
            for (i, c) in src.iter().enumerate() {
                let k = v + i as i64;
                if k > order {
                    break;
                }
                let slot = &mut coeffs[(k - start) as usize];
                *slot = slot.clone() + c;
            }
        }
        Self::new(start, coeffs, order)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = (self.order + rhs.valuation).min(rhs.order + self.valuation);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(order);
        }
        let start = self.valuation + rhs.valuation;
        if start > order {
            return Self::zero(order);
        }
        let len = (order - start + 1) as usize;
        let mut coeffs = vec![R::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + &(a.clone() * b);
                }
            }
        }
        Self::new(start, coeffs, order)
    }

    /// Laurent division; the divisor's lowest coefficient must be a unit.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::InsufficientPrecision { required: rhs.order + 1, available: rhs.order });
        }
        let lead_inv = rhs.coeffs[0]
            .try_inverse()
            .ok_or_else(|| Error::Domain("leading coefficient of divisor is not invertible".into()))?;
        let va = self.valuation;
        let vb = rhs.valuation;
        if self.is_zero() {
            return Ok(Self::zero(self.order - vb));
        }
        let order = (self.order - vb).min(rhs.order - 2 * vb + va);
        let start = va - vb;
        if start > order {
            return Ok(Self::zero(order));
        }
        let len = (order - start + 1) as usize;
        let mut out: Vec<R> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = self.coeffs.get(n).cloned().unwrap_or_else(R::zero);
            for k in 1..=n.min(rhs.coeffs.len().saturating_sub(1)) {
                if !rhs.coeffs[k].is_zero() {
                    acc = acc - &(rhs.coeffs[k].clone() * &out[n - k]);
                }
            }
            out.push(acc * &lead_inv);
        }
        Ok(Self::new(start, out, order))
    }

    /// `d/dλ`.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero(self.order - 1);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from_int(self.valuation + i as i64)))
            .collect();
        Self::new(self.valuation - 1, coeffs, self.order - 1)
    }

    /// Formal antiderivative with zero constant term; requires no `λ^{-1}` term.
    fn integrate(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero(self.order + 1));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.valuation + i as i64;
            if k == -1 {
                if !c.is_zero() {
                    return Err(Error::Domain("cannot integrate a λ^-1 term".into()));
                }
                coeffs.push(R::zero());
            } else {
                coeffs.push(c.scale(&Rational::new(1, k + 1)));
            }
        }
        Ok(Self::new(self.valuation + 1, coeffs, self.order + 1))
    }

    /// `log(s)` for `s = 1 + O(λ)`, via `log(s)' = s'/s`.
    pub fn log(&self) -> Result<Self> {
        if self.valuation != 0 || !self.coeffs[0].is_one() {
            return Err(Error::Domain("logarithm needs constant term 1 and valuation 0".into()));
        }
        let quotient = self.derivative().div(self)?;
        quotient.integrate()
    }

    /// `exp(s)` for `s = O(λ)`.
    pub fn exp(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::one(self.order));
        }
        if self.valuation < 1 {
            return Err(Error::Domain("exponential needs a series with positive valuation".into()));
        }
        let order = self.order;
        let mut acc = Self::one(order);
        let mut power = Self::one(order);
        let mut k = 1;
        while k * self.valuation <= order {
            power = power.mul(self).scale(&Rational::new(1, k));
            acc = acc.add(&power);
            k += 1;
        }
        Ok(acc)
    }

    /// Coefficients as `(start, list)` covering `valuation..=order`.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }
}

impl<R: Ring + fmt::Display> Series<R> {
    pub fn display_in(&self, var: &str) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.terms() {
            let cs = c.to_string();
            let cs = if cs.contains(['+', ' ']) || cs[1..].contains('-') { format!("({cs})") } else { cs };
            parts.push(match k {
                0 => cs,
                1 => format!("{cs}*{var}"),
                _ => format!("{cs}*{var}^{k}"),
            });
        }
        parts.push(format!("O({var}^{})", self.order + 1));
        parts.join(" + ")
    }
}

impl<R: Ring> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(val={}, order={}, {:?})", self.valuation, self.order, self.coeffs)
    }
}

/// `exp(cλ) = Σ_{k ≤ order} c^k λ^k / k!`.
pub fn series_exp<R: Ring>(c: &R, order: i64) -> Series<R> {
    assert!(order >= 0, "series_exp needs a nonnegative order");
    let mut coeffs = Vec::with_capacity(order as usize + 1);
    let mut term = R::one();
    coeffs.push(term.clone());
    for k in 1..=order {
        if c.is_zero() {
            break;
        }
        term = (term * c).scale(&Rational::new(1, k));
        coeffs.push(term.clone());
    }
    Series::new(0, coeffs, order)
}

pub fn series_log<R: Ring>(s: &Series<R>) -> Result<Series<R>> {
    s.log()
}

/// Expansion of a Laurent polynomial in `v` at `v = e^{iλ/2}`, to `order`.
///
/// Coefficient of `λ^n` is `(i/2)^n / n! · Σ_k c_k k^n`.
pub fn laurent_at_unity(p: &LaurentPoly<Rational>, order: i64) -> Series<GaussianRational> {
    if order < 0 {
        return Series::zero(order);
    }
    let mut coeffs = Vec::with_capacity(order as usize + 1);
    let terms: Vec<(Rational, Rational)> = p.terms().map(|(e, c)| (Rational::from_int(e), c.clone())).collect();
    let mut powers: Vec<Rational> = vec![Rational::one(); terms.len()];
    let mut factor = Rational::one();
    for n in 0..=order {
        if n > 0 {
            factor = factor.scale(&Rational::new(1, 2 * n));
            for (pw, (e, _)) in powers.iter_mut().zip(&terms) {
                *pw = pw.clone() * e;
            }
        }
        let sum = terms.iter().zip(&powers).fold(Rational::zero(), |acc, ((_, c), pw)| acc + &(c.clone() * pw));
        let value = GaussianRational::i_pow(n).scale(&(sum * &factor));
        coeffs.push(value);
    }
    Series::new(0, coeffs, order)
}

/// Expand a rational function in `v` at `v = e^{iλ/2}` (that is `q = e^{iλ}`)
/// as a Laurent series in `λ` known to `order`.
pub fn expand_at_unity(f: &RationalFunction, order: i64) -> Result<Series<GaussianRational>> {
    if f.is_zero() {
        return Ok(Series::zero(order));
    }
    let vn = multiplicity_at_one(f.num()) as i64;
    let vd = multiplicity_at_one(f.den()) as i64;
    let num = laurent_at_unity(f.num(), order + vd);
    let den = laurent_at_unity(f.den(), order - vn + 2 * vd);
    if den.is_zero() {
        return Err(Error::InsufficientPrecision { required: order - vn + 2 * vd + 1, available: den.order() });
    }
    let out = num.div(&den)?;
    debug_assert_eq!(out.valuation(), vn - vd);
    out.require_order(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn gi(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational::new(re, im)
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly<Rational> {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_int(c))))
    }

    #[test]
    fn exp_of_zero_and_one() {
        assert_eq!(series_exp(&Rational::zero(), 3), Series::one(3));
        let s = series_exp(&Rational::one(), 2);
        assert_eq!(s.coeffs(), &[q(1, 1), q(1, 1), q(1, 2)]);
        assert_eq!(s.order(), 2);
    }

    #[test]
    fn exp_with_tau_coefficient() {
        // exp(iτλ) to order 2 = 1 + iτλ - τ²λ²/2
        let itau = LaurentPoly::monomial(GaussianRational::i(), 1);
        let s = series_exp(&itau, 2);
        assert_eq!(s.coeff(0).unwrap(), LaurentPoly::one());
        assert_eq!(s.coeff(1).unwrap(), itau);
        assert_eq!(s.coeff(2).unwrap(), LaurentPoly::monomial(GaussianRational::real(q(-1, 2)), 2));
    }

    #[test]
    fn log_examples() {
        assert!(series_log(&Series::<Rational>::one(4)).unwrap().is_zero());
        let s = Series::new(0, vec![q(1, 1), q(1, 1)], 3);
        let l = series_log(&s).unwrap();
        assert_eq!(l.coeffs(), &[q(1, 1), q(-1, 2), q(1, 3)]);
        assert_eq!(l.valuation(), 1);
        assert_eq!(l.order(), 3);
        let bad = Series::new(0, vec![q(2, 1)], 3);
        assert!(matches!(series_log(&bad), Err(Error::Domain(_))));
    }

    #[test]
    fn expand_constant() {
        let one = RationalFunction::one();
        assert_eq!(expand_at_unity(&one, 4).unwrap(), Series::one(4));
    }

    #[test]
    fn expand_bracket_one() {
        // v - 1/v = 2i sin(λ/2) = iλ - iλ³/24 + ...
        let f = RationalFunction::from_poly(poly(&[(1, 1), (-1, -1)]));
        let s = expand_at_unity(&f, 3).unwrap();
        assert_eq!(s.valuation(), 1);
        assert_eq!(s.coeff(1).unwrap(), gi(q(0, 1), q(1, 1)));
        assert_eq!(s.coeff(2).unwrap(), GaussianRational::zero());
        assert_eq!(s.coeff(3).unwrap(), gi(q(0, 1), q(-1, 24)));
        assert_eq!(s.order(), 3);
    }

    #[test]
    fn expand_cosecant() {
        // 1/(v - 1/v) = -i(λ^-1 + λ/24 + 7λ³/5760)
        let f = RationalFunction::new(poly(&[(0, 1)]), poly(&[(1, 1), (-1, -1)])).unwrap();
        let s = expand_at_unity(&f, 3).unwrap();
        assert_eq!(s.valuation(), -1);
        assert_eq!(s.coeff(-1).unwrap(), gi(q(0, 1), q(-1, 1)));
        assert_eq!(s.coeff(0).unwrap(), GaussianRational::zero());
        assert_eq!(s.coeff(1).unwrap(), gi(q(0, 1), q(-1, 24)));
        assert_eq!(s.coeff(2).unwrap(), GaussianRational::zero());
        assert_eq!(s.coeff(3).unwrap(), gi(q(0, 1), q(-7, 5760)));
        assert_eq!(s.order(), 3);
    }

    #[test]
    fn precision_tracking() {
        let a = Series::new(-1, vec![q(1, 1), q(2, 1)], 3);
        let b = Series::new(0, vec![q(1, 1)], 2);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.add(&b).order(), 2);
        assert!(a.coeff(4).is_none());
        assert!(matches!(a.coeff_checked(4), Err(Error::InsufficientPrecision { .. })));
        assert!(matches!(b.require_order(5), Err(Error::InsufficientPrecision { .. })));
    }

    #[test]
    fn division_by_zero_series_is_a_precision_error() {
        let a = Series::<Rational>::one(3);
        assert!(matches!(a.div(&Series::zero(3)), Err(Error::InsufficientPrecision { .. })));
    }
}
