use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ring::{forward_ring_ops, Ring};
use super::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials over `Q` in a single variable.
///
/// Canonical form: numerator and denominator are coprime, the denominator is
/// an ordinary polynomial with nonzero constant term and leading coefficient
/// one, and zero is `0/1`. Equality of canonical forms is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    num: LaurentPoly<Rational>,
    den: LaurentPoly<Rational>,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly<Rational>, den: LaurentPoly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(canonicalize(&num, &den))
    }

    pub fn from_poly(p: LaurentPoly<Rational>) -> Self {
        canonicalize(&p, &LaurentPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// The monomial `x^k`.
    pub fn x_pow(k: i64) -> Self {
        RationalFunction { num: LaurentPoly::x_pow(k), den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(canonicalize(&(self.num.clone() * &rhs.den), &(self.den.clone() * &rhs.num)))
    }

    /// Substitute `x -> x^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0);
        let sub = |p: &LaurentPoly<Rational>| LaurentPoly::from_terms(p.terms().map(|(e, c)| (e * k, c.clone())));
        canonicalize(&sub(&self.num), &sub(&self.den))
    }

    /// Evaluate at a rational point, `None` if the denominator vanishes there.
    pub fn evaluate(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.evaluate(x)?;
        if d.is_zero() {
            return None;
        }
        self.num.evaluate(x)?.div(&d).ok()
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.display_in(var)
        } else {
            format!("({}) / ({})", self.num.display_in(var), self.den.display_in(var))
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return canonicalize(&(self.num.clone() + &rhs.num), &self.den);
        }
        canonicalize(
            &(self.num.clone() * &rhs.den + &(rhs.num.clone() * &self.den)),
            &(self.den.clone() * &rhs.den),
        )
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction { num: self.num.clone() * &rhs.num, den: LaurentPoly::one() };
        }
        canonicalize(&(self.num.clone() * &rhs.num), &(self.den.clone() * &rhs.den))
    }

    fn neg_ref(&self) -> Self {
        RationalFunction { num: -self.num.clone(), den: self.den.clone() }
    }
}

forward_ring_ops!(RationalFunction);

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    fn one() -> Self {
        RationalFunction { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(canonicalize(&self.den, &self.num))
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(r), den: self.den.clone() }
    }
}

impl From<LaurentPoly<Rational>> for RationalFunction {
    fn from(p: LaurentPoly<Rational>) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

fn canonicalize(num: &LaurentPoly<Rational>, den: &LaurentPoly<Rational>) -> RationalFunction {
    if num.is_zero() {
        return RationalFunction::zero();
    }
    let a = num.min_exp().expect("nonzero");
    let b = den.min_exp().expect("nonzero denominator");
    let mut n = to_dense(num, a);
    let mut d = to_dense(den, b);
    if d.len() > 1 && n.len() > 1 {
        let g = gcd_primitive(&n, &d);
        if g.len() > 1 {
            let g = g.into_iter().map(Rational::from_bigint).collect::<Vec<_>>();
            n = exact_div(&n, &g);
            d = exact_div(&d, &g);
        }
    }
    let lc = d.last().expect("nonzero").recip().expect("nonzero leading coefficient");
    let num = LaurentPoly::from_terms(n.iter().enumerate().map(|(i, c)| (i as i64 + a - b, c.clone() * &lc)));
    let den = LaurentPoly::from_terms(d.iter().enumerate().map(|(i, c)| (i as i64, c.clone() * &lc)));
    RationalFunction { num, den }
}

/// Dense coefficient vector of `p / x^shift`, index = degree.
pub(crate) fn to_dense(p: &LaurentPoly<Rational>, shift: i64) -> Vec<Rational> {
    let top = p.max_exp().map_or(0, |m| m - shift);
    let mut out = vec![Rational::zero(); top as usize + 1];
    for (e, c) in p.terms() {
        out[(e - shift) as usize] = c.clone();
    }
    out
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Exact quotient of dense polynomials over `Q`; the remainder must be zero.
fn exact_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return vec![Rational::zero()];
    }
    let lead_inv = b[db].recip().expect("nonzero divisor");
    let mut rem = a.to_vec();
    let mut quot = vec![Rational::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone() * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[k + j] = rem[k + j].clone() - &(c.clone() * bj);
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// Scale a rational polynomial to a primitive integer polynomial.
fn primitive_integer(p: &[Rational]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    primitive_part(ints)
}

fn primitive_part(mut p: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut p);
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return p;
    }
    let sign_fix = p.last().is_some_and(|c| c.is_negative());
    let content = if sign_fix { -content } else { content };
    if !content.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &content;
        }
    }
    p
}

fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[off + j] -= &lr * bj;
        }
        r.pop();
        trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    r
}

/// Greatest common divisor of two dense rational polynomials, returned as a
/// primitive integer polynomial with positive leading coefficient.
fn gcd_primitive(a: &[Rational], b: &[Rational]) -> Vec<BigInt> {
    let mut x = primitive_integer(a);
    let mut y = primitive_integer(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !(y.len() == 1 && y[0].is_zero()) {
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = pseudo_remainder(&x, &y);
        x = y;
        y = primitive_part(r);
    }
    x
}

/// Multiplicity of `x = 1` as a root of a nonzero Laurent polynomial.
pub(crate) fn multiplicity_at_one(p: &LaurentPoly<Rational>) -> usize {
    let shift = p.min_exp().expect("nonzero polynomial");
    let mut coeffs = to_dense(p, shift);
    let mut mult = 0;
    loop {
        let value = coeffs.iter().fold(Rational::zero(), |acc, c| acc + c);
        if !value.is_zero() || coeffs.len() <= 1 {
            return mult;
        }
        // Synthetic division by (x - 1).
        let n = coeffs.len() - 1;
        let mut q = vec![Rational::zero(); n];
        let mut carry = Rational::zero();
        for k in (0..n).rev() {
            carry += &coeffs[k + 1];
            q[k] = carry.clone();
        }
        coeffs = q;
        mult += 1;
    }
}
