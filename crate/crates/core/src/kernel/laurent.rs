use std::collections::BTreeMap;
use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{forward_ring_ops, Ring};
use super::{GaussianRational, Rational};

/// Laurent polynomial `Σ c_k x^k` over a coefficient ring, with no stored zeros.
///
/// The variable is anonymous; callers decide whether it stands for `τ` or
/// `v = q^{1/2}` and pass the name to [`LaurentPoly::display_in`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i64, R>,
}

pub type TauPoly = LaurentPoly<GaussianRational>;

impl<R: Ring> LaurentPoly<R> {
    pub fn from_terms<I: IntoIterator<Item = (i64, R)>>(terms: I) -> Self {
        let mut p = LaurentPoly { terms: BTreeMap::new() };
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: R, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// The monomial `x^exp` with unit coefficient.
    pub fn x_pow(exp: i64) -> Self {
        Self::monomial(R::one(), exp)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &R)> + ExactSizeIterator {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn add_term(&mut self, exp: i64, c: &R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// `d/dx`, exact on Laurent monomials.
    pub fn derivative(&self) -> Self {
        LaurentPoly::from_terms(
            self.terms.iter().map(|(e, c)| (e - 1, c.scale(&Rational::from_int(*e)))),
        )
    }

    /// Evaluate at `x`; fails only when `x` is not invertible and negative
    /// exponents are present.
    pub fn evaluate(&self, x: &R) -> Option<R> {
        let inv = if self.min_exp().is_some_and(|e| e < 0) { Some(x.try_inverse()?) } else { None };
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                x.pow(*e as u32)
            } else {
                inv.as_ref().expect("inverse computed above").pow(e.unsigned_abs() as u32)
            };
            acc = acc + &(c.clone() * &p);
        }
        Some(acc)
    }

    pub fn scale_by(&self, c: &R) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, x)| (*e, x.clone() * c)))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c.clone());
        }
        out
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly { terms: BTreeMap::new() };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca.clone() * cb));
            }
        }
        out
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<R: Ring + fmt::Display> LaurentPoly<R> {
    /// Human-readable form in the named variable, highest exponent first.
    pub fn display_in(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let needs_parens = cs.contains(['+', '-']) && !(cs.starts_with('-') && !cs[1..].contains(['+', '-']));
            let coeff = if needs_parens { format!("({cs})") } else { cs };
            let term = match *e {
                0 => coeff,
                _ => {
                    let mono = if *e == 1 { var.to_string() } else { format!("{var}^{e}") };
                    if c.is_one() {
                        mono
                    } else if (-c.clone()).is_one() {
                        format!("-{mono}")
                    } else {
                        format!("{coeff}*{mono}")
                    }
                }
            };
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }
}

forward_ring_ops!(impl [R: Ring] LaurentPoly<R>);

impl<R: Ring> std::ops::AddAssign<&LaurentPoly<R>> for LaurentPoly<R> {
    fn add_assign(&mut self, rhs: &LaurentPoly<R>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<R: Ring> Ring for LaurentPoly<R> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(R::from_rational(r))
    }

    /// Only monomials with invertible coefficient are units.
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.try_inverse()?, -e))
    }

    fn scale(&self, r: &Rational) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, c.scale(r))))
    }
}

impl<R: Ring> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

/// JSON form: `{"<exp>": <coeff>}` with exponents as decimal strings.
impl<R: Ring + Serialize> Serialize for LaurentPoly<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), c)?;
        }
        map.end()
    }
}

impl<'de, R: Ring + DeserializeOwned> Deserialize<'de> for LaurentPoly<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, R> = BTreeMap::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (k, c) in raw {
            let e: i64 = k.parse().map_err(serde::de::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn zero_terms_are_dropped() {
        let a = LaurentPoly::from_terms([(1, q(2)), (-1, q(3))]);
        let b = LaurentPoly::from_terms([(1, q(-2))]);
        let s = a + &b;
        assert_eq!(s, LaurentPoly::monomial(q(3), -1));
        assert_eq!(s.num_terms(), 1);
    }

    #[test]
    fn product_and_derivative() {
        // (x - x^-1)^2 = x^2 - 2 + x^-2
        let a = LaurentPoly::from_terms([(1, q(1)), (-1, q(-1))]);
        let sq = a.clone() * &a;
        assert_eq!(sq, LaurentPoly::from_terms([(2, q(1)), (0, q(-2)), (-2, q(1))]));
        assert_eq!(sq.derivative(), LaurentPoly::from_terms([(1, q(2)), (-3, q(-2))]));
    }

    #[test]
    fn evaluation_with_negative_exponents() {
        let a = LaurentPoly::from_terms([(2, q(1)), (-1, q(3))]);
        assert_eq!(a.evaluate(&q(-1)).unwrap(), q(-2));
        assert!(a.evaluate(&q(0)).is_none());
    }

    #[test]
    fn json_and_display() {
        let a = LaurentPoly::from_terms([(2, q(1)), (-1, Rational::new(-1, 2))]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"-1":"-1/2","2":"1"}"#);
        let back: LaurentPoly<Rational> = serde_json::from_str(r#"{"-1":"-1/2","2":"1"}"#).unwrap();
        assert_eq!(back, a);
        assert_eq!(a.display_in("tau"), "tau^2 - 1/2*tau^-1");
    }
}
