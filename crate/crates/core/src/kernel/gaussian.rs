use std::fmt;

use serde::{Deserialize, Serialize};

use super::ring::{forward_ring_ops, Ring};
use super::Rational;

/// An element `re + im·i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn imag(im: Rational) -> Self {
        GaussianRational { re: Rational::zero(), im }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::imag(Rational::one())
    }

    /// `i^n` for any integer `n`.
    pub fn i_pow(n: i64) -> Self {
        match n.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> Rational {
        self.re.clone() * &self.re + &(self.im.clone() * &self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.im.is_zero() {
            return GaussianRational { re: &self.re * &rhs.re, im: &self.re * &rhs.im };
        }
        if rhs.im.is_zero() {
            return GaussianRational { re: &self.re * &rhs.re, im: &self.im * &rhs.re };
        }
        GaussianRational {
            re: &self.re * &rhs.re - &(&self.im * &rhs.im),
            im: &self.re * &rhs.im + &(&self.im * &rhs.re),
        }
    }

    fn neg_ref(&self) -> Self {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

forward_ring_ops!(GaussianRational);

impl std::ops::AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }

    fn one() -> Self {
        Self::real(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::real(r.clone())
    }

    fn try_inverse(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        Some(GaussianRational { re: &self.re * &n, im: -(&self.im * &n) })
    }

    fn scale(&self, r: &Rational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, self.im.abs())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::new(Rational::from_int(a), Rational::from_int(b))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(i.clone() * &i, -GaussianRational::one());
        assert_eq!(GaussianRational::i_pow(-1), -GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(6), -GaussianRational::one());
    }

    #[test]
    fn inverse() {
        let z = g(3, -4);
        let inv = z.try_inverse().unwrap();
        assert_eq!(z * &inv, GaussianRational::one());
        assert!(GaussianRational::zero().try_inverse().is_none());
    }

    #[test]
    fn json_form() {
        let z = GaussianRational::new(Rational::new(1, 2), Rational::from_int(-3));
        assert_eq!(serde_json::to_string(&z).unwrap(), r#"{"re":"1/2","im":"-3"}"#);
        assert_eq!(z.to_string(), "1/2-3i");
    }
}
