use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// A commutative ring containing the rationals.
///
/// Every coefficient domain in this crate is a `Q`-algebra: rationals,
/// Gaussian rationals, Laurent polynomials over either, and rational
/// functions. Arithmetic takes the right operand by reference so that
/// accumulation loops do not need to clone both sides.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    /// Multiplicative inverse, if it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;

    fn scale(&self, r: &Rational) -> Self {
        self.clone() * &Self::from_rational(r)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// Implements the owned/borrowed operator matrix for a type that provides
/// `add_ref`, `sub_ref`, `mul_ref` and `neg_ref`.
macro_rules! forward_ring_ops {
    (impl [$($g:tt)*] $t:ty) => {
        impl<$($g)*> std::ops::Add<&$t> for $t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl<$($g)*> std::ops::Add<$t> for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                self.add_ref(&rhs)
            }
        }
        impl<$($g)*> std::ops::Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl<$($g)*> std::ops::Sub<&$t> for $t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl<$($g)*> std::ops::Sub<$t> for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                self.sub_ref(&rhs)
            }
        }
        impl<$($g)*> std::ops::Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl<$($g)*> std::ops::Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl<$($g)*> std::ops::Mul<$t> for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                self.mul_ref(&rhs)
            }
        }
        impl<$($g)*> std::ops::Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl<$($g)*> std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl<$($g)*> std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
    };
    ($t:ty) => {
        forward_ring_ops!(impl [] $t);
    };
}

pub(crate) use forward_ring_ops;
