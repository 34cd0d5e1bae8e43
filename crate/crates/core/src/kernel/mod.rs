//! Exact coefficient tower: `Q`, `Q(i)`, Laurent polynomials, rational
//! functions in one variable and truncated Laurent series in `λ`.

mod gaussian;
mod laurent;
mod ratfunc;
mod rational;
mod ring;
mod series;

pub use gaussian::GaussianRational;
pub use laurent::{LaurentPoly, TauPoly};
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use ring::Ring;
pub use series::{expand_at_unity, laurent_at_unity, series_exp, series_log, Series};

