//! Exact computation and cross-verification of the combinatorial side of the
//! two-partition Hodge integral formula.
//!
//! The crate is layered bottom-up:
//!
//! - [`kernel`]: exact arithmetic (rationals, Gaussian rationals, Laurent
//!   polynomials, rational functions, truncated Laurent series);
//! - [`partitions`] and [`characters`]: partitions and symmetric-group
//!   characters (Murnaghan–Nakayama with memoization);
//! - [`symfun`]: Schur functions in power sums, Jacobi–Trudi specializations,
//!   the cut-and-join operator;
//! - [`wfunctions`]: the Hopf-link invariants `W_μ`, `W_{μ,ν}` by two routes;
//! - [`hurwitz`]: double Hurwitz numbers as exact exponential sums,
//!   cut-and-join matrices;
//! - [`family`]: bigraded families of `λ`-series indexed by partition pairs,
//!   with exp/log;
//! - [`hodge`]: the generating function `R•`, its cut-and-join equation,
//!   initial values, `K•`, and extraction of Hodge coefficients;
//! - [`verify`]: the verification suites behind the `verify` CLI command.

pub mod characters;
pub mod error;
pub mod family;
pub mod hodge;
pub mod hurwitz;
pub mod kernel;
pub mod partitions;
pub mod symfun;
pub mod verify;
pub mod wfunctions;

pub use error::{Error, Result};
pub use kernel::{GaussianRational, LaurentPoly, Rational, RationalFunction, Ring, Series, TauPoly};
pub use partitions::Partition;
