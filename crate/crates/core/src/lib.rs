//! Ratio vectors of quartic polynomials with four distinct real roots.
//!
//! For a quartic `p` with roots `r1 < r2 < r3 < r4` and critical points
//! `x1 < x2 < x3`, the ratio vector is `(u, v, w)` with
//! `σk = (xk - rk) / (r(k+1) - rk)`. This crate provides
//!
//! * the forward map from roots to ratio vector ([`quartic`]),
//! * an exact membership test for the set of ratio vectors ([`characterization`]),
//! * reconstruction of the canonical quartic `(x+1)x(x-r)(x-s)` from an
//!   admissible triple ([`reconstruction`]),
//! * exact multivariate polynomial arithmetic used to check the algebraic
//!   identities behind all of the above ([`symbolic`]),
//! * seeded randomized campaigns and a command line front end
//!   ([`campaign`], [`cli`]).
//!
//! All numeric code is generic over [`Scalar`], implemented for `f64`,
//! exact [`Rational`] and the quadratic surds [`Surd`].

pub mod campaign;
pub mod characterization;
pub mod cli;
pub mod coefficients;
mod error;
pub mod field;
pub mod quartic;
pub mod reconstruction;
pub mod surd;
pub mod symbolic;

pub use error::{Error, Result};
pub use field::{Rational, Scalar};
pub use surd::Surd;
