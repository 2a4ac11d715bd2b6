//! Exact evaluation of lower-Hessenberg determinants and permanents, and
//! their agreement with generalized Fibonacci, Lucas and Perrin polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`] provides the exact coefficient domains (unbounded integers,
//!   Gaussian integers, sparse Laurent polynomials) behind the [`Ring`] trait.
//! * [`hessenberg`] holds the matrix type, the structured determinant and
//!   permanent recursions, permutation-expansion oracles and the four
//!   matrix families `C`, `B`, `H`, `L`.
//! * [`sequences`] generates the recurrence families used as independent
//!   oracles.
//! * [`verify`] runs identity checks over parameter grids and produces
//!   [`VerificationReport`]s.

pub mod error;
pub mod hessenberg;
pub mod ring;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use hessenberg::{brute_det, brute_per, hess_det, hess_per, Family, HessenbergMatrix, OpCount};
pub use ring::{GaussianInt, LaurentPoly, Monomial, Ring, RingValue};
pub use sequences::{SequenceFamily, SequenceSpec};
pub use verify::VerificationReport;
