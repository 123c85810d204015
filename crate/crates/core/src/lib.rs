//! Highest weight vectors for super Howe dualities.
//!
//! The crate builds explicit highest weight vectors in the supersymmetric
//! algebras `S(C^{p|q} (x) C^{m|n})` and `S(S^2 C^{m|n})` and checks them,
//! together with the character identities behind the decompositions, in
//! exact rational arithmetic.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod hwv;
pub mod operators;
pub mod report;
pub mod symfunc;
pub mod verify;

pub use algebra::{Rational, SuperMatrix, SuperMonomial, SuperPolynomial, Var, VarTable};
pub use combinatorics::Partition;
pub use error::{Error, Result};
pub use report::{Counterexample, Status, VerificationReport};

/// Library version, embedded in every serialized report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
