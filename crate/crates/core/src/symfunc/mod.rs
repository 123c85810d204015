//! Schur and hook Schur polynomials and the generating-function identities
//! they satisfy.

pub mod identities;
pub mod schur;

pub use identities::{
    dual_pairs, family_vars, verify_classical_quartet, verify_s2_characters, verify_super_cauchy,
    verify_super_dual_cauchy,
};
pub use schur::{hook_schur, schur, skew_schur, sub_partitions, HookSchurEngine, SchurEngine};
