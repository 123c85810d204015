//! Theorem-level verification: character decompositions and exhaustive
//! highest weight vector suites.

pub mod characters;
pub mod suite;

pub use characters::{
    graded_dimension, verify_lambda_s2_decomposition, verify_s2_decomposition,
    verify_skew_duality, verify_tensor_duality,
};
pub use suite::{
    map_cells, run_cross_checks, run_default_suite, run_hwv_suite, run_s2_cell, run_tensor_cell,
    verify_determinant_identities, verify_s2_semigroup, CaseGrid,
};
