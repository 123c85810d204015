//! First-order superdifferential operators and the realizations of
//! `gl(p|q)`, `gl(m|n)` on the polynomial tables.

pub mod derivation;
pub mod realization;
pub mod weight;

pub use derivation::{supercommutator_on, SuperDerivation};
pub use realization::{
    build_glmn, build_glpq, build_s2_glmn, first_non_annihilating, induced_s2_derivation,
    is_highest, weight_of, AlgebraRealization, Base,
};
pub use weight::{diagram_to_hw, HighestWeight, WeightVector};
