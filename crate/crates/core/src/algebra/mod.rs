//! Exact supercommutative polynomial arithmetic over the rationals.

pub mod division;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod text;
pub mod vars;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

pub use division::divide_exact;
pub use matrix::SuperMatrix;
pub use monomial::{mono_mul, SuperMonomial};
pub use poly::{rat, rat_frac, SuperPolynomial};
pub use text::{format_poly, parse_poly};
pub use vars::{Family, Parity, Profile, Var, VarInfo, VarTable};
