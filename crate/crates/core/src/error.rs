use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live over different variable tables")]
    TableMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor contains odd variables")]
    OddDivisor,
    #[error("numerator is not divisible by the divisor")]
    NotDivisible,
    #[error("not a weight vector: {0}")]
    NotAWeightVector(String),
    #[error("hook condition violated: {0}")]
    HookViolation(String),
    #[error("partition {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("result still depends on auxiliary variable {0}")]
    AuxiliaryResidue(String),
    #[error("intermediate result has {terms} terms, above the limit of {limit}")]
    OverBudget { terms: usize, limit: usize },
    #[error("index out of range: {0}")]
    Bounds(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
