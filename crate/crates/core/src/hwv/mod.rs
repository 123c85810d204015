//! Explicit highest weight vectors and the determinant identities behind them.

pub mod s2;
pub mod semigroup;
pub mod tensor;

use num_bigint::BigInt;

use crate::algebra::{Rational, SuperPolynomial};
use crate::error::{Error, Result};

pub use s2::{bordered_det, verify_bordered_det, verify_s2_identities, S2IdentityOutcome, S2Model};
pub use semigroup::{find_s2_relation, Relation};
pub use tensor::{
    identity_cor_factors, verify_identity_cor, verify_keylemma, verify_maincor, MaincorOutcome,
    TensorModel,
};

/// Environment variable holding the default term limit.
pub const MAX_TERMS_ENV: &str = "SUPERHOWE_MAX_TERMS";

/// Upper bound on the number of terms of intermediate polynomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_terms: Option<usize>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_terms: None }
    }

    pub fn limit(max_terms: usize) -> Self {
        Budget {
            max_terms: Some(max_terms),
        }
    }

    /// Reads [`MAX_TERMS_ENV`]; unset or unparsable means unlimited.
    pub fn from_env() -> Self {
        Budget {
            max_terms: std::env::var(MAX_TERMS_ENV).ok().and_then(|s| s.trim().parse().ok()),
        }
    }

    pub fn check(&self, f: &SuperPolynomial) -> Result<()> {
        match self.max_terms {
            Some(limit) if f.len() > limit => Err(Error::OverBudget {
                terms: f.len(),
                limit,
            }),
            _ => Ok(()),
        }
    }
}

pub(crate) fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).map(BigInt::from).product())
}
