use std::fmt;
use std::ops::{Add, Sub};

use serde::Serialize;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Integer eigenvalues under an ordered list of Cartan operators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, PartialOrd, Ord)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(len: usize) -> Self {
        WeightVector(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.len(), rhs.len(), "weights of different rank");
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.len(), rhs.len(), "weights of different rank");
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Highest weight `(a_1, ..., a_m; b_1, ..., b_n)` of a `gl(m|n)` module.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HighestWeight {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl HighestWeight {
    pub fn to_weight(&self) -> WeightVector {
        WeightVector(self.a.iter().chain(&self.b).copied().collect())
    }

    /// Both parts weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.a.windows(2).all(|w| w[0] >= w[1]) && self.b.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        let b: Vec<String> = self.b.iter().map(|x| x.to_string()).collect();
        write!(f, "({}; {})", a.join(","), b.join(","))
    }
}

/// `(lambda_1, ..., lambda_m; <lambda'_1 - m>, ..., <lambda'_n - m>)` with
/// `<l> = max(l, 0)`.
pub fn diagram_to_hw(lambda: &Partition, m: usize, n: usize) -> Result<HighestWeight> {
    if lambda.part(m + 1) > n {
        return Err(Error::HookViolation(format!(
            "lambda_{} = {} exceeds {n} for {lambda}",
            m + 1,
            lambda.part(m + 1)
        )));
    }
    let t = lambda.transpose();
    Ok(HighestWeight {
        a: (1..=m).map(|i| lambda.part(i) as i64).collect(),
        b: (1..=n)
            .map(|j| (t.part(j) as i64 - m as i64).max(0))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let hw = diagram_to_hw(&Partition::new(vec![2, 1]), 2, 1).unwrap();
        assert_eq!((hw.a, hw.b), (vec![2, 1], vec![0]));
        // transpose (3,2,2): <3-1>, <2-1>, <2-1>
        let hw = diagram_to_hw(&Partition::new(vec![3, 3, 1]), 1, 3).unwrap();
        assert_eq!((hw.a, hw.b), (vec![3], vec![2, 1, 1]));
        let hw = diagram_to_hw(&Partition::new(vec![4, 2]), 2, 5).unwrap();
        assert_eq!(hw.b, vec![0; 5]);
        assert!(matches!(
            diagram_to_hw(&Partition::new(vec![1, 1]), 1, 0),
            Err(Error::HookViolation(_))
        ));
    }
}
