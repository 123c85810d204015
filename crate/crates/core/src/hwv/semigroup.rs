//! Search for relations among highest weight vectors of `S(S^2 C^{m|n})`.

use serde::Serialize;

use super::S2Model;
use crate::algebra::{format_poly, Rational, SuperPolynomial};
use crate::combinatorics::{enumerate_even_partitions, Partition};
use crate::error::Result;
use crate::operators::WeightVector;

/// `prod lhs = scalar * prod rhs` for two different multisets of
/// indecomposable highest weight vectors of the same weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub m: usize,
    pub n: usize,
    pub lhs: Vec<Partition>,
    pub rhs: Vec<Partition>,
    #[serde(serialize_with = "ser_rational")]
    pub scalar: Rational,
    pub weight: WeightVector,
    /// Canonical text of the common product (left-hand side).
    pub product: String,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

struct Entry {
    lambda: Partition,
    vector: SuperPolynomial,
    weight: WeightVector,
}

/// Looks for the first relation `v_a v_b = c v_c v_d` among indecomposable
/// vectors `v_lambda` with `|lambda| <= max_size`, where indecomposable means
/// not a nonzero product of two vectors of smaller degree.
pub fn find_s2_relation(m: usize, n: usize, max_size: usize) -> Result<Option<Relation>> {
    let model = S2Model::new(m, n);
    let mut all: Vec<Entry> = Vec::new();
    let mut indecomposable: Vec<usize> = Vec::new();
    for size in (2..=max_size).step_by(2) {
        let start = all.len();
        for lambda in enumerate_even_partitions(size, m, n) {
            let vector = model.hwv_s2(&lambda)?;
            let weight = model.weight(&vector)?;
            all.push(Entry {
                lambda,
                vector,
                weight,
            });
        }
        for idx in start..all.len() {
            let target = &all[idx];
            let mut split = false;
            'outer: for a in 0..start {
                for b in a..start {
                    if &all[a].weight + &all[b].weight == target.weight
                        && !(&all[a].vector * &all[b].vector).is_zero()
                    {
                        split = true;
                        break 'outer;
                    }
                }
            }
            if !split {
                indecomposable.push(idx);
            }
        }
    }

    let pairs: Vec<(usize, usize)> = indecomposable
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| indecomposable[i..].iter().map(move |&b| (a, b)))
        .collect();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        let w = &all[a].weight + &all[b].weight;
        for &(c, d) in &pairs[i + 1..] {
            if &all[c].weight + &all[d].weight != w {
                continue;
            }
            let left = &all[a].vector * &all[b].vector;
            let right = &all[c].vector * &all[d].vector;
            if left.is_zero() || right.is_zero() || !left.proportional(&right) {
                continue;
            }
            let (mono, rc) = right.terms().next().expect("nonzero");
            let scalar = left.coeff(mono) / rc;
            return Ok(Some(Relation {
                m,
                n,
                lhs: vec![all[a].lambda.clone(), all[b].lambda.clone()],
                rhs: vec![all[c].lambda.clone(), all[d].lambda.clone()],
                scalar,
                weight: w,
                product: format_poly(&left),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_for_small_n() {
        assert!(find_s2_relation(1, 1, 6).unwrap().is_none());
    }

    #[test]
    fn relation_for_n_two() {
        let r = find_s2_relation(1, 2, 6).unwrap().expect("relation");
        assert_eq!(r.lhs, vec!["2".parse().unwrap(), "2,2,2".parse().unwrap()]);
        assert_eq!(r.rhs, vec!["2,2".parse().unwrap(), "2,2".parse().unwrap()]);
    }
}
