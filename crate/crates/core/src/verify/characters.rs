//! Decomposition checks at the level of characters.
//!
//! The left side of each check is the character of a graded piece computed
//! by listing its monomial basis; the right side is the sum of hook Schur
//! products indexed by the predicted highest weights.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use rustc_hash::FxHashMap;

use crate::algebra::{format_poly, Family, Rational, SuperMonomial, SuperPolynomial, Var, VarTable};
use crate::combinatorics::{
    enumerate_even_partitions, enumerate_hook_partitions, enumerate_nested_hook_partitions,
    HookFlavor, Partition,
};
use crate::operators::{diagram_to_hw, WeightVector};
use crate::report::{Counterexample, VerificationReport};
use crate::symfunc::{dual_pairs, family_vars, HookSchurEngine};

/// A generator of the algebra: its parity and the character monomial it
/// contributes (a product of two character variables).
#[derive(Clone, Copy, Debug)]
struct Generator {
    odd: bool,
    weight: [Var; 2],
}

/// Character of the degree-`k` piece of the free supercommutative algebra
/// on `gens`, by enumerating exponent vectors (odd exponents at most 1).
fn graded_character(table: &Arc<VarTable>, gens: &[Generator], k: usize) -> SuperPolynomial {
    fn go(
        gens: &[Generator],
        idx: usize,
        left: usize,
        exps: &mut Vec<u32>,
        out: &mut FxHashMap<Vec<u32>, u64>,
    ) {
        if idx == gens.len() {
            if left == 0 {
                *out.entry(exps.clone()).or_default() += 1;
            }
            return;
        }
        let cap = if gens[idx].odd { left.min(1) } else { left };
        for e in 0..=cap {
            for v in gens[idx].weight {
                exps[v.index()] += e as u32;
            }
            go(gens, idx + 1, left - e, exps, out);
            for v in gens[idx].weight {
                exps[v.index()] -= e as u32;
            }
        }
    }
    let mut counts = FxHashMap::default();
    go(gens, 0, k, &mut vec![0; table.len()], &mut counts);
    let vars: Vec<Var> = table.vars().collect();
    SuperPolynomial::from_terms(
        table,
        counts.into_iter().map(|(exps, c)| {
            let even = vars.iter().zip(exps).map(|(&v, e)| (v, e));
            let (_, mono) = SuperMonomial::from_parts(even, []).expect("commuting variables");
            (mono, Rational::from_integer(c.into()))
        }),
    )
}

/// `dim` of the degree-`k` piece of the free algebra on `even` commuting and
/// `odd` anticommuting generators.
pub fn graded_dimension(even: usize, odd: usize, k: usize) -> u128 {
    fn binom(n: u128, r: u128) -> u128 {
        if r > n {
            return 0;
        }
        (0..r).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
    }
    (0..=k.min(odd))
        .map(|j| {
            let rest = (k - j) as u128;
            let multisets = if rest == 0 {
                1
            } else if even == 0 {
                0
            } else {
                binom(even as u128 + rest - 1, rest)
            };
            binom(odd as u128, j as u128) * multisets
        })
        .sum()
}

fn coefficient_sum(f: &SuperPolynomial) -> Rational {
    f.terms().fold(Rational::zero(), |acc, (_, c)| acc + c)
}

fn mismatch(label: &str, k: usize, lhs: &SuperPolynomial, rhs: &SuperPolynomial) -> Counterexample {
    let diff = lhs - rhs;
    let detail = match diff.least_term() {
        Some((mono, _)) => {
            let one = SuperPolynomial::monomial(lhs.table(), mono.clone(), Rational::from_integer(1.into()));
            format!(
                "degree {k}: coefficient of {} is {} in the monomial count, {} in the hook Schur sum",
                format_poly(&one),
                lhs.coeff(mono),
                rhs.coeff(mono)
            )
        }
        None => format!("degree {k}: characters agree"),
    };
    Counterexample {
        lambda: None,
        operator: Some(label.to_string()),
        detail,
    }
}

/// Shared driver: for each `k`, compare the monomial character with the
/// weighted hook Schur sum and run the counting and dimension checks.
fn run_degrees(
    report: &mut VerificationReport,
    table: &Arc<VarTable>,
    gens: &[Generator],
    max_k: usize,
    mut terms: impl FnMut(usize) -> Vec<(Partition, SuperPolynomial, WeightVector)>,
) {
    let even = gens.iter().filter(|g| !g.odd).count();
    let odd = gens.len() - even;
    for k in 0..=max_k {
        let lhs = graded_character(table, gens, k);
        let parts = terms(k);
        let mut rhs = SuperPolynomial::zero(table);
        for (_, f, _) in &parts {
            rhs = &rhs + f;
        }
        report.record(lhs == rhs, || mismatch("character", k, &lhs, &rhs));

        let weights: BTreeSet<&WeightVector> = parts.iter().map(|p| &p.2).collect();
        let zero_term = parts.iter().find(|p| p.1.is_zero());
        report.record(weights.len() == parts.len() && zero_term.is_none(), || Counterexample {
            lambda: zero_term.map(|p| p.0.to_string()),
            operator: Some("multiplicity".into()),
            detail: format!(
                "degree {k}: {} summands but {} distinct highest weights",
                parts.len(),
                weights.len()
            ),
        });

        let dim = Rational::from_integer(graded_dimension(even, odd, k).into());
        let got = coefficient_sum(&rhs);
        report.record(got == dim, || Counterexample {
            lambda: None,
            operator: Some("dimension".into()),
            detail: format!("degree {k}: dimension {dim} but the hook Schur sum gives {got}"),
        });
    }
}

fn tensor_generators(table: &VarTable, p: usize, q: usize, m: usize, n: usize, flip: bool) -> Vec<Generator> {
    let x = family_vars(table, Family::X);
    let y = family_vars(table, Family::Y);
    let u = family_vars(table, Family::U);
    let v = family_vars(table, Family::V);
    let mut gens = Vec::new();
    for l in 0..m {
        for i in 0..p {
            gens.push(Generator { odd: flip, weight: [x[i], u[l]] });
        }
    }
    for l in 0..m {
        for j in 0..q {
            gens.push(Generator { odd: !flip, weight: [y[j], u[l]] });
        }
    }
    for k in 0..n {
        for i in 0..p {
            gens.push(Generator { odd: !flip, weight: [x[i], v[k]] });
        }
    }
    for k in 0..n {
        for j in 0..q {
            gens.push(Generator { odd: flip, weight: [y[j], v[k]] });
        }
    }
    gens
}

/// `S^k(C^{p|q} (x) C^{m|n}) = sum HS_lambda(x;y) HS_lambda(u;v)` for `k <= max_k`.
pub fn verify_tensor_duality(p: usize, q: usize, m: usize, n: usize, max_k: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "tensor-duality",
        &[("p", p), ("q", q), ("m", m), ("n", n)],
        max_k,
    );
    let table = VarTable::character(p, q, m, n);
    let gens = tensor_generators(&table, p, q, m, n, false);
    let (x, y, u, v) = (
        family_vars(&table, Family::X),
        family_vars(&table, Family::Y),
        family_vars(&table, Family::U),
        family_vars(&table, Family::V),
    );
    let mut left = HookSchurEngine::new(&table, &x, &y).expect("even");
    let mut right = HookSchurEngine::new(&table, &u, &v).expect("even");
    run_degrees(&mut report, &table, &gens, max_k, |k| {
        enumerate_hook_partitions(k, p, q, m, n)
            .into_iter()
            .map(|l| {
                let f = &left.hook_schur(&l) * &right.hook_schur(&l);
                let w = diagram_to_hw(&l, p, q)
                    .expect("hook")
                    .to_weight()
                    .concat(&diagram_to_hw(&l, m, n).expect("hook").to_weight());
                (l, f, w)
            })
            .collect()
    });
    report
}

/// `Lambda^k(C^{p|q} (x) C^{m|n}) = sum HS_lambda(x;y) HS_{lambda'}(u;v)`.
pub fn verify_skew_duality(p: usize, q: usize, m: usize, n: usize, max_k: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "skew-duality",
        &[("p", p), ("q", q), ("m", m), ("n", n)],
        max_k,
    );
    let table = VarTable::character(p, q, m, n);
    let gens = tensor_generators(&table, p, q, m, n, true);
    let (x, y, u, v) = (
        family_vars(&table, Family::X),
        family_vars(&table, Family::Y),
        family_vars(&table, Family::U),
        family_vars(&table, Family::V),
    );
    let mut left = HookSchurEngine::new(&table, &x, &y).expect("even");
    let mut right = HookSchurEngine::new(&table, &u, &v).expect("even");
    run_degrees(&mut report, &table, &gens, max_k, |k| {
        dual_pairs(k, p, q, m, n)
            .into_iter()
            .map(|l| {
                let lt = l.transpose();
                let f = &left.hook_schur(&l) * &right.hook_schur(&lt);
                let w = diagram_to_hw(&l, p, q)
                    .expect("hook")
                    .to_weight()
                    .concat(&diagram_to_hw(&lt, m, n).expect("hook").to_weight());
                (l, f, w)
            })
            .collect()
    });
    report
}

fn s2_generators(table: &VarTable, flip: bool) -> Vec<Generator> {
    let x = family_vars(table, Family::X);
    let y = family_vars(table, Family::Y);
    let mut gens = Vec::new();
    for i in 0..x.len() {
        for j in i..x.len() {
            gens.push(Generator { odd: flip, weight: [x[i], x[j]] });
        }
    }
    for k in 0..y.len() {
        for l in k + 1..y.len() {
            gens.push(Generator { odd: flip, weight: [y[k], y[l]] });
        }
    }
    for k in 0..y.len() {
        for i in 0..x.len() {
            gens.push(Generator { odd: !flip, weight: [y[k], x[i]] });
        }
    }
    gens
}

fn s2_run(name: &str, m: usize, n: usize, max_k: usize, exterior: bool) -> VerificationReport {
    let mut report = VerificationReport::new(name, &[("m", m), ("n", n)], max_k);
    let table = VarTable::character(m, n, 0, 0);
    let gens = s2_generators(&table, exterior);
    let x = family_vars(&table, Family::X);
    let y = family_vars(&table, Family::Y);
    let mut hs = HookSchurEngine::new(&table, &x, &y).expect("even");
    run_degrees(&mut report, &table, &gens, max_k, |k| {
        let lambdas = if exterior {
            enumerate_nested_hook_partitions(2 * k, m, n, HookFlavor::Wide)
        } else {
            enumerate_even_partitions(2 * k, m, n)
        };
        lambdas
            .into_iter()
            .map(|l| {
                let f = hs.hook_schur(&l);
                let w = diagram_to_hw(&l, m, n).expect("hook").to_weight();
                (l, f, w)
            })
            .collect()
    });
    report
}

/// `S^k(S^2 C^{m|n}) = sum HS_lambda` over even-row `lambda` of size `2k`.
pub fn verify_s2_decomposition(m: usize, n: usize, max_k: usize) -> VerificationReport {
    s2_run("s2-decomposition", m, n, max_k, false)
}

/// `Lambda^k(S^2 C^{m|n}) = sum HS_lambda` over nested `(l+1,l)`-hooks of size `2k`.
pub fn verify_lambda_s2_decomposition(m: usize, n: usize, max_k: usize) -> VerificationReport {
    s2_run("lambda-s2-decomposition", m, n, max_k, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(graded_dimension(2, 0, 3), 4);
        assert_eq!(graded_dimension(0, 3, 2), 3);
        assert_eq!(graded_dimension(0, 3, 4), 0);
        assert_eq!(graded_dimension(1, 1, 2), 2);
        assert_eq!(graded_dimension(0, 0, 0), 1);
    }

    #[test]
    fn small_decompositions() {
        assert!(verify_tensor_duality(1, 1, 1, 1, 3).passed());
        assert!(verify_skew_duality(1, 1, 1, 1, 3).passed());
        assert!(verify_s2_decomposition(1, 1, 2).passed());
        assert!(verify_lambda_s2_decomposition(1, 1, 2).passed());
    }
}
