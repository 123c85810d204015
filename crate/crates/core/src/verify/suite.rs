//! Exhaustive highest weight vector checks over parameter grids.

use serde::{Deserialize, Serialize};

use crate::algebra::{format_poly, SuperPolynomial};
use crate::combinatorics::{enumerate_even_partitions, enumerate_hook_partitions, Partition};
use crate::error::{Error, Result};
use crate::hwv::{
    find_s2_relation, verify_bordered_det, verify_identity_cor, verify_keylemma, verify_maincor,
    verify_s2_identities, Budget, Relation, S2Model, TensorModel,
};
use crate::operators::{first_non_annihilating, AlgebraRealization, WeightVector};
use crate::report::{Counterexample, VerificationReport};

/// Parameter tuples and size bounds for the suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseGrid {
    /// `(p, q, m, n)` tuples for the tensor model.
    pub tensor: Vec<(usize, usize, usize, usize)>,
    /// Largest `|lambda|` in the tensor model.
    pub tensor_max_size: usize,
    /// `(m, n)` tuples for the symmetric-square model.
    pub s2: Vec<(usize, usize)>,
    /// Largest `|lambda|` in the symmetric-square model.
    pub s2_max_size: usize,
}

impl CaseGrid {
    /// Covers `q = 0`, `p = m`, `p > m > 0`, `p < m` and the classical corners.
    pub fn default_grid() -> Self {
        CaseGrid {
            tensor: vec![
                (1, 1, 1, 1),
                (2, 1, 1, 1),
                (1, 1, 2, 1),
                (2, 1, 2, 1),
                (2, 2, 1, 1),
                (3, 0, 1, 2),
                (2, 0, 1, 1),
            ],
            tensor_max_size: 5,
            s2: vec![(1, 2), (2, 2), (1, 4), (2, 3)],
            s2_max_size: 8,
        }
    }
}

/// Nonzero, weight and annihilation checks for one vector.
fn check_vector(
    report: &mut VerificationReport,
    lambda: &Partition,
    built: Result<SuperPolynomial>,
    expected: &WeightVector,
    weight: impl Fn(&SuperPolynomial) -> Result<WeightVector>,
    realizations: &[&AlgebraRealization],
) -> Result<()> {
    let fail = |operator: &str, detail: String| Counterexample {
        lambda: Some(lambda.to_string()),
        operator: Some(operator.to_string()),
        detail,
    };
    let f = match built {
        Ok(f) => f,
        Err(Error::OverBudget { terms, limit }) => {
            report.over_budget(format!("lambda = {lambda}: {terms} terms above the limit {limit}"));
            return Ok(());
        }
        Err(e) => {
            report.record(false, || fail("construction", e.to_string()));
            return Ok(());
        }
    };
    report.record(!f.is_zero(), || fail("nonzero", "0".into()));
    if f.is_zero() {
        return Ok(());
    }
    match weight(&f) {
        Ok(w) => report.record(&w == expected, || {
            fail("weight", format!("weight {w}, expected {expected}"))
        }),
        Err(e) => report.record(false, || fail("weight", e.to_string())),
    }
    let hit = first_non_annihilating(&f, realizations)?;
    report.record(hit.is_none(), || {
        let (op, img) = hit.expect("failure carries an image");
        fail(op.label(), format_poly(&img))
    });
    Ok(())
}

/// Runs the checks on every `lambda` with `|lambda| <= max_size` admissible
/// for `(p, q, m, n)`.
pub fn run_tensor_cell(
    p: usize,
    q: usize,
    m: usize,
    n: usize,
    max_size: usize,
    budget: Budget,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "hwv-tensor",
        &[("p", p), ("q", q), ("m", m), ("n", n)],
        max_size,
    );
    let model = TensorModel::new(p, q, m, n).with_budget(budget);
    for k in 0..=max_size {
        for lambda in enumerate_hook_partitions(k, p, q, m, n) {
            let expected = model.expected_weight(&lambda)?;
            check_vector(
                &mut report,
                &lambda,
                model.hwv_general(&lambda),
                &expected,
                |f| model.joint_weight(f),
                &model.realizations(),
            )?;
        }
    }
    Ok(report)
}

/// Runs the checks on every even-row `lambda` with `|lambda| <= max_size`.
pub fn run_s2_cell(m: usize, n: usize, max_size: usize, budget: Budget) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("hwv-s2", &[("m", m), ("n", n)], max_size);
    let model = S2Model::new(m, n).with_budget(budget);
    for k in (0..=max_size).step_by(2) {
        for lambda in enumerate_even_partitions(k, m, n) {
            let expected = model.expected_weight(&lambda)?;
            check_vector(
                &mut report,
                &lambda,
                model.hwv_s2(&lambda),
                &expected,
                |f| model.weight(f),
                &[model.glmn()],
            )?;
        }
    }
    Ok(report)
}

/// Independent constructions agree: the `q = 0` formula equals the general
/// one exactly, and the `p = m` formula is a nonzero multiple of it.
pub fn run_cross_checks(p: usize, q: usize, m: usize, n: usize, max_size: usize, budget: Budget) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "hwv-cross-consistency",
        &[("p", p), ("q", q), ("m", m), ("n", n)],
        max_size,
    );
    let model = TensorModel::new(p, q, m, n).with_budget(budget);
    for k in 0..=max_size {
        for lambda in enumerate_hook_partitions(k, p, q, m, n) {
            let general = model.hwv_general(&lambda)?;
            let fail = |op: &str, other: &SuperPolynomial| Counterexample {
                lambda: Some(lambda.to_string()),
                operator: Some(op.to_string()),
                detail: format_poly(&(&general.normalized() - &other.normalized())),
            };
            if q == 0 {
                let v = model.hwv_q_zero(&lambda)?;
                report.record(v == general, || fail("q-zero formula", &v));
            }
            if p == m {
                let v = model.hwv_p_equals_m(&lambda)?;
                report.record(!v.is_zero() && v.proportional(&general), || fail("p-equals-m formula", &v));
            }
        }
    }
    Ok(report)
}

/// Every suite in the grid, in parameter order.
pub fn run_hwv_suite(grid: &CaseGrid, budget: Budget) -> Result<Vec<VerificationReport>> {
    let tensor = map_cells(&grid.tensor, |&(p, q, m, n)| {
        run_tensor_cell(p, q, m, n, grid.tensor_max_size, budget)
    })?;
    let s2 = map_cells(&grid.s2, |&(m, n)| run_s2_cell(m, n, grid.s2_max_size, budget))?;
    Ok(tensor.into_iter().chain(s2).collect())
}

/// The product and row-set determinant identities for `p <= max_p`, the
/// bordered determinant for `m <= max_p - 1` and the four symmetric-square
/// identities for `(m, n)` up to `(max_p - 1, max_p)`.
pub fn verify_determinant_identities(max_p: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("determinant-identities", &[("p", max_p)], max_p);
    let fail = |what: String| Counterexample {
        lambda: None,
        operator: Some(what),
        detail: "identity fails".into(),
    };
    for p in 1..=max_p {
        report.record(verify_keylemma(p)?, || fail(format!("product lemma p={p}")));
        let subsets: Vec<Vec<usize>> = (0..1usize << p)
            .map(|mask| (1..=p).filter(|i| mask >> (i - 1) & 1 == 1).collect())
            .filter(|s: &Vec<usize>| s.len() <= 2)
            .collect();
        for i in &subsets {
            for j in &subsets {
                let out = verify_maincor(p, i, j)?;
                report.record(out.all(), || fail(format!("row-set products p={p} I={i:?} J={j:?}")));
            }
        }
        for q in 1..=p {
            for m in 0..q {
                report.record(verify_identity_cor(p, q, m)?, || fail(format!("vanishing product ({p},{q},{m})")));
            }
        }
    }
    for m in 1..max_p {
        report.record(verify_bordered_det(m)?, || fail(format!("bordered determinant m={m}")));
        for n in 1..=max_p {
            let out = verify_s2_identities(m, n)?;
            report.record(out.all(), || fail(format!("symmetric-square identities (m,n)=({m},{n}): {out:?}")));
        }
    }
    Ok(report)
}

/// Searches for a relation among products of two symmetric-square vectors.
/// A relation must exist once `n >= 2`; each found one is re-checked by
/// recomputing both products.
pub fn verify_s2_semigroup(m: usize, n: usize, max_size: usize) -> Result<(VerificationReport, Option<Relation>)> {
    let mut report = VerificationReport::new("s2-semigroup", &[("m", m), ("n", n)], max_size);
    let relation = find_s2_relation(m, n, max_size)?;
    match &relation {
        Some(r) => {
            let model = S2Model::new(m, n);
            let product = |ls: &[Partition]| -> Result<SuperPolynomial> {
                let mut f = SuperPolynomial::one(model.table());
                for l in ls {
                    f = &f * &model.hwv_s2(l)?;
                }
                Ok(f)
            };
            let (lhs, rhs) = (product(&r.lhs)?, product(&r.rhs)?);
            report.record(!lhs.is_zero() && lhs == rhs.scale(&r.scalar), || Counterexample {
                lambda: None,
                operator: Some("relation".into()),
                detail: format_poly(&(&lhs - &rhs.scale(&r.scalar))),
            });
            report.record(crate::operators::is_highest(&lhs, &[model.glmn()])?, || Counterexample {
                lambda: None,
                operator: Some("highest".into()),
                detail: r.product.clone(),
            });
        }
        None => report.record(n < 2, || Counterexample {
            lambda: None,
            operator: Some("relation".into()),
            detail: format!("no relation among vectors of size at most {max_size}"),
        }),
    }
    Ok((report, relation))
}

/// The highest weight vector suite on `grid` followed by the cross checks
/// and character decompositions on the same cells up to `max_degree`.
pub fn run_default_suite(grid: &CaseGrid, max_degree: usize, budget: Budget) -> Result<Vec<VerificationReport>> {
    let mut out = run_hwv_suite(grid, budget)?;
    out.extend(map_cells(&grid.tensor, |&(p, q, m, n)| {
        run_cross_checks(p, q, m, n, grid.tensor_max_size, budget)
    })?);
    for &(p, q, m, n) in &grid.tensor {
        out.push(super::verify_tensor_duality(p, q, m, n, max_degree));
        out.push(super::verify_skew_duality(p, q, m, n, max_degree));
    }
    for &(m, n) in &grid.s2 {
        out.push(super::verify_s2_decomposition(m, n, max_degree));
        out.push(super::verify_lambda_s2_decomposition(m, n, max_degree));
    }
    Ok(out)
}

/// Applies `f` to every cell, in parallel when enabled; output keeps input order.
pub fn map_cells<T, F>(cells: &[T], f: F) -> Result<Vec<VerificationReport>>
where
    T: Sync,
    F: Fn(&T) -> Result<VerificationReport> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        cells.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        cells.iter().map(f).collect()
    }
}
