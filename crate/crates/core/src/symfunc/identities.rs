//! Truncated verification of the hook Schur generating-function identities.
//!
//! Product sides are expanded by multiplying truncated geometric series and
//! binomials; both sides are compared degree slice by degree slice.

use std::sync::Arc;

use crate::algebra::{format_poly, Family, SuperPolynomial, Var, VarTable};
use crate::combinatorics::{
    enumerate_even_partitions, enumerate_hook_partitions, enumerate_nested_hook_partitions,
    partitions_of, HookFlavor, Partition,
};
use crate::report::{Counterexample, VerificationReport};

use super::schur::{HookSchurEngine, SchurEngine};

/// Variables of one family of a character table, in index order.
pub fn family_vars(table: &VarTable, family: Family) -> Vec<Var> {
    table.vars().filter(|&v| table.info(v).family == family).collect()
}

/// Running product of factors, truncated at a total degree.
struct TruncatedProduct {
    acc: SuperPolynomial,
    max_degree: u32,
}

impl TruncatedProduct {
    fn new(table: &Arc<VarTable>, max_degree: u32) -> Self {
        TruncatedProduct {
            acc: SuperPolynomial::one(table),
            max_degree,
        }
    }

    fn mul(&mut self, f: &SuperPolynomial) {
        self.acc = self
            .acc
            .mul_truncated(f, self.max_degree)
            .expect("factors share the table");
    }

    /// Multiplies by `(1 - a)^{-1}` for a monomial `a` of positive degree.
    fn geometric(&mut self, a: &SuperPolynomial) {
        let mut series = SuperPolynomial::one(a.table());
        let mut power = SuperPolynomial::one(a.table());
        loop {
            power = power.mul_truncated(a, self.max_degree).expect("same table");
            if power.is_zero() {
                break;
            }
            series = &series + &power;
        }
        self.mul(&series);
    }

    /// Multiplies by `1 + a`.
    fn binomial(&mut self, a: &SuperPolynomial) {
        self.mul(&(&SuperPolynomial::one(a.table()) + a));
    }
}

fn product_of(table: &Arc<VarTable>, vars: &[Var]) -> SuperPolynomial {
    vars.iter().fold(SuperPolynomial::one(table), |acc, &v| {
        &acc * &SuperPolynomial::var(table, v)
    })
}

/// Records one check per homogeneous slice `slice * d`, `d <= max_slice`.
fn compare_slices(
    report: &mut VerificationReport,
    lhs: &SuperPolynomial,
    rhs: &SuperPolynomial,
    slice: u32,
    max_slice: u32,
    label: &str,
) {
    for d in 0..=max_slice {
        let l = lhs.component(slice * d);
        let r = rhs.component(slice * d);
        report.record(l == r, || {
            let diff = &l - &r;
            let (mono, _) = diff.least_term().expect("slices differ");
            let one = SuperPolynomial::monomial(l.table(), mono.clone(), crate::algebra::rat(1));
            Counterexample {
                lambda: None,
                operator: Some(label.to_string()),
                detail: format!(
                    "degree {}: coefficient of {} is {} on the sum side, {} on the product side",
                    slice * d,
                    format_poly(&one),
                    l.coeff(mono),
                    r.coeff(mono)
                ),
            }
        });
    }
}

struct CharVars {
    table: Arc<VarTable>,
    x: Vec<Var>,
    y: Vec<Var>,
    u: Vec<Var>,
    v: Vec<Var>,
}

impl CharVars {
    fn new(p: usize, q: usize, m: usize, n: usize) -> Self {
        let table = VarTable::character(p, q, m, n);
        CharVars {
            x: family_vars(&table, Family::X),
            y: family_vars(&table, Family::Y),
            u: family_vars(&table, Family::U),
            v: family_vars(&table, Family::V),
            table,
        }
    }

    fn pair(&self, a: Var, b: Var) -> SuperPolynomial {
        product_of(&self.table, &[a, b])
    }
}

/// `sum HS_lambda(x;y) HS_lambda(u;v) = prod (1-x_i u_k)^{-1} (1-y_j v_l)^{-1} (1+x_i v_l)(1+y_j u_k)`
/// over `lambda_{p+1} <= q`, `lambda_{m+1} <= n`, for every slice of
/// `(x, y)`-degree at most `max_degree`.
pub fn verify_super_cauchy(p: usize, q: usize, m: usize, n: usize, max_degree: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "super-cauchy",
        &[("p", p), ("q", q), ("m", m), ("n", n)],
        max_degree,
    );
    let cv = CharVars::new(p, q, m, n);
    let t = &cv.table;
    let mut left = HookSchurEngine::new(t, &cv.x, &cv.y).expect("even");
    let mut right = HookSchurEngine::new(t, &cv.u, &cv.v).expect("even");
    let mut sum = SuperPolynomial::zero(t);
    for k in 0..=max_degree {
        for lambda in enumerate_hook_partitions(k, p, q, m, n) {
            sum = &sum + &(&left.hook_schur(&lambda) * &right.hook_schur(&lambda));
        }
    }
    let mut prod = TruncatedProduct::new(t, 2 * max_degree as u32);
    for &a in &cv.x {
        for &b in &cv.u {
            prod.geometric(&cv.pair(a, b));
        }
        for &b in &cv.v {
            prod.binomial(&cv.pair(a, b));
        }
    }
    for &a in &cv.y {
        for &b in &cv.v {
            prod.geometric(&cv.pair(a, b));
        }
        for &b in &cv.u {
            prod.binomial(&cv.pair(a, b));
        }
    }
    compare_slices(&mut report, &sum, &prod.acc, 2, max_degree as u32, "super-cauchy");
    report
}

/// `sum HS_lambda(x;y) HS_{lambda'}(u;v) = prod (1+x_i u_k)(1+y_j v_l)(1-x_i v_l)^{-1}(1-y_j u_k)^{-1}`
/// over `lambda_{p+1} <= q`, `lambda'_{m+1} <= n`.
pub fn verify_super_dual_cauchy(
    p: usize,
    q: usize,
    m: usize,
    n: usize,
    max_degree: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        "super-dual-cauchy",
        &[("p", p), ("q", q), ("m", m), ("n", n)],
        max_degree,
    );
    let cv = CharVars::new(p, q, m, n);
    let t = &cv.table;
    let mut left = HookSchurEngine::new(t, &cv.x, &cv.y).expect("even");
    let mut right = HookSchurEngine::new(t, &cv.u, &cv.v).expect("even");
    let mut sum = SuperPolynomial::zero(t);
    for k in 0..=max_degree {
        for lambda in dual_pairs(k, p, q, m, n) {
            sum = &sum + &(&left.hook_schur(&lambda) * &right.hook_schur(&lambda.transpose()));
        }
    }
    let mut prod = TruncatedProduct::new(t, 2 * max_degree as u32);
    for &a in &cv.x {
        for &b in &cv.u {
            prod.binomial(&cv.pair(a, b));
        }
        for &b in &cv.v {
            prod.geometric(&cv.pair(a, b));
        }
    }
    for &a in &cv.y {
        for &b in &cv.v {
            prod.binomial(&cv.pair(a, b));
        }
        for &b in &cv.u {
            prod.geometric(&cv.pair(a, b));
        }
    }
    compare_slices(&mut report, &sum, &prod.acc, 2, max_degree as u32, "super-dual-cauchy");
    report
}

/// Partitions of `k` with `lambda_{p+1} <= q` and `lambda'_{m+1} <= n`.
pub fn dual_pairs(k: usize, p: usize, q: usize, m: usize, n: usize) -> Vec<Partition> {
    partitions_of(k)
        .into_iter()
        .filter(|l| l.in_hook(p, q) && l.transpose().in_hook(m, n))
        .collect()
}

/// Sum side of the symmetric-square identity in `x[1..m], y[1..n]`.
fn s2_sum(cv: &CharVars, m: usize, n: usize, max_degree: usize, exterior: bool) -> SuperPolynomial {
    let t = &cv.table;
    let mut hs = HookSchurEngine::new(t, &cv.x, &cv.y).expect("even");
    let mut sum = SuperPolynomial::zero(t);
    for k in 0..=max_degree {
        let lambdas = if exterior {
            enumerate_nested_hook_partitions(k, m, n, HookFlavor::Wide)
        } else {
            enumerate_even_partitions(k, m, n)
        };
        for lambda in lambdas {
            sum = &sum + &hs.hook_schur(&lambda);
        }
    }
    sum
}

/// Both symmetric-square identities: even-row partitions against
/// `prod_{i<=i'}(1-x_i x_i')^{-1} prod_{j<j'}(1-y_j y_j')^{-1} prod (1+x_i y_j)`,
/// and nested `(k+1,k)`-hooks against
/// `prod_{i<=i'}(1+x_i x_i') prod_{j<j'}(1+y_j y_j') prod (1-x_i y_j)^{-1}`.
pub fn verify_s2_characters(m: usize, n: usize, max_degree: usize) -> VerificationReport {
    let mut report = VerificationReport::new("s2-characters", &[("m", m), ("n", n)], max_degree);
    let cv = CharVars::new(m, n, 0, 0);
    let t = &cv.table;
    for exterior in [false, true] {
        let sum = s2_sum(&cv, m, n, max_degree, exterior);
        let mut prod = TruncatedProduct::new(t, max_degree as u32);
        for (i, &a) in cv.x.iter().enumerate() {
            for &b in &cv.x[i..] {
                if exterior {
                    prod.binomial(&cv.pair(a, b));
                } else {
                    prod.geometric(&cv.pair(a, b));
                }
            }
        }
        for (j, &a) in cv.y.iter().enumerate() {
            for &b in &cv.y[j + 1..] {
                if exterior {
                    prod.binomial(&cv.pair(a, b));
                } else {
                    prod.geometric(&cv.pair(a, b));
                }
            }
        }
        for &a in &cv.x {
            for &b in &cv.y {
                if exterior {
                    prod.geometric(&cv.pair(a, b));
                } else {
                    prod.binomial(&cv.pair(a, b));
                }
            }
        }
        let label = if exterior { "exterior-square-sum" } else { "symmetric-square-sum" };
        compare_slices(&mut report, &sum, &prod.acc, 1, max_degree as u32, label);
    }
    report
}

/// The four classical identities in `x[1..m]`:
/// `sum s_{2 lambda}`, `sum s_{(2 mu)'}`, `sum s_rho` over nested `(k+1,k)`-hooks and
/// `sum s_pi` over nested `(k,k+1)`-hooks against their products.
pub fn verify_classical_quartet(m: usize, max_degree: usize) -> VerificationReport {
    let mut report = VerificationReport::new("classical-quartet", &[("m", m)], max_degree);
    let table = VarTable::character(m, 0, 0, 0);
    let xs = family_vars(&table, Family::X);
    let mut schur = SchurEngine::new(&table, &xs).expect("even");
    let pair = |a: Var, b: Var| product_of(&table, &[a, b]);
    let deg = max_degree as u32;

    for (label, diagonal, exterior) in [
        ("sym-sym", true, false),
        ("sym-skew", false, false),
        ("skew-sym", true, true),
        ("skew-skew", false, true),
    ] {
        let mut sum = SuperPolynomial::zero(&table);
        for k in 0..=max_degree {
            let lambdas: Vec<Partition> = match (diagonal, exterior) {
                (true, false) => enumerate_even_partitions(k, m, 0),
                (false, false) => enumerate_even_partitions(k, k, 0)
                    .into_iter()
                    .map(|l| l.transpose())
                    .collect(),
                (true, true) => enumerate_nested_hook_partitions(k, m, 0, HookFlavor::Wide),
                (false, true) => enumerate_nested_hook_partitions(k, m, 0, HookFlavor::Tall),
            };
            for lambda in lambdas {
                sum = &sum + &schur.schur(&lambda);
            }
        }
        let mut prod = TruncatedProduct::new(&table, deg);
        for (i, &a) in xs.iter().enumerate() {
            let start = if diagonal { i } else { i + 1 };
            for &b in &xs[start..] {
                if exterior {
                    prod.binomial(&pair(a, b));
                } else {
                    prod.geometric(&pair(a, b));
                }
            }
        }
        compare_slices(&mut report, &sum, &prod.acc, 1, deg, label);
    }
    report
}
