//! One test per acceptance criterion. Each writes a `criterion N: PASS|FAIL`
//! line to stdout (uncaptured) and then asserts.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superhowe::algebra::{format_poly, parse_poly, Parity, SuperPolynomial, Var, VarTable};
use superhowe::combinatorics::{enumerate_even_partitions, enumerate_hook_partitions, partitions_of, Partition};
use superhowe::hwv::{
    verify_bordered_det, verify_identity_cor, verify_keylemma, verify_maincor, verify_s2_identities, Budget,
    S2Model, TensorModel,
};
use superhowe::operators::SuperDerivation;
use superhowe::symfunc::{hook_schur, verify_classical_quartet, verify_super_cauchy, verify_super_dual_cauchy};
use superhowe::verify::{
    run_cross_checks, run_s2_cell, run_tensor_cell, verify_lambda_s2_decomposition, verify_s2_decomposition,
    verify_skew_duality, verify_tensor_duality, CaseGrid,
};
use superhowe::Rational;

fn report_line(n: usize, ok: bool, what: &str, failures: &[String]) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(
        out,
        "criterion {n}: {} {what}",
        if ok { "PASS" } else { "FAIL" }
    );
    for f in failures.iter().take(5) {
        let _ = writeln!(out, "    {f}");
    }
}

fn finish(n: usize, what: &str, failures: Vec<String>) {
    report_line(n, failures.is_empty(), what, &failures);
    assert!(failures.is_empty(), "criterion {n} failed: {failures:?}");
}

fn collect(reports: impl IntoIterator<Item = superhowe::report::VerificationReport>) -> Vec<String> {
    reports
        .into_iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} {:?}", r.summary_line(), r.counterexample))
        .collect()
}

#[test]
fn criterion_1_tensor_hwv_suite() {
    let grid = CaseGrid::default_grid();
    let reports: Vec<_> = grid
        .tensor
        .iter()
        .map(|&(p, q, m, n)| run_tensor_cell(p, q, m, n, grid.tensor_max_size, Budget::default()).unwrap())
        .collect();
    let checks: usize = reports.iter().map(|r| r.checks_run).sum();
    finish(
        1,
        &format!("tensor-model vectors nonzero, of the predicted weight and highest ({checks} checks)"),
        collect(reports),
    );
}

#[test]
fn criterion_2_s2_hwv_suite() {
    let grid = CaseGrid::default_grid();
    let reports: Vec<_> = grid
        .s2
        .iter()
        .map(|&(m, n)| run_s2_cell(m, n, grid.s2_max_size, Budget::default()).unwrap())
        .collect();
    let checks: usize = reports.iter().map(|r| r.checks_run).sum();
    finish(
        2,
        &format!("symmetric-square vectors nonzero, of the predicted weight and highest ({checks} checks)"),
        collect(reports),
    );
}

#[test]
fn criterion_3_determinant_identities() {
    let mut failures = Vec::new();
    for p in 1..=4 {
        if !verify_keylemma(p).unwrap() {
            failures.push(format!("product lemma p={p}"));
        }
    }
    let subsets: Vec<Vec<usize>> = {
        let mut s = vec![vec![]];
        for a in 1..=4 {
            s.push(vec![a]);
            for b in a + 1..=4 {
                s.push(vec![a, b]);
            }
        }
        s
    };
    for i in &subsets {
        for j in &subsets {
            let out = verify_maincor(4, i, j).unwrap();
            if !out.all() {
                failures.push(format!("row-set products I={i:?} J={j:?}: {out:?}"));
            }
        }
    }
    for p in 1..=4 {
        for q in 1..=p {
            for m in 0..q {
                if !verify_identity_cor(p, q, m).unwrap() {
                    failures.push(format!("vanishing product ({p},{q},{m})"));
                }
            }
        }
    }
    for m in 1..=3 {
        if !verify_bordered_det(m).unwrap() {
            failures.push(format!("bordered determinant m={m}"));
        }
    }
    finish(3, "determinant identity corpus", failures);
}

#[test]
fn criterion_4_character_decompositions() {
    let grid = CaseGrid::default_grid();
    let mut reports = Vec::new();
    let mut corners = grid.tensor.clone();
    corners.extend([(2, 0, 2, 0), (2, 0, 0, 2), (0, 2, 2, 0), (0, 2, 0, 2)]);
    for &(p, q, m, n) in &corners {
        reports.push(verify_tensor_duality(p, q, m, n, 4));
        reports.push(verify_skew_duality(p, q, m, n, 4));
    }
    let mut s2 = grid.s2.clone();
    s2.extend([(1, 0), (2, 0), (3, 0), (0, 2), (0, 3), (0, 4)]);
    for &(m, n) in &s2 {
        reports.push(verify_s2_decomposition(m, n, 4));
        reports.push(verify_lambda_s2_decomposition(m, n, 4));
    }
    let count = reports.len();
    finish(
        4,
        &format!("character decompositions incl. classical corners ({count} reports)"),
        collect(reports),
    );
}

/// Independent oracle: `(m,n)`-hook semistandard tableaux. Letters `0..m` are
/// even (weakly increasing in rows, strictly in columns), letters `m..m+n`
/// odd (strictly in rows, weakly in columns).
fn hook_tableaux_oracle(lambda: &Partition, m: usize, n: usize) -> SuperPolynomial {
    let table = VarTable::character(m, n, 0, 0);
    let vars: Vec<Var> = table.vars().collect();
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid = vec![vec![usize::MAX; lambda.part(1)]; lambda.len()];
    let mut out = SuperPolynomial::zero(&table);
    #[allow(clippy::too_many_arguments)]
    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        m: usize,
        letters: usize,
        table: &std::sync::Arc<VarTable>,
        vars: &[Var],
        out: &mut SuperPolynomial,
    ) {
        if idx == cells.len() {
            let mut t = SuperPolynomial::one(table);
            for &(r, c) in cells {
                t = &t * &SuperPolynomial::var(table, vars[grid[r][c]]);
            }
            *out = &*out + &t;
            return;
        }
        let (r, c) = cells[idx];
        for v in 0..letters {
            let odd = v >= m;
            if c > 0 {
                let a = grid[r][c - 1];
                if a > v || (a == v && odd) {
                    continue;
                }
            }
            if r > 0 {
                let a = grid[r - 1][c];
                if a > v || (a == v && !odd) {
                    continue;
                }
            }
            grid[r][c] = v;
            fill(idx + 1, cells, grid, m, letters, table, vars, out);
        }
        grid[r][c] = usize::MAX;
    }
    fill(0, &cells, &mut grid, m, m + n, &table, &vars, &mut out);
    out
}

#[test]
fn criterion_5_symmetric_function_identities() {
    let mut failures = Vec::new();
    for p in 0..=2 {
        for q in 0..=1 {
            for m in 0..=2 {
                for n in 0..=1 {
                    failures.extend(collect([
                        verify_super_cauchy(p, q, m, n, 6),
                        verify_super_dual_cauchy(p, q, m, n, 6),
                    ]));
                }
            }
        }
    }
    for m in 1..=3 {
        failures.extend(collect([verify_classical_quartet(m, 6)]));
    }
    for k in 0..=6 {
        for lambda in partitions_of(k) {
            for m in 0..=2 {
                for n in 0..=2 {
                    let a = hook_schur(&lambda, m, n);
                    let b = hook_tableaux_oracle(&lambda, m, n);
                    if a != b {
                        failures.push(format!("hook Schur {lambda} (m,n)=({m},{n})"));
                    }
                }
            }
        }
    }
    finish(5, "Cauchy-type identities, classical quartet, hook Schur vs tableau oracle", failures);
}

#[test]
fn criterion_6_s2_identity_relations() {
    let mut failures = Vec::new();
    for m in 0..=3 {
        for n in 0..=3 {
            let out = verify_s2_identities(m, n).unwrap();
            if !out.all() {
                failures.push(format!("(m,n)=({m},{n}): {out:?}"));
            }
        }
    }
    finish(6, "relations among the Delta(xi_a, xi_b) for m, n <= 3", failures);
}

fn random_poly(rng: &mut ChaCha8Rng, table: &std::sync::Arc<VarTable>, parity: Option<Parity>) -> SuperPolynomial {
    let vars: Vec<Var> = table.vars().collect();
    let mut f = SuperPolynomial::zero(table);
    for _ in 0..rng.gen_range(1..=4) {
        let mut t = SuperPolynomial::constant(table, Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into()));
        for _ in 0..rng.gen_range(0..=3) {
            let v = vars[rng.gen_range(0..vars.len())];
            t = &t * &SuperPolynomial::var(table, v);
        }
        if let Some(want) = parity {
            if t.parity().is_some_and(|p| p != want) {
                continue;
            }
        }
        f = &f + &t;
    }
    f
}

#[test]
fn criterion_7_kernel_properties() {
    let mut failures = Vec::new();
    let table = VarTable::tensor(2, 1, 1, 2);
    let vars: Vec<Var> = table.vars().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let trials = 10_000;
    for trial in 0..trials {
        match trial % 3 {
            0 => {
                let pa = if rng.gen() { Parity::Odd } else { Parity::Even };
                let pb = if rng.gen() { Parity::Odd } else { Parity::Even };
                let a = random_poly(&mut rng, &table, Some(pa));
                let b = random_poly(&mut rng, &table, Some(pb));
                let ab = &a * &b;
                let ba = &b * &a;
                let expected = if pa.is_odd() && pb.is_odd() { -ba } else { ba };
                if ab != expected {
                    failures.push(format!("supercommutativity trial {trial}"));
                }
            }
            1 => {
                let a = random_poly(&mut rng, &table, None);
                let b = random_poly(&mut rng, &table, None);
                let c = random_poly(&mut rng, &table, None);
                if &(&a * &b) * &c != &a * &(&b * &c) {
                    failures.push(format!("associativity trial {trial}"));
                }
            }
            _ => {
                let u = vars[rng.gen_range(0..vars.len())];
                let v = vars[rng.gen_range(0..vars.len())];
                let d = SuperDerivation::single(&table, u, v);
                let pa = if rng.gen() { Parity::Odd } else { Parity::Even };
                let a = random_poly(&mut rng, &table, Some(pa));
                let b = random_poly(&mut rng, &table, None);
                let lhs = d.apply(&(&a * &b)).unwrap();
                let left = &d.apply(&a).unwrap() * &b;
                let right = &a * &d.apply(&b).unwrap();
                let rhs = if d.parity().is_odd() && pa.is_odd() { &left - &right } else { &left + &right };
                if lhs != rhs {
                    failures.push(format!("Leibniz trial {trial}"));
                }
            }
        }
    }

    let grid = CaseGrid::default_grid();
    let mut corpus = 0usize;
    let mut check = |f: &SuperPolynomial, failures: &mut Vec<String>| {
        corpus += 1;
        let text = format_poly(f);
        let back = parse_poly(f.table(), &text).unwrap();
        if &back != f || format_poly(&back) != text {
            failures.push(format!("round trip of {text}"));
        }
    };
    for &(p, q, m, n) in &grid.tensor {
        let model = TensorModel::new(p, q, m, n);
        for k in 0..=grid.tensor_max_size {
            for lambda in enumerate_hook_partitions(k, p, q, m, n) {
                check(&model.hwv_general(&lambda).unwrap(), &mut failures);
            }
        }
    }
    for &(m, n) in &grid.s2 {
        let model = S2Model::new(m, n);
        for k in (0..=grid.s2_max_size).step_by(2) {
            for lambda in enumerate_even_partitions(k, m, n) {
                check(&model.hwv_s2(&lambda).unwrap(), &mut failures);
            }
        }
    }
    finish(
        7,
        &format!("{trials} randomized kernel trials and text round trip of {corpus} vectors"),
        failures,
    );
}

#[test]
fn criterion_8_cross_consistency() {
    let mut failures = Vec::new();
    let cells = [(3, 0, 1, 2), (2, 0, 1, 1), (2, 0, 2, 1), (1, 1, 1, 1), (2, 1, 2, 1), (2, 2, 2, 2)];
    for &(p, q, m, n) in &cells {
        failures.extend(collect([run_cross_checks(p, q, m, n, 5, Budget::default()).unwrap()]));
    }
    for &(p, q, m, n) in &[(2, 1, 1, 1), (2, 2, 1, 1), (3, 1, 1, 1), (3, 1, 2, 1), (3, 2, 1, 2)] {
        let model = TensorModel::new(p, q, m, n);
        for w in 1..=q.min(n) {
            match model.gamma_general(&[w]) {
                Ok(g) if !g.is_zero() => {}
                Ok(_) => failures.push(format!("zero Gamma for widths [{w}] at {:?}", (p, q, m, n))),
                Err(e) => failures.push(format!("Gamma for widths [{w}] at {:?}: {e}", (p, q, m, n))),
            }
        }
    }
    for &(m, q, n) in &[(1, 1, 1), (1, 2, 2), (2, 1, 1), (2, 2, 2)] {
        let model = TensorModel::new(m, q, m, n);
        for r in 1..=q.min(n) {
            let a = model.gamma_r_pm(r).unwrap();
            let b = model.gamma_general(&[r]).unwrap();
            if !a.proportional(&b) {
                failures.push(format!("rectangle vectors differ at m={m} q={q} n={n} r={r}"));
            }
        }
    }
    finish(8, "independent constructions agree; general Gamma free of auxiliary variables", failures);
}
