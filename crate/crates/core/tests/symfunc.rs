use num_traits::Zero;
use proptest::prelude::*;

use superhowe::algebra::{Family, SuperPolynomial, Var, VarTable};
use superhowe::combinatorics::{partitions_of, Partition};
use superhowe::symfunc::{
    family_vars, hook_schur, schur, sub_partitions, verify_classical_quartet, verify_s2_characters,
    verify_super_cauchy, verify_super_dual_cauchy,
};
use superhowe::Rational;

fn coefficient_sum(f: &SuperPolynomial) -> Rational {
    f.terms().fold(Rational::zero(), |acc, (_, c)| acc + c)
}

/// `s_lambda(1^N)` from the hook-content formula.
fn hook_content(lambda: &Partition, n: usize) -> Rational {
    let t = lambda.transpose();
    let mut out = Rational::from_integer(1.into());
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let content = n as i64 + j as i64 - i as i64;
            let hook = (row - j - 1) + (t.part(j + 1) - i - 1) + 1;
            out *= Rational::new(content.into(), (hook as i64).into());
        }
    }
    out
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    (1usize..7).prop_flat_map(|k| {
        let ps = partitions_of(k);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_dimension_matches_hook_content(l in arb_partition(), n in 1usize..4) {
        let t = VarTable::character(n, 0, 0, 0);
        let xs: Vec<Var> = t.vars().collect();
        prop_assert_eq!(coefficient_sum(&schur(&t, &xs, &l).unwrap()), hook_content(&l, n));
    }

    #[test]
    fn hook_schur_transpose_symmetry(l in arb_partition(), m in 0usize..3, n in 0usize..3) {
        // HS_lambda(x; y) = HS_lambda'(y; x)
        let a = hook_schur(&l, m, n);
        let b = hook_schur(&l.transpose(), n, m);
        let swapped = b
            .substitute(a.table(), |v| {
                let info = b.table().info(v);
                let family = if info.family == Family::X { Family::Y } else { Family::X };
                Ok(SuperPolynomial::var(a.table(), a.table().require(family, info.index.0, info.index.1)?))
            })
            .unwrap();
        prop_assert_eq!(a, swapped);
    }

    #[test]
    fn hook_schur_specializes(l in arb_partition(), m in 1usize..4) {
        let t = VarTable::character(m, 0, 0, 0);
        let xs: Vec<Var> = t.vars().collect();
        let hs = hook_schur(&l, m, 0);
        prop_assert_eq!(coefficient_sum(&hs), coefficient_sum(&schur(&t, &xs, &l).unwrap()));
    }
}

#[test]
fn hook_schur_vanishes_outside_the_hook() {
    for k in 1..=6 {
        for l in partitions_of(k) {
            assert_eq!(hook_schur(&l, 1, 1).is_zero(), !l.in_hook(1, 1), "{l}");
            assert_eq!(hook_schur(&l, 2, 1).is_zero(), !l.in_hook(2, 1), "{l}");
        }
    }
}

#[test]
fn sub_partition_counts() {
    // (2,1) contains 0, 1, 2, 1^2, 2,1
    assert_eq!(sub_partitions(&"2,1".parse().unwrap(), 2).len(), 5);
    assert_eq!(sub_partitions(&"2,1".parse().unwrap(), 1).len(), 3);
    assert_eq!(sub_partitions(&Partition::empty(), 3).len(), 1);
}

#[test]
fn family_lookup() {
    let t = VarTable::character(2, 1, 3, 0);
    assert_eq!(family_vars(&t, Family::X).len(), 2);
    assert_eq!(family_vars(&t, Family::U).len(), 3);
    assert!(family_vars(&t, Family::V).is_empty());
}

#[test]
fn generating_function_identities() {
    for (p, q, m, n) in [(1, 1, 1, 1), (2, 0, 1, 1), (0, 2, 2, 0), (1, 0, 0, 1)] {
        let r = verify_super_cauchy(p, q, m, n, 4);
        assert!(r.passed(), "{}", r.summary_line());
        let r = verify_super_dual_cauchy(p, q, m, n, 4);
        assert!(r.passed(), "{}", r.summary_line());
    }
    for (m, n) in [(1, 1), (2, 0), (0, 2), (2, 1)] {
        let r = verify_s2_characters(m, n, 6);
        assert!(r.passed(), "{}", r.summary_line());
    }
    for m in 1..=3 {
        let r = verify_classical_quartet(m, 6);
        assert!(r.passed(), "{}", r.summary_line());
    }
}
