use std::collections::HashSet;

use proptest::prelude::*;

use superhowe::combinatorics::{
    enumerate_even_partitions, enumerate_hook_partitions, enumerate_marked_diagrams, enumerate_marked_families,
    enumerate_nested_hook_partitions, enumerate_pairings, partitions_of, sort_sign, HookFlavor, MarkedDiagram,
    MarkedFamily, Partition,
};

/// Partition numbers from Euler's pentagonal recurrence.
fn partition_count(n: usize) -> usize {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[i] += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                p[i] += sign * p[i - g2];
            }
            k += 1;
        }
    }
    p[n] as usize
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..7, 0..7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v.into_iter().filter(|&x| x > 0).collect())
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(l in arb_partition()) {
        prop_assert_eq!(l.transpose().transpose(), l.clone());
        prop_assert_eq!(l.transpose().size(), l.size());
        prop_assert_eq!(l.transpose().len(), l.part(1));
    }

    #[test]
    fn text_round_trip(l in arb_partition()) {
        prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
    }

    #[test]
    fn hook_condition_transposes(l in arb_partition(), m in 0usize..4, n in 0usize..4) {
        prop_assert_eq!(l.in_hook(m, n), l.transpose().in_hook(n, m));
    }

    #[test]
    fn frobenius_recovers_size(l in arb_partition()) {
        let (a, b) = l.frobenius();
        prop_assert_eq!(a.iter().chain(&b).sum::<usize>() + a.len(), l.size());
    }

    #[test]
    fn sort_sign_matches_inversions(v in prop::collection::vec(0u8..50, 0..8)) {
        let mut seen = HashSet::new();
        let v: Vec<u8> = v.into_iter().filter(|x| seen.insert(*x)).collect();
        let inversions = (0..v.len())
            .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| v[i] > v[j])
            .count();
        prop_assert_eq!(sort_sign(&v), if inversions % 2 == 0 { 1 } else { -1 });
    }
}

#[test]
fn partition_counts() {
    for k in 0..=12 {
        let ps = partitions_of(k);
        assert_eq!(ps.len(), partition_count(k), "k = {k}");
        assert!(ps.iter().all(|p| p.size() == k));
        assert_eq!(ps.iter().collect::<HashSet<_>>().len(), ps.len());
    }
    assert_eq!(partitions_of(4)[0], Partition::new(vec![4]));
}

#[test]
fn parsing() {
    assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    assert_eq!("3,1,1".parse::<Partition>().unwrap().parts(), &[3, 1, 1]);
    assert!("1,2".parse::<Partition>().is_err());
    assert!("2,x".parse::<Partition>().is_err());
}

#[test]
fn hook_enumeration() {
    // (1|1): all hooks
    let hooks = enumerate_hook_partitions(4, 1, 1, 1, 1);
    let shown: Vec<String> = hooks.iter().map(|p| p.to_string()).collect();
    assert_eq!(shown, ["4", "3,1", "2,1,1", "1,1,1,1"]);
    // purely even: at most min(p, m) rows
    assert!(enumerate_hook_partitions(5, 2, 0, 3, 0).iter().all(|l| l.len() <= 2));
    assert_eq!(enumerate_hook_partitions(3, 0, 2, 0, 1).len(), 1);
}

#[test]
fn even_and_nested_enumerations() {
    let even: Vec<String> = enumerate_even_partitions(6, 1, 2).iter().map(|p| p.to_string()).collect();
    assert_eq!(even, ["6", "4,2", "2,2,2"]);
    assert!(enumerate_even_partitions(5, 2, 2).is_empty());

    let wide: Vec<String> = enumerate_nested_hook_partitions(6, 3, 0, HookFlavor::Wide)
        .iter()
        .map(|p| p.to_string())
        .collect();
    assert_eq!(wide, ["4,1,1", "3,3"]);
    for l in enumerate_nested_hook_partitions(8, 4, 4, HookFlavor::Tall) {
        assert!(l.is_nested_tall_hooks());
        assert!(l.transpose().is_nested_wide_hooks());
    }
}

#[test]
fn pairings() {
    for l in 1..=4 {
        let ps = enumerate_pairings(2 * l);
        let expected: usize = (1..=l).map(|i| 2 * i - 1).product();
        assert_eq!(ps.len(), expected);
        // Pfaffian of the all-ones skew matrix
        assert_eq!(ps.iter().map(|p| p.sign()).sum::<i32>(), 1);
    }
    let ps = enumerate_pairings(4);
    let signs: Vec<i32> = ps.iter().map(|p| p.sign()).collect();
    assert_eq!(ps[0].pairs(), &[(1, 2), (3, 4)]);
    assert_eq!(signs, [1, -1, 1]);
}

#[test]
fn marked_diagrams() {
    let all: Vec<MarkedDiagram> = enumerate_marked_diagrams(2, 3).collect();
    assert_eq!(all.len(), 27);
    assert_eq!(all[0].count(), 0);
    assert_eq!(all.iter().collect::<HashSet<_>>().len(), 27);

    let d = MarkedDiagram::new(2, vec![Some(2), None]);
    assert_eq!(d.to_string(), ". .\nX .\n");
}

#[test]
fn marked_families() {
    for fam in enumerate_marked_families(&[2, 1], 2) {
        assert!(fam.respects_exclusion());
        assert_eq!(fam.d().len(), 2);
    }
    let a = MarkedDiagram::new(2, vec![Some(1), Some(2)]);
    let b = MarkedDiagram::new(2, vec![Some(2)]);
    let fam = MarkedFamily::new(vec![a, b]);
    assert!(fam.respects_exclusion());
    assert_eq!(fam.total(), 3);
    assert_eq!(fam.d(), [2, 1]);
    // marks (1,1,1),(1,2,2),(2,1,2) reordered to (1,1,1),(2,1,2),(1,2,2)
    assert_eq!(fam.epsilon(), -1);
    let clash = MarkedFamily::new(vec![
        MarkedDiagram::new(2, vec![Some(1)]),
        MarkedDiagram::new(2, vec![Some(1)]),
    ]);
    assert!(!clash.respects_exclusion());
}
