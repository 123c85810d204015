use super::marked::sort_sign;

/// Perfect matching `((i_1,i_2), ..., (i_{2l-1},i_{2l}))` of `{1..2l}` with
/// `i_{2k-1} < i_{2k}` and pairs ordered by their first element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pairing {
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Sign of the permutation `k -> i_k`.
    pub fn sign(&self) -> i32 {
        let seq: Vec<usize> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        sort_sign(&seq)
    }
}

/// All `(2l-1)!!` pairings of `{1..2l}`; `two_l` must be even.
pub fn enumerate_pairings(two_l: usize) -> Vec<Pairing> {
    assert!(two_l.is_multiple_of(2), "pairings need an even number of points");
    fn go(rest: &[usize], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Pairing>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(Pairing { pairs: cur.clone() });
            return;
        };
        for (j, &partner) in tail.iter().enumerate() {
            let remaining: Vec<usize> = tail
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .map(|(_, &x)| x)
                .collect();
            cur.push((first, partner));
            go(&remaining, cur, out);
            cur.pop();
        }
    }
    let points: Vec<usize> = (1..=two_l).collect();
    let mut out = Vec::new();
    go(&points, &mut Vec::new(), &mut out);
    out
}
