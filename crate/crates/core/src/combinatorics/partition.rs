use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer partition `lambda_1 >= lambda_2 >= ... > 0`, i.e. a Young diagram.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Panics unless `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing")
    }

    pub fn try_new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!(
                "{parts:?} is not a weakly decreasing sequence"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `lambda_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `lambda_{m+1} <= n`.
    pub fn in_hook(&self, m: usize, n: usize) -> bool {
        self.part(m + 1) <= n
    }

    pub fn all_parts_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Frobenius coordinates: arms `lambda_i - i` and legs `lambda'_i - i`
    /// along the diagonal.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let t = self.transpose();
        let d = (1..=self.len()).take_while(|&i| self.part(i) >= i).count();
        (
            (1..=d).map(|i| self.part(i) - i).collect(),
            (1..=d).map(|i| t.part(i) - i).collect(),
        )
    }

    /// Built from nested `(k+1, k)`-hooks `(k+1, 1^{k-1})` with strictly
    /// decreasing `k`: every principal hook has arm one longer than its leg.
    pub fn is_nested_wide_hooks(&self) -> bool {
        let (a, b) = self.frobenius();
        a.iter().zip(&b).all(|(x, y)| *x == y + 1)
    }

    /// Built from nested `(k, k+1)`-hooks `(k, 1^k)`: every principal hook
    /// has leg one longer than its arm.
    pub fn is_nested_tall_hooks(&self) -> bool {
        let (a, b) = self.frobenius();
        a.iter().zip(&b).all(|(x, y)| *y == x + 1)
    }

    /// Doubles every part: `2 lambda`.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `""` and `"0"` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::try_new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// All partitions of `k`, in reverse lexicographic order: `(k)` first.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `k` with `lambda_{p+1} <= q` and `lambda_{m+1} <= n`.
pub fn enumerate_hook_partitions(k: usize, p: usize, q: usize, m: usize, n: usize) -> Vec<Partition> {
    partitions_of(k)
        .into_iter()
        .filter(|l| l.in_hook(p, q) && l.in_hook(m, n))
        .collect()
}

/// Partitions of `k2` into even parts with `lambda_{m+1} <= n`.
pub fn enumerate_even_partitions(k2: usize, m: usize, n: usize) -> Vec<Partition> {
    if k2 % 2 == 1 {
        return Vec::new();
    }
    partitions_of(k2 / 2)
        .into_iter()
        .map(|l| l.doubled())
        .filter(|l| l.in_hook(m, n))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HookFlavor {
    /// `(k+1, k)`-hooks, i.e. `(k+1, 1^{k-1})`.
    Wide,
    /// `(k, k+1)`-hooks, i.e. `(k, 1^k)`.
    Tall,
}

/// Partitions of `k2` obtained by nesting hooks of the given flavor, with
/// `lambda_{m+1} <= n`.
pub fn enumerate_nested_hook_partitions(
    k2: usize,
    m: usize,
    n: usize,
    flavor: HookFlavor,
) -> Vec<Partition> {
    partitions_of(k2)
        .into_iter()
        .filter(|l| match flavor {
            HookFlavor::Wide => l.is_nested_wide_hooks(),
            HookFlavor::Tall => l.is_nested_tall_hooks(),
        })
        .filter(|l| l.in_hook(m, n))
        .collect()
}
