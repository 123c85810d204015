use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::poly::SuperPolynomial;
use super::vars::{Var, VarTable};
use crate::error::{Error, Result};

/// Square grid of polynomials, usually single variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    table: Arc<VarTable>,
    rows: Vec<Vec<SuperPolynomial>>,
}

impl SuperMatrix {
    pub fn new(table: &Arc<VarTable>, rows: Vec<Vec<SuperPolynomial>>) -> Self {
        SuperMatrix {
            table: table.clone(),
            rows,
        }
    }

    /// Matrix whose `(i, j)` entry is the variable `rows[i][j]`.
    pub fn from_vars(table: &Arc<VarTable>, rows: &[Vec<Var>]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| SuperPolynomial::var(table, v)).collect())
            .collect();
        SuperMatrix::new(table, rows)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn entry(&self, i: usize, j: usize) -> &SuperPolynomial {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<SuperPolynomial>] {
        &self.rows
    }

    pub fn transpose(&self) -> SuperMatrix {
        let (r, c) = (self.nrows(), self.ncols());
        let rows = (0..c)
            .map(|j| (0..r).map(|i| self.rows[i][j].clone()).collect())
            .collect();
        SuperMatrix::new(&self.table, rows)
    }

    /// Copy with row `i` replaced.
    pub fn with_row(&self, i: usize, row: Vec<SuperPolynomial>) -> SuperMatrix {
        let mut m = self.clone();
        m.rows[i] = row;
        m
    }

    /// Row-ordered determinant `sum_s sgn(s) a_1^{s(1)} a_2^{s(2)} ... a_r^{s(r)}`.
    ///
    /// Factors are multiplied in row order, which matters once entries are
    /// odd. Computed by expansion along the first row with the minors of the
    /// remaining rows memoized by their column set.
    pub fn superdet(&self) -> Result<SuperPolynomial> {
        let r = self.nrows();
        if self.rows.iter().any(|row| row.len() != r) {
            return Err(Error::NonSquare {
                rows: r,
                cols: self.rows.iter().map(|x| x.len()).max().unwrap_or(0),
            });
        }
        if r > 63 {
            return Err(Error::Bounds(format!("determinant of size {r}")));
        }
        // minors[mask] = det of the last |mask| rows restricted to columns in mask
        let mut minors: FxHashMap<u64, SuperPolynomial> = FxHashMap::default();
        minors.insert(0, SuperPolynomial::one(&self.table));
        let mut level: Vec<u64> = vec![0];
        for k in (0..r).rev() {
            let mut next: Vec<u64> = Vec::new();
            let mut fresh: FxHashMap<u64, SuperPolynomial> = FxHashMap::default();
            for &mask in &level {
                for c in 0..r {
                    let bit = 1u64 << c;
                    if mask & bit != 0 || fresh.contains_key(&(mask | bit)) {
                        continue;
                    }
                    let full = mask | bit;
                    let mut acc = SuperPolynomial::zero(&self.table);
                    let mut pos = 0usize;
                    for col in 0..r {
                        let b = 1u64 << col;
                        if full & b == 0 {
                            continue;
                        }
                        let entry = &self.rows[k][col];
                        let minor = &minors[&(full & !b)];
                        if !entry.is_zero() && !minor.is_zero() {
                            let t = entry.checked_mul(minor)?;
                            acc = if pos.is_multiple_of(2) {
                                acc.checked_add(&t)?
                            } else {
                                acc.checked_sub(&t)?
                            };
                        }
                        pos += 1;
                    }
                    fresh.insert(full, acc);
                    next.push(full);
                }
            }
            minors = fresh;
            level = next;
        }
        let all = if r == 0 { 0 } else { u64::MAX >> (64 - r) };
        Ok(minors.remove(&all).unwrap_or_else(|| SuperPolynomial::one(&self.table)))
    }
}
