//! Schur, skew Schur and hook Schur polynomials.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::algebra::{SuperPolynomial, Var, VarTable};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Partitions `nu` with `inner <= nu <= outer` and `outer / nu` a horizontal strip.
fn strip_bottoms(outer: &Partition, inner: &Partition) -> Vec<Partition> {
    let len = outer.len();
    let mut out = Vec::new();
    let mut cur = vec![0usize; len];
    fn go(i: usize, outer: &Partition, inner: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            out.push(Partition::new(cur.clone()));
            return;
        }
        let lo = outer.part(i + 2).max(inner.part(i + 1));
        let hi = outer.part(i + 1);
        for v in lo..=hi {
            cur[i] = v;
            go(i + 1, outer, inner, cur, out);
        }
    }
    go(0, outer, inner, &mut cur, &mut out);
    out
}

/// Skew Schur polynomials in a fixed list of commuting variables, memoized
/// over the recursion `s_{l/m}(x_1..x_N) = sum_nu s_{nu/m}(x_1..x_{N-1}) x_N^{|l/nu|}`.
pub struct SchurEngine {
    table: Arc<VarTable>,
    vars: Vec<Var>,
    memo: FxHashMap<(Partition, Partition, usize), SuperPolynomial>,
}

impl SchurEngine {
    /// Errors if a variable is odd.
    pub fn new(table: &Arc<VarTable>, vars: &[Var]) -> Result<Self> {
        if vars.iter().any(|&v| table.is_odd(v)) {
            return Err(Error::Invalid("Schur polynomials need even variables".into()));
        }
        Ok(SchurEngine {
            table: table.clone(),
            vars: vars.to_vec(),
            memo: FxHashMap::default(),
        })
    }

    pub fn skew(&mut self, outer: &Partition, inner: &Partition) -> Result<SuperPolynomial> {
        if !outer.contains(inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(self.skew_in(outer, inner, self.vars.len()))
    }

    pub fn schur(&mut self, lambda: &Partition) -> SuperPolynomial {
        self.skew_in(lambda, &Partition::empty(), self.vars.len())
    }

    fn skew_in(&mut self, outer: &Partition, inner: &Partition, nvars: usize) -> SuperPolynomial {
        if outer == inner {
            return SuperPolynomial::one(&self.table);
        }
        if nvars == 0 {
            return SuperPolynomial::zero(&self.table);
        }
        let key = (outer.clone(), inner.clone(), nvars);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let x = SuperPolynomial::var(&self.table, self.vars[nvars - 1]);
        let mut out = SuperPolynomial::zero(&self.table);
        for nu in strip_bottoms(outer, inner) {
            let rest = self.skew_in(&nu, inner, nvars - 1);
            if rest.is_zero() {
                continue;
            }
            out = &out + &(&rest * &x.pow((outer.size() - nu.size()) as u32));
        }
        self.memo.insert(key, out.clone());
        out
    }
}

/// `s_lambda(vars)`; zero when `l(lambda)` exceeds the number of variables.
pub fn schur(table: &Arc<VarTable>, vars: &[Var], lambda: &Partition) -> Result<SuperPolynomial> {
    Ok(SchurEngine::new(table, vars)?.schur(lambda))
}

/// `s_{outer/inner}(vars)`.
pub fn skew_schur(
    table: &Arc<VarTable>,
    vars: &[Var],
    outer: &Partition,
    inner: &Partition,
) -> Result<SuperPolynomial> {
    SchurEngine::new(table, vars)?.skew(outer, inner)
}

/// Hook Schur polynomials `HS_lambda(x; y)` for fixed variable lists.
pub struct HookSchurEngine {
    x: SchurEngine,
    y: SchurEngine,
    m: usize,
}

impl HookSchurEngine {
    pub fn new(table: &Arc<VarTable>, xs: &[Var], ys: &[Var]) -> Result<Self> {
        Ok(HookSchurEngine {
            x: SchurEngine::new(table, xs)?,
            y: SchurEngine::new(table, ys)?,
            m: xs.len(),
        })
    }

    /// `sum_{mu <= lambda, l(mu) <= m} s_mu(x) s_{lambda'/mu'}(y)`.
    pub fn hook_schur(&mut self, lambda: &Partition) -> SuperPolynomial {
        let lt = lambda.transpose();
        let mut out = SuperPolynomial::zero(&self.x.table);
        for mu in sub_partitions(lambda, self.m) {
            let sx = self.x.schur(&mu);
            if sx.is_zero() {
                continue;
            }
            let sy = self.y.skew_in(&lt, &mu.transpose(), self.y.vars.len());
            if sy.is_zero() {
                continue;
            }
            out = &out + &(&sx * &sy);
        }
        out
    }
}

/// Partitions `mu` contained in `lambda` with at most `max_len` parts.
pub fn sub_partitions(lambda: &Partition, max_len: usize) -> Vec<Partition> {
    let len = lambda.len().min(max_len);
    let mut out = Vec::new();
    let mut cur = vec![0usize; len];
    fn go(i: usize, lambda: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            out.push(Partition::new(cur.clone()));
            return;
        }
        let hi = if i == 0 { lambda.part(1) } else { lambda.part(i + 1).min(cur[i - 1]) };
        for v in 0..=hi {
            cur[i] = v;
            go(i + 1, lambda, cur, out);
        }
    }
    go(0, lambda, &mut cur, &mut out);
    out
}

/// `HS_lambda(x_1..x_m; y_1..y_n)` over the table `x[1..m], y[1..n]`.
pub fn hook_schur(lambda: &Partition, m: usize, n: usize) -> SuperPolynomial {
    let table = VarTable::character(m, n, 0, 0);
    let xs: Vec<Var> = table.vars().take(m).collect();
    let ys: Vec<Var> = table.vars().skip(m).collect();
    HookSchurEngine::new(&table, &xs, &ys)
        .expect("character variables are even")
        .hook_schur(lambda)
}
