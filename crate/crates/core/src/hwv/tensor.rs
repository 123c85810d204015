//! Highest weight vectors in `S(C^{p|q} (x) C^{m|n})` for
//! `gl(p|q) x gl(m|n)`.

use std::sync::Arc;

use num_traits::One;
use rustc_hash::FxHashMap;

use super::{factorial, Budget};
use crate::algebra::{divide_exact, Family, Rational, SuperMatrix, SuperPolynomial, Var, VarTable};
use crate::combinatorics::{enumerate_marked_diagrams, enumerate_marked_families, MarkedDiagram, Partition};
use crate::error::{Error, Result};
use crate::operators::{
    build_glmn, build_glpq, diagram_to_hw, weight_of, AlgebraRealization, WeightVector,
};

/// Variables, realizations and constructions for one tuple `(p, q, m, n)`.
#[derive(Clone, Debug)]
pub struct TensorModel {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub n: usize,
    table: Arc<VarTable>,
    /// Table carrying the extra rows `x_l^i, m < l <= p` when `p > m`.
    aux: Arc<VarTable>,
    glpq: AlgebraRealization,
    glmn: AlgebraRealization,
    budget: Budget,
}

impl TensorModel {
    pub fn new(p: usize, q: usize, m: usize, n: usize) -> Self {
        let table = VarTable::tensor(p, q, m, n);
        let aux = if p > m {
            VarTable::tensor_with_aux(p, q, m, n)
        } else {
            table.clone()
        };
        TensorModel {
            p,
            q,
            m,
            n,
            glpq: build_glpq(&table).expect("tensor table"),
            glmn: build_glmn(&table).expect("tensor table"),
            table,
            aux,
            budget: Budget::default(),
        }
    }

    /// Abort constructions whose intermediate results exceed `limit` terms.
    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn aux_table(&self) -> &Arc<VarTable> {
        &self.aux
    }

    pub fn glpq(&self) -> &AlgebraRealization {
        &self.glpq
    }

    pub fn glmn(&self) -> &AlgebraRealization {
        &self.glmn
    }

    pub fn realizations(&self) -> [&AlgebraRealization; 2] {
        [&self.glpq, &self.glmn]
    }

    fn var(&self, table: &VarTable, f: Family, a: usize, b: usize) -> Result<Var> {
        table.require(f, a, b)
    }

    fn x_row(&self, table: &VarTable, l: usize, width: usize) -> Result<Vec<Var>> {
        (1..=width).map(|i| self.var(table, Family::X, l, i)).collect()
    }

    fn eta_row(&self, table: &VarTable, k: usize, width: usize) -> Result<Vec<Var>> {
        (1..=width).map(|i| self.var(table, Family::Eta, k, i)).collect()
    }

    fn det(&self, table: &Arc<VarTable>, rows: &[Vec<Var>]) -> Result<SuperPolynomial> {
        let d = SuperMatrix::from_vars(table, rows).superdet()?;
        self.budget.check(&d)?;
        Ok(d)
    }

    /// Leading `r x r` minor `det(x_j^i)` of the even block.
    pub fn delta_r(&self, r: usize) -> Result<SuperPolynomial> {
        if r > self.m.min(self.p) {
            return Err(Error::Bounds(format!(
                "Delta_{r} needs r <= min(m, p) = {}",
                self.m.min(self.p)
            )));
        }
        let rows = (1..=r)
            .map(|l| self.x_row(&self.table, l, r))
            .collect::<Result<Vec<_>>>()?;
        self.det(&self.table, &rows)
    }

    /// `r x r` determinant with rows `(x_j^1..x_j^r)` for `j <= m` followed by
    /// `r - m` copies of `(eta_k^1..eta_k^r)`.
    pub fn delta_kr(&self, k: usize, r: usize) -> Result<SuperPolynomial> {
        if r < self.m || r > self.p || k == 0 || k > self.n {
            return Err(Error::Bounds(format!(
                "Delta_{{{k},{r}}} needs m <= r <= p and 1 <= k <= n"
            )));
        }
        let mut rows = (1..=self.m)
            .map(|l| self.x_row(&self.table, l, r))
            .collect::<Result<Vec<_>>>()?;
        let eta = self.eta_row(&self.table, k, r)?;
        rows.extend(std::iter::repeat_n(eta, r - self.m));
        self.det(&self.table, &rows)
    }

    fn x_table(&self) -> Result<&Arc<VarTable>> {
        if self.p < self.m {
            return Err(Error::Invalid("the square matrix X needs p >= m".into()));
        }
        Ok(&self.aux)
    }

    /// The `p x p` matrix `X` (with auxiliary rows when `p > m`).
    pub fn x_rows(&self) -> Result<Vec<Vec<Var>>> {
        let t = self.x_table()?;
        (1..=self.p).map(|l| self.x_row(t, l, self.p)).collect()
    }

    pub fn det_x(&self) -> Result<SuperPolynomial> {
        let t = self.x_table()?.clone();
        self.det(&t, &self.x_rows()?)
    }

    /// `det X_j(I)`: rows `i in I` of `X` replaced by `(eta_j^1..eta_j^p)`.
    pub fn x_sub(&self, j: usize, rows: &[usize]) -> Result<SuperPolynomial> {
        let t = self.x_table()?.clone();
        let mut x = self.x_rows()?;
        let eta = self.eta_row(&t, j, self.p)?;
        for &i in rows {
            if i == 0 || i > self.p {
                return Err(Error::Bounds(format!("row {i} of a {}x{} matrix", self.p, self.p)));
            }
            x[i - 1] = eta.clone();
        }
        self.det(&t, &x)
    }

    /// `Y_D` for a marked diagram of width `r`: row `k` of the `r x r`
    /// matrix `(y_k^j)` becomes `(xi_j^1..xi_j^r)` when column `k` is marked
    /// at row `j`.
    pub fn y_d(&self, d: &MarkedDiagram) -> Result<SuperMatrix> {
        self.y_d_on(&self.table, d)
    }

    fn y_d_on(&self, table: &Arc<VarTable>, d: &MarkedDiagram) -> Result<SuperMatrix> {
        let r = d.cols();
        let rows = (1..=r)
            .map(|k| match d.mark(k) {
                None => (1..=r).map(|j| self.var(table, Family::Y, k, j)).collect(),
                Some(row) => (1..=r).map(|j| self.var(table, Family::Xi, row, j)).collect(),
            })
            .collect::<Result<Vec<Vec<Var>>>>()?;
        Ok(SuperMatrix::from_vars(table, &rows))
    }

    fn det_y(&self, table: &Arc<VarTable>, d: &MarkedDiagram) -> Result<SuperPolynomial> {
        let det = self.y_d_on(table, d)?.superdet()?;
        self.budget.check(&det)?;
        Ok(det)
    }

    /// Rectangle vector `sum_D (-1)^{|D|(|D|-1)/2} det X_D det Y_D` for
    /// `p = m`, summing over marked `m x r` diagrams.
    pub fn gamma_r_pm(&self, r: usize) -> Result<SuperPolynomial> {
        if self.p != self.m {
            return Err(Error::Invalid("gamma_r_pm needs p = m".into()));
        }
        if r > self.q.min(self.n) {
            return Err(Error::Bounds(format!("width {r} exceeds min(q, n)")));
        }
        let t = &self.table;
        // det X_i with row j replaced by eta_i, j = 0 meaning unreplaced
        let mut xdets: FxHashMap<(usize, usize), SuperPolynomial> = FxHashMap::default();
        for i in 1..=r {
            xdets.insert((i, 0), self.x_sub(i, &[])?);
            for j in 1..=self.m {
                xdets.insert((i, j), self.x_sub(i, &[j])?);
            }
        }
        let mut out = SuperPolynomial::zero(t);
        for d in enumerate_marked_diagrams(self.m, r) {
            let mut term = SuperPolynomial::one(t);
            for i in 1..=r {
                term = &term * &xdets[&(i, d.mark(i).unwrap_or(0))];
                self.budget.check(&term)?;
            }
            term = &term * &self.det_y(t, &d)?;
            if sign_half(d.count()) < 0 {
                out = &out - &term;
            } else {
                out = &out + &term;
            }
            self.budget.check(&out)?;
        }
        Ok(out)
    }

    /// The `q = 0` vector `prod_{k<=r} Delta_{k,lambda'_k} prod_{j>r} Delta_{lambda'_j}`
    /// with `r = #{j : lambda'_j > m}`.
    pub fn hwv_q_zero(&self, lambda: &Partition) -> Result<SuperPolynomial> {
        if self.q != 0 {
            return Err(Error::Invalid("hwv_q_zero needs q = 0".into()));
        }
        self.check_hooks(lambda)?;
        let t = lambda.transpose();
        let mut out = SuperPolynomial::one(&self.table);
        for (j, &c) in t.parts().iter().enumerate() {
            let f = if c > self.m {
                self.delta_kr(j + 1, c)?
            } else {
                self.delta_r(c)?
            };
            out = &out * &f;
            self.budget.check(&out)?;
        }
        Ok(out)
    }

    /// `Gamma_{lambda_{m+1}} ... Gamma_{lambda_{m+s}} / Delta_m^{lambda_{m+2}+...+lambda_{m+s}}`
    /// times `prod_{j > lambda_{m+1}} Delta_{lambda'_j}`, for `p = m`.
    pub fn hwv_p_equals_m(&self, lambda: &Partition) -> Result<SuperPolynomial> {
        if self.p != self.m {
            return Err(Error::Invalid("hwv_p_equals_m needs p = m".into()));
        }
        self.check_hooks(lambda)?;
        let m = self.m;
        let below: Vec<usize> = lambda.parts().iter().skip(m).copied().collect();
        let mut out = SuperPolynomial::one(&self.table);
        for &w in &below {
            out = &out * &self.gamma_r_pm(w)?;
            self.budget.check(&out)?;
        }
        let exponent: usize = below.iter().skip(1).sum();
        if exponent > 0 {
            let den = self.delta_r(m)?.pow(exponent as u32);
            out = divide_exact(&out, &den)?;
        }
        let r = lambda.part(m + 1);
        for &c in lambda.transpose().parts().iter().skip(r) {
            out = &out * &self.delta_r(c)?;
            self.budget.check(&out)?;
        }
        Ok(out)
    }

    /// `Gamma(lambda_{p+1}, ..., lambda_{p+s})` for `p >= m`, built on the
    /// auxiliary table, divided by `(det X)^{lambda_{p+1}}` and moved back
    /// to the plain table.
    pub fn gamma_general(&self, widths: &[usize]) -> Result<SuperPolynomial> {
        let (p, m) = (self.p, self.m);
        if p < m {
            return Err(Error::Invalid("gamma_general needs p >= m".into()));
        }
        if widths.is_empty() {
            return Ok(SuperPolynomial::one(&self.table));
        }
        if widths.windows(2).any(|w| w[0] < w[1]) || widths.contains(&0) {
            return Err(Error::Invalid(format!("widths {widths:?} must be positive and weakly decreasing")));
        }
        let w1 = widths[0];
        if w1 > self.q.min(self.n) {
            return Err(Error::Bounds(format!("width {w1} exceeds min(q, n)")));
        }
        let t = self.aux.clone();
        let aux_rows: Vec<usize> = (m + 1..=p).collect();

        let mut xdets: FxHashMap<(usize, Vec<usize>), SuperPolynomial> = FxHashMap::default();
        let mut ydets: FxHashMap<MarkedDiagram, SuperPolynomial> = FxHashMap::default();
        let mut sum = SuperPolynomial::zero(&t);
        for fam in enumerate_marked_families(widths, m) {
            let total = fam.total();
            let mut coeff = Rational::from_integer((sign_half(total) * fam.epsilon()).into());
            for e in fam.e() {
                coeff /= factorial(e);
            }
            let mut term = SuperPolynomial::constant(&t, coeff);
            for j in 1..=w1 {
                let rows = fam.column_rows(j);
                let key = (j, rows.clone());
                if !xdets.contains_key(&key) {
                    xdets.insert(key.clone(), self.x_sub(j, &rows)?);
                }
                term = &term * &xdets[&key];
                if term.is_zero() {
                    break;
                }
            }
            if term.is_zero() {
                continue;
            }
            for d in fam.diagrams() {
                if !ydets.contains_key(d) {
                    ydets.insert(d.clone(), self.det_y(&t, d)?);
                }
                term = &term * &ydets[d];
            }
            sum = &sum + &term;
            self.budget.check(&sum)?;
        }
        let mut z = SuperPolynomial::one(&t);
        for j in 1..=w1 {
            z = &z * &self.x_sub(j, &aux_rows)?;
        }
        let num = &z * &sum;
        self.budget.check(&num)?;
        let den = self.det_x()?.pow(w1 as u32);
        let quotient = divide_exact(&num, &den)?;
        for v in t.vars().filter(|&v| t.info(v).auxiliary) {
            if quotient.contains_var(v) {
                return Err(Error::AuxiliaryResidue(t.name(v).to_string()));
            }
        }
        quotient.transfer(&self.table)
    }

    /// Highest weight vector for `lambda` with `lambda_{p+1} <= q`,
    /// `lambda_{m+1} <= n`. Inputs with `p < m` are computed with the two
    /// algebras exchanged and relabelled.
    pub fn hwv_general(&self, lambda: &Partition) -> Result<SuperPolynomial> {
        self.check_hooks(lambda)?;
        if self.p < self.m {
            let swapped = TensorModel::new(self.m, self.n, self.p, self.q).with_budget(self.budget);
            let v = swapped.hwv_general(lambda)?;
            return self.unswap(&swapped, &v);
        }
        let (p, m) = (self.p, self.m);
        let r_p = lambda.part(p + 1);
        let r_m = lambda.part(m + 1);
        let t = lambda.transpose();
        let mut out = if r_p > 0 {
            let widths: Vec<usize> = lambda.parts().iter().skip(p).copied().collect();
            self.gamma_general(&widths)?
        } else {
            SuperPolynomial::one(&self.table)
        };
        for i in r_p + 1..=r_m {
            out = &out * &self.delta_kr(i, t.part(i))?;
            self.budget.check(&out)?;
        }
        for i in r_m + 1..=t.len() {
            out = &out * &self.delta_r(t.part(i))?;
            self.budget.check(&out)?;
        }
        Ok(out)
    }

    /// Maps a vector of the model `(m, n, p, q)` into this one via
    /// `x'_a^b -> x_b^a`, `xi'_a^b -> eta_b^a`, `eta'_a^b -> xi_b^a`,
    /// `y'_a^b -> -y_b^a`.
    fn unswap(&self, swapped: &TensorModel, v: &SuperPolynomial) -> Result<SuperPolynomial> {
        let src = swapped.table.clone();
        let dst = self.table.clone();
        v.substitute(&dst, |var| {
            let info = src.info(var);
            let (a, b) = info.index;
            let (family, sign) = match info.family {
                Family::X => (Family::X, 1),
                Family::Xi => (Family::Eta, 1),
                Family::Eta => (Family::Xi, 1),
                Family::Y => (Family::Y, -1),
                other => return Err(Error::Invalid(format!("unexpected family {other:?}"))),
            };
            let w = dst.require(family, b, a)?;
            Ok(SuperPolynomial::var(&dst, w).scale(&Rational::from_integer(sign.into())))
        })
    }

    fn check_hooks(&self, lambda: &Partition) -> Result<()> {
        if !lambda.in_hook(self.p, self.q) {
            return Err(Error::HookViolation(format!(
                "lambda_{} = {} > q = {} for {lambda}",
                self.p + 1,
                lambda.part(self.p + 1),
                self.q
            )));
        }
        if !lambda.in_hook(self.m, self.n) {
            return Err(Error::HookViolation(format!(
                "lambda_{} = {} > n = {} for {lambda}",
                self.m + 1,
                lambda.part(self.m + 1),
                self.n
            )));
        }
        Ok(())
    }

    /// Joint highest weight `(gl(p|q) part, gl(m|n) part)` attached to `lambda`.
    pub fn expected_weight(&self, lambda: &Partition) -> Result<WeightVector> {
        let a = diagram_to_hw(lambda, self.p, self.q)?.to_weight();
        let b = diagram_to_hw(lambda, self.m, self.n)?.to_weight();
        Ok(a.concat(&b))
    }

    /// Joint weight of `f` under both Cartan subalgebras.
    pub fn joint_weight(&self, f: &SuperPolynomial) -> Result<WeightVector> {
        Ok(weight_of(f, &self.glpq)?.concat(&weight_of(f, &self.glmn)?))
    }
}

/// `(-1)^{d(d-1)/2}`.
pub(crate) fn sign_half(d: usize) -> i32 {
    if (d * d.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The two determinants of the mixed-row identity: rows `x_1..x_m` then
/// `eta_1` repeated, width `p`; and rows `x_1..x_m`, one `eta_1`, then
/// `eta_2` repeated, width `q`. Their product vanishes for `p >= q > m`.
pub fn identity_cor_factors(p: usize, q: usize, m: usize) -> Result<(SuperPolynomial, SuperPolynomial)> {
    if !(p >= q && q > m) {
        return Err(Error::Invalid(format!("need p >= q > m, got ({p}, {q}, {m})")));
    }
    let model = TensorModel::new(p, 0, m, 2);
    let t = model.table().clone();
    let xs = |w: usize| -> Result<Vec<Vec<Var>>> { (1..=m).map(|l| model.x_row(&t, l, w)).collect() };
    let mut a = xs(p)?;
    let e1 = model.eta_row(&t, 1, p)?;
    a.extend(std::iter::repeat_n(e1, p - m));
    let mut b = xs(q)?;
    b.push(model.eta_row(&t, 1, q)?);
    let e2 = model.eta_row(&t, 2, q)?;
    b.extend(std::iter::repeat_n(e2, q - m - 1));
    Ok((model.det(&t, &a)?, model.det(&t, &b)?))
}

/// Checks that the product of [`identity_cor_factors`] is zero.
pub fn verify_identity_cor(p: usize, q: usize, m: usize) -> Result<bool> {
    let (a, b) = identity_cor_factors(p, q, m)?;
    Ok((&a * &b).is_zero())
}

/// `det X_1(1) ... det X_1(p) = (det X)^{p-1} det X_1(1..p) / p!` in the
/// model `(p, 0, p, 1)`.
pub fn verify_keylemma(p: usize) -> Result<bool> {
    if p == 0 {
        return Err(Error::Invalid("p must be positive".into()));
    }
    let model = TensorModel::new(p, 0, p, 1);
    let mut lhs = SuperPolynomial::one(model.table());
    for i in 1..=p {
        lhs = &lhs * &model.x_sub(1, &[i])?;
    }
    let all: Vec<usize> = (1..=p).collect();
    let rhs = (&model.det_x()?.pow(p as u32 - 1) * &model.x_sub(1, &all)?)
        .scale(&(Rational::one() / factorial(p)));
    Ok(lhs == rhs)
}

/// Outcome of the three statements about `det X_1(I) det X_1(J)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaincorOutcome {
    /// Product vanishes exactly when `I` and `J` meet.
    pub vanishing: bool,
    /// `prod_{i in I} det X_1(i) = (det X)^{|I|-1} det X_1(I) / |I|!`.
    pub product: bool,
    /// Merge formula with `eps_{IJ} |I|! |J|! / (|I|+|J|)!` for disjoint sets.
    pub merge: bool,
}

impl MaincorOutcome {
    pub fn all(&self) -> bool {
        self.vanishing && self.product && self.merge
    }
}

pub fn verify_maincor(p: usize, i_set: &[usize], j_set: &[usize]) -> Result<MaincorOutcome> {
    let model = TensorModel::new(p, 0, p, 1);
    let t = model.table().clone();
    let di = model.x_sub(1, i_set)?;
    let dj = model.x_sub(1, j_set)?;
    let prod = &di * &dj;
    let meet = i_set.iter().any(|i| j_set.contains(i));
    let vanishing = prod.is_zero() == meet;

    let mut lhs = SuperPolynomial::one(&t);
    for &i in i_set {
        lhs = &lhs * &model.x_sub(1, &[i])?;
    }
    let dx = model.det_x()?;
    let product = if i_set.is_empty() {
        // (det X)^{-1} det X_1(empty) = 1
        lhs == SuperPolynomial::one(&t)
    } else {
        let rhs = (&dx.pow(i_set.len() as u32 - 1) * &di)
            .scale(&(Rational::one() / factorial(i_set.len())));
        lhs == rhs
    };

    let merge = if meet {
        true
    } else {
        let seq: Vec<usize> = i_set.iter().chain(j_set).copied().collect();
        let eps = crate::combinatorics::sort_sign(&seq);
        let mut union = seq.clone();
        union.sort_unstable();
        let c = factorial(i_set.len()) * factorial(j_set.len()) / factorial(union.len())
            * Rational::from_integer(eps.into());
        let rhs = (&dx * &model.x_sub(1, &union)?).scale(&c);
        prod == rhs
    };
    Ok(MaincorOutcome {
        vanishing,
        product,
        merge,
    })
}
