//! Highest weight vectors in `S(S^2 C^{m|n})` for `gl(m|n)`.

use std::sync::Arc;

use super::Budget;
use crate::algebra::{divide_exact, Family, SuperMatrix, SuperPolynomial, Var, VarTable};
use crate::combinatorics::{enumerate_pairings, Partition};
use crate::error::{Error, Result};
use crate::operators::{
    build_s2_glmn, diagram_to_hw, induced_s2_derivation, weight_of, AlgebraRealization, Base,
    WeightVector,
};

/// Variables `x[i,j], y[k,l], h[k,i]` and the realization of `gl(m|n)`.
#[derive(Clone, Debug)]
pub struct S2Model {
    pub m: usize,
    pub n: usize,
    table: Arc<VarTable>,
    glmn: AlgebraRealization,
    budget: Budget,
}

impl S2Model {
    pub fn new(m: usize, n: usize) -> Self {
        let table = VarTable::symmetric_square(m, n);
        S2Model {
            m,
            n,
            glmn: build_s2_glmn(&table).expect("symmetric-square table"),
            table,
            budget: Budget::default(),
        }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn glmn(&self) -> &AlgebraRealization {
        &self.glmn
    }

    /// `x_{ij}` for any order of `i, j`.
    fn x(&self, i: usize, j: usize) -> Result<Var> {
        self.table.require(Family::X, i.min(j), i.max(j))
    }

    fn eta(&self, k: usize, i: usize) -> Result<Var> {
        self.table.require(Family::Eta, k, i)
    }

    /// `xi_a xi_b` in the quadratic coordinates: `y_{ab}`, `-y_{ba}` or 0.
    pub fn xi_pair(&self, a: usize, b: usize) -> Result<SuperPolynomial> {
        let t = &self.table;
        Ok(match a.cmp(&b) {
            std::cmp::Ordering::Equal => SuperPolynomial::zero(t),
            std::cmp::Ordering::Less => SuperPolynomial::var(t, t.require(Family::Y, a, b)?),
            std::cmp::Ordering::Greater => -SuperPolynomial::var(t, t.require(Family::Y, b, a)?),
        })
    }

    fn x_rows(&self, size: usize) -> Result<Vec<Vec<Var>>> {
        (1..=size)
            .map(|i| (1..=size).map(|j| self.x(i, j)).collect())
            .collect()
    }

    fn det(&self, rows: &[Vec<Var>]) -> Result<SuperPolynomial> {
        let d = SuperMatrix::from_vars(&self.table, rows).superdet()?;
        self.budget.check(&d)?;
        Ok(d)
    }

    /// Leading `r x r` minor of the symmetric matrix `X = (x_{ij})`.
    pub fn delta_r(&self, r: usize) -> Result<SuperPolynomial> {
        if r > self.m {
            return Err(Error::Bounds(format!("Delta_{r} needs r <= m = {}", self.m)));
        }
        self.det(&self.x_rows(r)?)
    }

    pub fn det_x(&self) -> Result<SuperPolynomial> {
        self.delta_r(self.m)
    }

    /// `det X_i(xi_a)`: row `i` of `X` replaced by `(eta_{a1}..eta_{am})`.
    pub fn x_sub(&self, i: usize, a: usize) -> Result<SuperPolynomial> {
        let mut rows = self.x_rows(self.m)?;
        if i == 0 || i > self.m {
            return Err(Error::Bounds(format!("row {i} of an {0}x{0} matrix", self.m)));
        }
        rows[i - 1] = (1..=self.m).map(|j| self.eta(a, j)).collect::<Result<_>>()?;
        self.det(&rows)
    }

    /// `Delta(xi_a, xi_b) = -det X (xi_a xi_b) + sum_i det X_i(xi_a) (xi_b x_i)`.
    pub fn delta_xi(&self, a: usize, b: usize) -> Result<SuperPolynomial> {
        let t = &self.table;
        let mut out = -(&self.det_x()? * &self.xi_pair(a, b)?);
        for i in 1..=self.m {
            let eta = SuperPolynomial::var(t, self.eta(b, i)?);
            out = &out + &(&self.x_sub(i, a)? * &eta);
        }
        Ok(out)
    }

    /// `Gamma(2l) = sum_sigma eps_sigma prod Delta(xi_{i_1}, xi_{i_2})` over
    /// perfect matchings of `{1..2l}`.
    pub fn gamma_2l(&self, l: usize) -> Result<SuperPolynomial> {
        if 2 * l > self.n {
            return Err(Error::Bounds(format!("Gamma({}) needs 2l <= n = {}", 2 * l, self.n)));
        }
        let t = &self.table;
        let mut deltas = vec![vec![None; 2 * l + 1]; 2 * l + 1];
        let mut out = SuperPolynomial::zero(t);
        for sigma in enumerate_pairings(2 * l) {
            let mut term = SuperPolynomial::one(t);
            for &(a, b) in sigma.pairs() {
                if deltas[a][b].is_none() {
                    deltas[a][b] = Some(self.delta_xi(a, b)?);
                }
                term = &term * deltas[a][b].as_ref().expect("filled");
                self.budget.check(&term)?;
            }
            out = if sigma.sign() < 0 { &out - &term } else { &out + &term };
            self.budget.check(&out)?;
        }
        Ok(out)
    }

    /// Vector for an even partition with `lambda_{m+1} <= n`:
    /// `Gamma(lambda_{m+1}) ... Gamma(lambda_l) / (det X)^{(lambda_{m+2}+...+lambda_l)/2}`
    /// times `prod Delta_{lambda'_{2i}}` over the column pairs of length `<= m`.
    pub fn hwv_s2(&self, lambda: &Partition) -> Result<SuperPolynomial> {
        if !lambda.all_parts_even() {
            return Err(Error::Invalid(format!("{lambda} has an odd part")));
        }
        if !lambda.in_hook(self.m, self.n) {
            return Err(Error::HookViolation(format!(
                "lambda_{} = {} > n = {} for {lambda}",
                self.m + 1,
                lambda.part(self.m + 1),
                self.n
            )));
        }
        let m = self.m;
        let below: Vec<usize> = lambda.parts().iter().skip(m).copied().collect();
        let mut out = SuperPolynomial::one(&self.table);
        for &w in &below {
            out = &out * &self.gamma_2l(w / 2)?;
            self.budget.check(&out)?;
        }
        let exponent: usize = below.iter().skip(1).sum::<usize>() / 2;
        if exponent > 0 {
            out = divide_exact(&out, &self.det_x()?.pow(exponent as u32))?;
        }
        let r = lambda.part(m + 1);
        let t = lambda.transpose();
        for i in r / 2 + 1..=lambda.part(1) / 2 {
            out = &out * &self.delta_r(t.part(2 * i))?;
            self.budget.check(&out)?;
        }
        Ok(out)
    }

    pub fn expected_weight(&self, lambda: &Partition) -> Result<WeightVector> {
        Ok(diagram_to_hw(lambda, self.m, self.n)?.to_weight())
    }

    pub fn weight(&self, f: &SuperPolynomial) -> Result<WeightVector> {
        weight_of(f, &self.glmn)
    }
}

/// Determinant of `[[0, theta], [theta^t, A]]` with `theta_i = h[1,i]` and
/// `A = (x_{ij})` symmetric, in the table of `S(S^2 C^{m|1})`.
pub fn bordered_det(m: usize) -> Result<SuperPolynomial> {
    let model = S2Model::new(m, 1);
    let t = model.table().clone();
    let theta = |i: usize| -> Result<SuperPolynomial> { Ok(SuperPolynomial::var(&t, model.eta(1, i)?)) };
    let mut rows = Vec::with_capacity(m + 1);
    let mut first = vec![SuperPolynomial::zero(&t)];
    for i in 1..=m {
        first.push(theta(i)?);
    }
    rows.push(first);
    for i in 1..=m {
        let mut row = vec![theta(i)?];
        for j in 1..=m {
            row.push(SuperPolynomial::var(&t, model.x(i, j)?));
        }
        rows.push(row);
    }
    SuperMatrix::new(&t, rows).superdet()
}

/// Checks that [`bordered_det`] vanishes.
pub fn verify_bordered_det(m: usize) -> Result<bool> {
    Ok(bordered_det(m)?.is_zero())
}

/// Outcome of the four identities satisfied by `Delta(xi_a, xi_b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct S2IdentityOutcome {
    /// `x_{i-1} d/dx_i` kills every `Delta(xi_k, xi_l)`.
    pub id1: bool,
    /// `xi_{j-1} d/dxi_j Delta(xi_j, xi_l) = Delta(xi_{j-1}, xi_l)`, `l != j`.
    pub id2: bool,
    /// `xi_{j-1} d/dxi_j Delta(xi_s, xi_j) = Delta(xi_s, xi_{j-1})`, `s != j`.
    pub id3: bool,
    /// `Delta(xi_j, xi_j) = 0`.
    pub id4: bool,
}

impl S2IdentityOutcome {
    pub fn all(&self) -> bool {
        self.id1 && self.id2 && self.id3 && self.id4
    }
}

pub fn verify_s2_identities(m: usize, n: usize) -> Result<S2IdentityOutcome> {
    let model = S2Model::new(m, n);
    let t = model.table().clone();
    let mut deltas = vec![vec![SuperPolynomial::zero(&t); n + 1]; n + 1];
    for a in 1..=n {
        for b in 1..=n {
            deltas[a][b] = model.delta_xi(a, b)?;
        }
    }
    let mut out = S2IdentityOutcome {
        id1: true,
        id2: true,
        id3: true,
        id4: true,
    };
    for i in 2..=m {
        let d = induced_s2_derivation(&t, "x_{i-1} d/dx_i", &[(1, Base::X(i - 1), Base::X(i))])?;
        for a in 1..=n {
            for b in 1..=n {
                out.id1 &= d.apply(&deltas[a][b])?.is_zero();
            }
        }
    }
    for j in 2..=n {
        let d = induced_s2_derivation(&t, "xi_{j-1} d/dxi_j", &[(1, Base::Xi(j - 1), Base::Xi(j))])?;
        for l in (1..=n).filter(|&l| l != j) {
            out.id2 &= d.apply(&deltas[j][l])? == deltas[j - 1][l];
            out.id3 &= d.apply(&deltas[l][j])? == deltas[l][j - 1];
        }
    }
    for j in 1..=n {
        out.id4 &= deltas[j][j].is_zero();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::operators::is_highest;

    #[test]
    fn smallest_gamma() {
        let model = S2Model::new(1, 2);
        let g = model.gamma_2l(1).unwrap();
        assert_eq!(
            g,
            parse_poly(model.table(), "-x[1,1]*y[1,2] + h[1,1]*h[2,1]").unwrap()
        );
        assert!(is_highest(&g, &[model.glmn()]).unwrap());
    }

    #[test]
    fn pfaffian_case() {
        // m = 0: Gamma(4) is the Pfaffian of the 4x4 skew matrix (y_{kl})
        let model = S2Model::new(0, 4);
        let g = model.gamma_2l(2).unwrap();
        let pf = parse_poly(model.table(), "y[1,2]*y[3,4] - y[1,3]*y[2,4] + y[1,4]*y[2,3]").unwrap();
        assert_eq!(g, pf);
    }

    #[test]
    fn bordered_vanishes() {
        for m in 1..=3 {
            assert!(bordered_det(m).unwrap().is_zero());
        }
    }

    #[test]
    fn identities_small() {
        assert!(verify_s2_identities(2, 3).unwrap().all());
    }
}
