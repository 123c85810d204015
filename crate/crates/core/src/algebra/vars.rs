use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Index of a variable inside its [`VarTable`].
///
/// Odd variables are ordered by this index; that order is the canonical
/// order used for signs of Grassmann monomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(pub u32);

impl Var {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_count(odd_factors: usize) -> Self {
        if odd_factors % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Parity of a product.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// Indexed variable families.
///
/// In the tensor profile `X` is `x_l^i = e_l (x) e^i`, `Xi` is `xi_l^j`,
/// `Eta` is `eta_k^i` and `Y` is `y_k^j`. The symmetric-square profile reuses
/// `X` for `x_{ij}`, `Y` for `y_{kl}` and `Eta` for `eta_{ki}`. Character
/// tables use `X`, `Y`, `U`, `V` with a single index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    X,
    Xi,
    Eta,
    Y,
    U,
    V,
    Named,
}

impl Family {
    fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Xi => "xi",
            Family::Eta => "h",
            Family::Y => "y",
            Family::U => "u",
            Family::V => "v",
            Family::Named => "",
        }
    }
}

/// Which construction produced a table.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Profile {
    /// `S(C^{p|q} (x) C^{m|n})`; `x_rows` is `m`, or `max(m, p)` when the
    /// auxiliary rows `x_l^i, m < l <= p` are present.
    Tensor {
        p: usize,
        q: usize,
        m: usize,
        n: usize,
        x_rows: usize,
    },
    /// `S(S^2 C^{m|n})` in quadratic coordinates.
    SymmetricSquare { m: usize, n: usize },
    /// Commuting character variables `x_1..x_p, y_1..y_q, u_1..u_m, v_1..v_n`.
    Character {
        p: usize,
        q: usize,
        m: usize,
        n: usize,
    },
    Custom,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarInfo {
    pub name: String,
    pub parity: Parity,
    pub family: Family,
    pub index: (usize, usize),
    /// Extra even variable introduced only as a device during a construction.
    pub auxiliary: bool,
}

/// Immutable table of variables with fixed parities and a fixed order.
#[derive(Clone, Debug)]
pub struct VarTable {
    profile: Profile,
    vars: Vec<VarInfo>,
    by_name: HashMap<String, Var>,
    by_key: HashMap<(Family, usize, usize), Var>,
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        self.profile == other.profile && self.vars == other.vars
    }
}

impl Eq for VarTable {}

struct Builder {
    vars: Vec<VarInfo>,
}

impl Builder {
    fn new() -> Self {
        Builder { vars: Vec::new() }
    }

    fn push(&mut self, family: Family, a: usize, b: usize, parity: Parity, auxiliary: bool) {
        let name = format!("{}[{},{}]", family.prefix(), a, b);
        self.push_named(name, family, (a, b), parity, auxiliary);
    }

    fn push_single(&mut self, family: Family, a: usize) {
        let name = format!("{}[{}]", family.prefix(), a);
        self.push_named(name, family, (a, 0), Parity::Even, false);
    }

    fn push_named(
        &mut self,
        name: String,
        family: Family,
        index: (usize, usize),
        parity: Parity,
        auxiliary: bool,
    ) {
        self.vars.push(VarInfo {
            name,
            parity,
            family,
            index,
            auxiliary,
        });
    }

    fn finish(self, profile: Profile) -> Result<VarTable> {
        let mut by_name = HashMap::with_capacity(self.vars.len());
        let mut by_key = HashMap::with_capacity(self.vars.len());
        for (i, info) in self.vars.iter().enumerate() {
            let v = Var(i as u32);
            if by_name.insert(info.name.clone(), v).is_some() {
                return Err(Error::Invalid(format!("duplicate variable {}", info.name)));
            }
            if info.family != Family::Named {
                by_key.insert((info.family, info.index.0, info.index.1), v);
            }
        }
        Ok(VarTable {
            profile,
            vars: self.vars,
            by_name,
            by_key,
        })
    }
}

impl VarTable {
    /// Variables of `C[x, xi, eta, y]` for `S(C^{p|q} (x) C^{m|n})`.
    pub fn tensor(p: usize, q: usize, m: usize, n: usize) -> Arc<VarTable> {
        Arc::new(Self::build_tensor(p, q, m, n, m))
    }

    /// Tensor profile with auxiliary even rows `x_l^i` for `m < l <= p`.
    pub fn tensor_with_aux(p: usize, q: usize, m: usize, n: usize) -> Arc<VarTable> {
        Arc::new(Self::build_tensor(p, q, m, n, m.max(p)))
    }

    fn build_tensor(p: usize, q: usize, m: usize, n: usize, x_rows: usize) -> VarTable {
        let mut b = Builder::new();
        for l in 1..=m {
            for i in 1..=p {
                b.push(Family::X, l, i, Parity::Even, false);
            }
        }
        // odd order: xi lex (l, j), then eta lex (k, i)
        for l in 1..=m {
            for j in 1..=q {
                b.push(Family::Xi, l, j, Parity::Odd, false);
            }
        }
        for k in 1..=n {
            for i in 1..=p {
                b.push(Family::Eta, k, i, Parity::Odd, false);
            }
        }
        for k in 1..=n {
            for j in 1..=q {
                b.push(Family::Y, k, j, Parity::Even, false);
            }
        }
        for l in m + 1..=x_rows {
            for i in 1..=p {
                b.push(Family::X, l, i, Parity::Even, true);
            }
        }
        b.finish(Profile::Tensor {
            p,
            q,
            m,
            n,
            x_rows,
        })
        .expect("tensor names are unique")
    }

    /// Quadratic coordinates of `S(S^2 C^{m|n})`: `x[i,j]` (i <= j, even),
    /// `y[k,l]` (k < l, even), `h[k,i]` (odd).
    pub fn symmetric_square(m: usize, n: usize) -> Arc<VarTable> {
        let mut b = Builder::new();
        for i in 1..=m {
            for j in i..=m {
                b.push(Family::X, i, j, Parity::Even, false);
            }
        }
        for k in 1..=n {
            for l in k + 1..=n {
                b.push(Family::Y, k, l, Parity::Even, false);
            }
        }
        for k in 1..=n {
            for i in 1..=m {
                b.push(Family::Eta, k, i, Parity::Odd, false);
            }
        }
        Arc::new(
            b.finish(Profile::SymmetricSquare { m, n })
                .expect("names are unique"),
        )
    }

    /// Commuting variables `x[1..p], y[1..q], u[1..m], v[1..n]` for characters.
    pub fn character(p: usize, q: usize, m: usize, n: usize) -> Arc<VarTable> {
        let mut b = Builder::new();
        for (family, count) in [
            (Family::X, p),
            (Family::Y, q),
            (Family::U, m),
            (Family::V, n),
        ] {
            for a in 1..=count {
                b.push_single(family, a);
            }
        }
        Arc::new(
            b.finish(Profile::Character { p, q, m, n })
                .expect("names are unique"),
        )
    }

    /// A table of explicitly named variables, in the given order.
    pub fn custom<S: Into<String>>(vars: impl IntoIterator<Item = (S, Parity)>) -> Result<Arc<VarTable>> {
        let mut b = Builder::new();
        for (i, (name, parity)) in vars.into_iter().enumerate() {
            b.push_named(name.into(), Family::Named, (i, 0), parity, false);
        }
        Ok(Arc::new(b.finish(Profile::Custom)?))
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.vars.len() as u32).map(Var)
    }

    pub fn info(&self, v: Var) -> &VarInfo {
        &self.vars[v.index()]
    }

    pub fn name(&self, v: Var) -> &str {
        &self.vars[v.index()].name
    }

    pub fn parity(&self, v: Var) -> Parity {
        self.vars[v.index()].parity
    }

    pub fn is_odd(&self, v: Var) -> bool {
        self.vars[v.index()].parity.is_odd()
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.by_name.get(name).copied()
    }

    pub fn get(&self, family: Family, a: usize, b: usize) -> Option<Var> {
        self.by_key.get(&(family, a, b)).copied()
    }

    pub fn require(&self, family: Family, a: usize, b: usize) -> Result<Var> {
        self.get(family, a, b).ok_or_else(|| {
            Error::Bounds(format!("no variable {}[{},{}] in this table", family.prefix(), a, b))
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_order_puts_xi_before_eta() {
        let t = VarTable::tensor(2, 1, 1, 1);
        let xi = t.get(Family::Xi, 1, 1).unwrap();
        let eta = t.get(Family::Eta, 1, 1).unwrap();
        assert!(xi < eta);
        assert!(t.is_odd(xi) && t.is_odd(eta));
        assert!(!t.is_odd(t.get(Family::Y, 1, 1).unwrap()));
        assert_eq!(t.name(eta), "h[1,1]");
    }

    #[test]
    fn aux_rows_are_flagged() {
        let t = VarTable::tensor_with_aux(3, 0, 1, 1);
        let aux = t.get(Family::X, 3, 2).unwrap();
        assert!(t.info(aux).auxiliary);
        assert!(!t.info(t.get(Family::X, 1, 2).unwrap()).auxiliary);
        assert!(VarTable::tensor(3, 0, 1, 1).get(Family::X, 2, 1).is_none());
    }

    #[test]
    fn symmetric_square_only_stores_canonical_indices() {
        let t = VarTable::symmetric_square(2, 3);
        assert!(t.get(Family::X, 1, 2).is_some());
        assert!(t.get(Family::X, 2, 1).is_none());
        assert!(t.get(Family::Y, 1, 1).is_none());
        assert_eq!(t.len(), 3 + 3 + 6);
    }
}
