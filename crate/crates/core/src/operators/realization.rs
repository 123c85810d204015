use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use super::derivation::SuperDerivation;
use super::weight::WeightVector;
use crate::algebra::{Family, Profile, Rational, SuperPolynomial, Var, VarTable};
use crate::error::{Error, Result};

/// Cartan operators and simple raising operators of one Lie superalgebra
/// acting on a polynomial table.
#[derive(Clone, Debug)]
pub struct AlgebraRealization {
    pub name: String,
    pub cartan: Vec<SuperDerivation>,
    pub raising: Vec<SuperDerivation>,
    /// Root of each raising operator, aligned with `raising`.
    pub roots: Vec<WeightVector>,
}

impl AlgebraRealization {
    fn new(name: String, cartan: Vec<SuperDerivation>, raising: Vec<SuperDerivation>) -> Self {
        let mut r = AlgebraRealization {
            name,
            cartan,
            raising,
            roots: Vec::new(),
        };
        r.roots = r
            .raising
            .iter()
            .map(|d| match d.terms().first() {
                Some(&(_, u, v)) => &r.var_weight(u) - &r.var_weight(v),
                None => WeightVector::zero(r.rank()),
            })
            .collect();
        r
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Weight of a single variable.
    pub fn var_weight(&self, v: Var) -> WeightVector {
        WeightVector(
            self.cartan
                .iter()
                .map(|h| {
                    h.terms()
                        .iter()
                        .filter(|t| t.1 == v && t.2 == v)
                        .map(|t| t.0.to_integer().to_i64().expect("small weight"))
                        .sum()
                })
                .collect(),
        )
    }
}

fn tensor_dims(table: &VarTable) -> Result<(usize, usize, usize, usize)> {
    match table.profile() {
        Profile::Tensor { p, q, m, n, .. } => Ok((p, q, m, n)),
        other => Err(Error::Invalid(format!("expected a tensor table, got {other:?}"))),
    }
}

fn sum_op(
    table: &Arc<VarTable>,
    label: String,
    pairs: impl IntoIterator<Item = (i64, Var, Var)>,
) -> SuperDerivation {
    let terms = pairs
        .into_iter()
        .map(|(c, u, v)| (Rational::from_integer(c.into()), u, v))
        .collect();
    SuperDerivation::new(table, label, terms).expect("uniform parity by construction")
}

/// `gl(p|q)` acting on the column index of `x, xi, eta, y`.
pub fn build_glpq(table: &Arc<VarTable>) -> Result<AlgebraRealization> {
    let (p, q, m, n) = tensor_dims(table)?;
    let g = |f, a, b| table.get(f, a, b).expect("index in range");
    let mut cartan = Vec::new();
    for i in 1..=p {
        let pairs = (1..=m)
            .map(|j| (1, g(Family::X, j, i), g(Family::X, j, i)))
            .chain((1..=n).map(|j| (1, g(Family::Eta, j, i), g(Family::Eta, j, i))));
        cartan.push(sum_op(table, format!("gl(p|q) H{i}"), pairs));
    }
    for l in 1..=q {
        let pairs = (1..=m)
            .map(|j| (1, g(Family::Xi, j, l), g(Family::Xi, j, l)))
            .chain((1..=n).map(|j| (1, g(Family::Y, j, l), g(Family::Y, j, l))));
        cartan.push(sum_op(table, format!("gl(p|q) H{}", p + l), pairs));
    }
    let mut raising = Vec::new();
    for i in 2..=p {
        let pairs = (1..=m)
            .map(|j| (1, g(Family::X, j, i - 1), g(Family::X, j, i)))
            .chain((1..=n).map(|j| (1, g(Family::Eta, j, i - 1), g(Family::Eta, j, i))));
        raising.push(sum_op(table, format!("gl(p|q) E({},{})", i - 1, i), pairs));
    }
    for l in 2..=q {
        let pairs = (1..=m)
            .map(|j| (1, g(Family::Xi, j, l - 1), g(Family::Xi, j, l)))
            .chain((1..=n).map(|j| (1, g(Family::Y, j, l - 1), g(Family::Y, j, l))));
        raising.push(sum_op(
            table,
            format!("gl(p|q) E({},{})", p + l - 1, p + l),
            pairs,
        ));
    }
    if p >= 1 && q >= 1 {
        let pairs = (1..=m)
            .map(|j| (1, g(Family::X, j, p), g(Family::Xi, j, 1)))
            .chain((1..=n).map(|j| (1, g(Family::Eta, j, p), g(Family::Y, j, 1))));
        raising.push(sum_op(table, format!("gl(p|q) E({},{})", p, p + 1), pairs));
    }
    Ok(AlgebraRealization::new("gl(p|q)".into(), cartan, raising))
}

/// `gl(m|n)` acting on the row index of `x, xi, eta, y`.
pub fn build_glmn(table: &Arc<VarTable>) -> Result<AlgebraRealization> {
    let (p, q, m, n) = tensor_dims(table)?;
    let g = |f, a, b| table.get(f, a, b).expect("index in range");
    let mut cartan = Vec::new();
    for s in 1..=m {
        let pairs = (1..=p)
            .map(|j| (1, g(Family::X, s, j), g(Family::X, s, j)))
            .chain((1..=q).map(|j| (1, g(Family::Xi, s, j), g(Family::Xi, s, j))));
        cartan.push(sum_op(table, format!("gl(m|n) H{s}"), pairs));
    }
    for k in 1..=n {
        let pairs = (1..=p)
            .map(|j| (1, g(Family::Eta, k, j), g(Family::Eta, k, j)))
            .chain((1..=q).map(|j| (1, g(Family::Y, k, j), g(Family::Y, k, j))));
        cartan.push(sum_op(table, format!("gl(m|n) H{}", m + k), pairs));
    }
    let mut raising = Vec::new();
    for s in 2..=m {
        let pairs = (1..=p)
            .map(|j| (1, g(Family::X, s - 1, j), g(Family::X, s, j)))
            .chain((1..=q).map(|j| (1, g(Family::Xi, s - 1, j), g(Family::Xi, s, j))));
        raising.push(sum_op(table, format!("gl(m|n) E({},{})", s - 1, s), pairs));
    }
    for k in 2..=n {
        let pairs = (1..=p)
            .map(|j| (1, g(Family::Eta, k - 1, j), g(Family::Eta, k, j)))
            .chain((1..=q).map(|j| (1, g(Family::Y, k - 1, j), g(Family::Y, k, j))));
        raising.push(sum_op(
            table,
            format!("gl(m|n) E({},{})", m + k - 1, m + k),
            pairs,
        ));
    }
    if m >= 1 && n >= 1 {
        let pairs = (1..=p)
            .map(|j| (1, g(Family::X, m, j), g(Family::Eta, 1, j)))
            .chain((1..=q).map(|j| (-1, g(Family::Xi, m, j), g(Family::Y, 1, j))));
        raising.push(sum_op(table, format!("gl(m|n) E({},{})", m, m + 1), pairs));
    }
    Ok(AlgebraRealization::new("gl(m|n)".into(), cartan, raising))
}

/// Generator of `C[x_1..x_m, xi_1..xi_n]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Base {
    X(usize),
    Xi(usize),
}

impl Base {
    fn is_odd(self) -> bool {
        matches!(self, Base::Xi(_))
    }
}

/// The quadratic coordinate equal to `a * b`, with its sign.
fn quad(table: &VarTable, a: Base, b: Base) -> Option<(i64, Var)> {
    let get = |f, i, j| table.get(f, i, j).expect("index in range");
    match (a, b) {
        (Base::X(i), Base::X(j)) => Some((1, get(Family::X, i.min(j), i.max(j)))),
        (Base::Xi(k), Base::Xi(l)) => match k.cmp(&l) {
            std::cmp::Ordering::Less => Some((1, get(Family::Y, k, l))),
            std::cmp::Ordering::Greater => Some((-1, get(Family::Y, l, k))),
            std::cmp::Ordering::Equal => None,
        },
        (Base::Xi(k), Base::X(i)) | (Base::X(i), Base::Xi(k)) => Some((1, get(Family::Eta, k, i))),
    }
}

/// Derivation of the quadratic coordinates induced by the base operator
/// `sum c * u d/dv` via `D(ab) = D(a) b + (-1)^{|D||a|} a D(b)`.
pub fn induced_s2_derivation(
    table: &Arc<VarTable>,
    label: impl Into<String>,
    base: &[(i64, Base, Base)],
) -> Result<SuperDerivation> {
    let (m, n) = match table.profile() {
        Profile::SymmetricSquare { m, n } => (m, n),
        other => {
            return Err(Error::Invalid(format!(
                "expected a symmetric-square table, got {other:?}"
            )))
        }
    };
    let d_odd = base
        .first()
        .is_some_and(|&(_, u, v)| u.is_odd() != v.is_odd());
    let image = |a: Base| base.iter().filter(move |t| t.2 == a).map(|t| (t.0, t.1));
    let mut gens: Vec<(Var, Base, Base)> = Vec::new();
    for i in 1..=m {
        for j in i..=m {
            gens.push((table.get(Family::X, i, j).unwrap(), Base::X(i), Base::X(j)));
        }
    }
    for k in 1..=n {
        for l in k + 1..=n {
            gens.push((table.get(Family::Y, k, l).unwrap(), Base::Xi(k), Base::Xi(l)));
        }
    }
    for k in 1..=n {
        for i in 1..=m {
            gens.push((table.get(Family::Eta, k, i).unwrap(), Base::Xi(k), Base::X(i)));
        }
    }
    let mut terms: Vec<(Rational, Var, Var)> = Vec::new();
    for (g, a, b) in gens {
        let mut acc: Vec<(Var, i64)> = Vec::new();
        let mut push = |w: Var, c: i64| match acc.iter_mut().find(|e| e.0 == w) {
            Some(e) => e.1 += c,
            None => acc.push((w, c)),
        };
        for (c, u) in image(a) {
            if let Some((s, w)) = quad(table, u, b) {
                push(w, c * s);
            }
        }
        let sign = if d_odd && a.is_odd() { -1 } else { 1 };
        for (c, u) in image(b) {
            if let Some((s, w)) = quad(table, a, u) {
                push(w, sign * c * s);
            }
        }
        for (w, c) in acc {
            if c != 0 {
                terms.push((Rational::from_integer(c.into()), w, g));
            }
        }
    }
    SuperDerivation::new(table, label, terms)
}

/// `gl(m|n)` acting on `S(S^2 C^{m|n})` in quadratic coordinates, with the
/// standard Borel `x_i d/dx_{i+1}, xi_j d/dxi_{j+1}, x_m d/dxi_1`.
pub fn build_s2_glmn(table: &Arc<VarTable>) -> Result<AlgebraRealization> {
    let (m, n) = match table.profile() {
        Profile::SymmetricSquare { m, n } => (m, n),
        other => {
            return Err(Error::Invalid(format!(
                "expected a symmetric-square table, got {other:?}"
            )))
        }
    };
    let mut cartan = Vec::new();
    for i in 1..=m {
        cartan.push(induced_s2_derivation(
            table,
            format!("x{i}*d/dx{i}"),
            &[(1, Base::X(i), Base::X(i))],
        )?);
    }
    for k in 1..=n {
        cartan.push(induced_s2_derivation(
            table,
            format!("xi{k}*d/dxi{k}"),
            &[(1, Base::Xi(k), Base::Xi(k))],
        )?);
    }
    let mut raising = Vec::new();
    for i in 1..m {
        raising.push(induced_s2_derivation(
            table,
            format!("x{i}*d/dx{}", i + 1),
            &[(1, Base::X(i), Base::X(i + 1))],
        )?);
    }
    for j in 1..n {
        raising.push(induced_s2_derivation(
            table,
            format!("xi{j}*d/dxi{}", j + 1),
            &[(1, Base::Xi(j), Base::Xi(j + 1))],
        )?);
    }
    if m >= 1 && n >= 1 {
        raising.push(induced_s2_derivation(
            table,
            format!("x{m}*d/dxi1"),
            &[(1, Base::X(m), Base::Xi(1))],
        )?);
    }
    Ok(AlgebraRealization::new("gl(m|n) on S(S^2)".into(), cartan, raising))
}

/// Common eigenvalues of `f` under the Cartan operators of `r`.
pub fn weight_of(f: &SuperPolynomial, r: &AlgebraRealization) -> Result<WeightVector> {
    let Some((m0, c0)) = f.terms().next() else {
        return Err(Error::NotAWeightVector("zero polynomial".into()));
    };
    let mut w = Vec::with_capacity(r.rank());
    for h in &r.cartan {
        let g = h.apply(f)?;
        let ev = g.coeff(m0) / c0;
        if !ev.is_integer() || g != f.scale(&ev) {
            return Err(Error::NotAWeightVector(format!(
                "{} does not act by a scalar",
                h.label()
            )));
        }
        w.push(ev.to_integer().to_i64().expect("small weight"));
    }
    Ok(WeightVector(w))
}

/// First raising operator (over all realizations) not killing `f`, with
/// the image it produces.
pub fn first_non_annihilating<'a>(
    f: &SuperPolynomial,
    rs: &[&'a AlgebraRealization],
) -> Result<Option<(&'a SuperDerivation, SuperPolynomial)>> {
    for r in rs {
        for e in &r.raising {
            let img = e.apply(f)?;
            if !img.is_zero() {
                return Ok(Some((e, img)));
            }
        }
    }
    Ok(None)
}

/// Whether every simple raising operator of every realization kills `f`.
pub fn is_highest(f: &SuperPolynomial, rs: &[&AlgebraRealization]) -> Result<bool> {
    Ok(first_non_annihilating(f, rs)?.is_none())
}

/// Scalar by which the Euler-type operator acts, for sanity checks.
pub fn eigenvalue(h: &SuperDerivation, f: &SuperPolynomial) -> Result<Option<Rational>> {
    let Some((m0, c0)) = f.terms().next() else {
        return Ok(Some(Rational::zero()));
    };
    let g = h.apply(f)?;
    let ev = g.coeff(m0) / c0;
    Ok((g == f.scale(&ev)).then_some(ev))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::algebra::parse_poly;

    #[test]
    fn operator_counts() {
        let r = build_glpq(&VarTable::tensor(1, 0, 1, 1)).unwrap();
        assert!(r.raising.is_empty());
        let t = VarTable::tensor(2, 1, 1, 1);
        let r = build_glpq(&t).unwrap();
        assert_eq!(r.cartan.len(), 3);
        assert_eq!(r.raising.len(), 2);
        assert_eq!(
            r.raising.iter().filter(|d| d.parity().is_odd()).count(),
            1
        );
        assert!(build_glmn(&VarTable::tensor(1, 1, 1, 0)).unwrap().raising.is_empty());
        assert_eq!(build_glmn(&VarTable::tensor(1, 1, 2, 2)).unwrap().raising.len(), 3);
    }

    #[test]
    fn odd_glmn_generator_has_minus_sign_on_xi_part() {
        let t = VarTable::tensor(1, 1, 1, 1);
        let r = build_glmn(&t).unwrap();
        let odd = r.raising.last().unwrap();
        let xi = t.get(Family::Xi, 1, 1).unwrap();
        let coeff = odd.terms().iter().find(|tm| tm.1 == xi).unwrap().0.clone();
        assert_eq!(coeff, -Rational::one());
    }

    #[test]
    fn s2_induced_actions() {
        let t = VarTable::symmetric_square(2, 2);
        let d = induced_s2_derivation(&t, "x1 d/dx2", &[(1, Base::X(1), Base::X(2))]).unwrap();
        let x22 = parse_poly(&t, "x[2,2]").unwrap();
        assert_eq!(d.apply(&x22).unwrap(), parse_poly(&t, "2*x[1,2]").unwrap());
        let h12 = parse_poly(&t, "h[1,2]").unwrap();
        assert_eq!(d.apply(&h12).unwrap(), parse_poly(&t, "h[1,1]").unwrap());
        let e = induced_s2_derivation(&t, "xi1 d/dxi2", &[(1, Base::Xi(1), Base::Xi(2))]).unwrap();
        assert!(e.apply(&parse_poly(&t, "y[1,2]").unwrap()).unwrap().is_zero());
        let r = build_s2_glmn(&VarTable::symmetric_square(1, 1)).unwrap();
        assert_eq!(r.raising.len(), 1);
        assert!(r.raising[0].parity().is_odd());
    }

    #[test]
    fn weights_and_errors() {
        let t = VarTable::tensor(2, 0, 2, 0);
        let r = build_glmn(&t).unwrap();
        let f = parse_poly(&t, "x[1,1] + x[2,1]").unwrap();
        assert!(matches!(weight_of(&f, &r), Err(Error::NotAWeightVector(_))));
        let g = parse_poly(&t, "x[2,1]").unwrap();
        assert_eq!(weight_of(&g, &r).unwrap(), WeightVector(vec![0, 1]));
        assert!(!is_highest(&g, &[&r]).unwrap());
        assert_eq!(r.roots[0], WeightVector(vec![1, -1]));
    }
}
