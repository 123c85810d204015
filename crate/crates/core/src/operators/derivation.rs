use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use crate::algebra::monomial::mono_mul;
use crate::algebra::poly::same_table;
use crate::algebra::{Parity, Rational, SuperMonomial, SuperPolynomial, Var, VarTable};
use crate::error::{Error, Result};

/// First-order operator `sum_t c_t * u_t * d/dv_t` with left derivatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperDerivation {
    table: Arc<VarTable>,
    terms: Vec<(Rational, Var, Var)>,
    parity: Parity,
    label: String,
}

impl SuperDerivation {
    /// Errors if the terms do not share one parity.
    pub fn new(
        table: &Arc<VarTable>,
        label: impl Into<String>,
        terms: Vec<(Rational, Var, Var)>,
    ) -> Result<Self> {
        let parity_of = |&(_, u, v): &(Rational, Var, Var)| table.parity(u).combine(table.parity(v));
        let parity = terms.first().map_or(Parity::Even, parity_of);
        if terms.iter().any(|t| parity_of(t) != parity) {
            return Err(Error::Invalid("derivation terms of mixed parity".into()));
        }
        let terms = terms.into_iter().filter(|t| !t.0.is_zero()).collect();
        Ok(SuperDerivation {
            table: table.clone(),
            terms,
            parity,
            label: label.into(),
        })
    }

    /// `u * d/dv`.
    pub fn single(table: &Arc<VarTable>, u: Var, v: Var) -> Self {
        Self::new(
            table,
            format!("{}*d/d{}", table.name(u), table.name(v)),
            vec![(Rational::one(), u, v)],
        )
        .expect("one term has one parity")
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn terms(&self) -> &[(Rational, Var, Var)] {
        &self.terms
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies the operator; the super-Leibniz rule holds by construction.
    pub fn apply(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        if !same_table(&self.table, f.table()) {
            return Err(Error::TableMismatch);
        }
        let mut by_diff: FxHashMap<Var, Vec<(&Rational, SuperMonomial)>> = FxHashMap::default();
        for (c, u, v) in &self.terms {
            by_diff
                .entry(*v)
                .or_default()
                .push((c, SuperMonomial::var(&self.table, *u)));
        }
        let mut acc: FxHashMap<SuperMonomial, Rational> = FxHashMap::default();
        for (m, coeff) in f.terms() {
            for (v, _) in m.vars() {
                let Some(ops) = by_diff.get(&v) else { continue };
                let (e, neg, rest) = m.remove(v).expect("variable occurs");
                let base = coeff * Rational::from_integer(e.into());
                for (c, u) in ops {
                    if let Some((neg2, prod)) = mono_mul(u, &rest) {
                        let t = &base * *c;
                        let slot = acc.entry(prod).or_insert_with(Rational::zero);
                        if neg ^ neg2 {
                            *slot -= t;
                        } else {
                            *slot += t;
                        }
                    }
                }
            }
        }
        Ok(SuperPolynomial::from_terms(
            &self.table,
            acc.into_iter().filter(|(_, c)| !c.is_zero()),
        ))
    }

    /// Text form `c*u*d/dv + ...` in the polynomial coefficient style.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (c, u, v)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if !a.is_one() {
                let _ = write!(s, "{a}*");
            }
            let _ = write!(s, "{}*d/d{}", self.table.name(*u), self.table.name(*v));
        }
        s
    }
}

/// `[A, B] = AB - (-1)^{|A||B|} BA` applied to `f`.
pub fn supercommutator_on(
    a: &SuperDerivation,
    b: &SuperDerivation,
    f: &SuperPolynomial,
) -> Result<SuperPolynomial> {
    let ab = a.apply(&b.apply(f)?)?;
    let ba = b.apply(&a.apply(f)?)?;
    if a.parity().is_odd() && b.parity().is_odd() {
        ab.checked_add(&ba)
    } else {
        ab.checked_sub(&ba)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Family};

    #[test]
    fn elementary_actions() {
        let t = VarTable::tensor(2, 0, 2, 2);
        let x = |l, i| t.get(Family::X, l, i).unwrap();
        let h = |k, i| t.get(Family::Eta, k, i).unwrap();
        let d = SuperDerivation::single(&t, x(1, 1), x(1, 2));
        let f = parse_poly(&t, "x[1,2]").unwrap();
        assert_eq!(d.apply(&f).unwrap(), parse_poly(&t, "x[1,1]").unwrap());

        let d = SuperDerivation::single(&t, h(1, 1), h(1, 2));
        let f = parse_poly(&t, "h[1,2]*h[2,1]").unwrap();
        assert_eq!(d.apply(&f).unwrap(), parse_poly(&t, "h[1,1]*h[2,1]").unwrap());
        // derivative through a preceding odd factor
        let f = parse_poly(&t, "h[1,1]*h[1,2]").unwrap();
        let d2 = SuperDerivation::single(&t, x(1, 1), h(1, 2));
        assert_eq!(d2.apply(&f).unwrap(), parse_poly(&t, "-x[1,1]*h[1,1]").unwrap());
    }

    #[test]
    fn euler_operator_scales_by_degree() {
        let t = VarTable::tensor(2, 1, 1, 1);
        let terms = t.vars().map(|v| (Rational::one(), v, v)).collect();
        let e = SuperDerivation::new(&t, "E", terms).unwrap();
        let f = parse_poly(&t, "x[1,1]^2*xi[1,1] + 3*h[1,1]*h[1,2]*y[1,1]").unwrap();
        assert_eq!(e.apply(&f).unwrap(), f.scale(&Rational::from_integer(3.into())));
    }

    #[test]
    fn mixed_parity_is_rejected() {
        let t = VarTable::tensor(1, 0, 1, 1);
        let x = t.get(Family::X, 1, 1).unwrap();
        let h = t.get(Family::Eta, 1, 1).unwrap();
        let terms = vec![(Rational::one(), x, x), (Rational::one(), x, h)];
        assert!(SuperDerivation::new(&t, "bad", terms).is_err());
    }
}
