use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::{mono_mul, SuperMonomial};
use super::vars::{Parity, Var, VarTable};
use super::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial with rational coefficients in commuting and
/// anticommuting variables of one [`VarTable`].
#[derive(Clone, Debug)]
pub struct SuperPolynomial {
    table: Arc<VarTable>,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl PartialEq for SuperPolynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for SuperPolynomial {}

pub(crate) fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Terms above which multiplication is split across threads.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 4096;

impl SuperPolynomial {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        SuperPolynomial {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: Rational) -> Self {
        Self::monomial(table, SuperMonomial::one(), c)
    }

    pub fn monomial(table: &Arc<VarTable>, m: SuperMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SuperPolynomial {
            table: table.clone(),
            terms,
        }
    }

    pub fn var(table: &Arc<VarTable>, v: Var) -> Self {
        Self::monomial(table, SuperMonomial::var(table, v), Rational::one())
    }

    /// Sums the given terms, combining equal monomials.
    pub fn from_terms(
        table: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (SuperMonomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(table);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<SuperMonomial, Rational> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Degree shared by all terms, if any. Zero has no degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Parity shared by all terms, if any. Zero is treated as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let Some(p) = it.next() else {
            return Some(Parity::Even);
        };
        it.all(|e| e == p).then_some(p)
    }

    pub fn is_even_only(&self) -> bool {
        self.terms.keys().all(|m| m.odd().is_empty())
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        SuperPolynomial {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        Ok(self.mul_unchecked(other, None))
    }

    /// Product with all terms of degree above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Result<Self> {
        self.check_table(other)?;
        Ok(self.mul_unchecked(other, Some(max_degree)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.table);
        for _ in 0..e {
            acc = acc.mul_unchecked(self, None);
        }
        acc
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    fn mul_unchecked(&self, other: &Self, max_degree: Option<u32>) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.table);
        }
        let lhs: Vec<_> = self.terms.iter().collect();
        #[cfg(feature = "parallel")]
        if lhs.len() * other.len() >= PAR_THRESHOLD && lhs.len() > 1 {
            use rayon::prelude::*;
            let chunk = lhs.len().div_ceil(rayon::current_num_threads().max(1) * 4).max(1);
            let parts: Vec<FxHashMap<SuperMonomial, Rational>> = lhs
                .par_chunks(chunk)
                .map(|c| accumulate_products(c, other, max_degree))
                .collect();
            let merged = parts.into_iter().reduce(|mut a, b| {
                for (m, c) in b {
                    *a.entry(m).or_insert_with(Rational::zero) += c;
                }
                a
            });
            return self.build_from(merged.unwrap_or_default());
        }
        let acc = accumulate_products(&lhs, other, max_degree);
        self.build_from(acc)
    }

    fn build_from(&self, acc: FxHashMap<SuperMonomial, Rational>) -> Self {
        SuperPolynomial {
            table: self.table.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Drops terms of degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        SuperPolynomial {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Self {
        SuperPolynomial {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces every variable by a polynomial over `target`.
    ///
    /// Variables are substituted in monomial order (evens, then odds in
    /// canonical order), so images of odd variables may be arbitrary
    /// polynomials of the right parity.
    pub fn substitute<F>(&self, target: &Arc<VarTable>, mut image: F) -> Result<Self>
    where
        F: FnMut(Var) -> Result<SuperPolynomial>,
    {
        let mut cache: FxHashMap<Var, SuperPolynomial> = FxHashMap::default();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (v, e) in m.vars() {
                if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(v) {
                    let img = image(v)?;
                    if !same_table(img.table(), target) {
                        return Err(Error::TableMismatch);
                    }
                    e.insert(img);
                }
                let img = &cache[&v];
                for _ in 0..e {
                    t = t.mul_unchecked(img, None);
                }
                if t.is_zero() {
                    break;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Moves the polynomial to another table by variable name.
    pub fn transfer(&self, target: &Arc<VarTable>) -> Result<Self> {
        let src = self.table.clone();
        self.substitute(target, |v| {
            let name = src.name(v);
            let w = target
                .lookup(name)
                .ok_or_else(|| Error::Invalid(format!("variable {name} missing in target table")))?;
            if target.parity(w) != src.parity(v) {
                return Err(Error::Invalid(format!("variable {name} changes parity")));
            }
            Ok(SuperPolynomial::var(target, w))
        })
    }

    /// Least monomial in the canonical term order, with its coefficient.
    pub fn least_term(&self) -> Option<(&SuperMonomial, &Rational)> {
        self.terms.iter().min_by(|a, b| super::text::term_order(a.0, b.0))
    }

    /// Rescales so the least monomial has coefficient one.
    pub fn normalized(&self) -> Self {
        match self.least_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Whether `self = c * other` for some nonzero rational `c`.
    pub fn proportional(&self, other: &Self) -> bool {
        self.normalized() == other.normalized() && self.is_zero() == other.is_zero()
    }

    /// Largest absolute coefficient numerator, for diagnostics.
    pub fn max_abs_coeff(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

fn accumulate_products(
    lhs: &[(&SuperMonomial, &Rational)],
    rhs: &SuperPolynomial,
    max_degree: Option<u32>,
) -> FxHashMap<SuperMonomial, Rational> {
    let mut acc: FxHashMap<SuperMonomial, Rational> = FxHashMap::default();
    for &(ma, ca) in lhs {
        let da = ma.degree();
        for (mb, cb) in &rhs.terms {
            if let Some(d) = max_degree {
                if da + mb.degree() > d {
                    continue;
                }
            }
            if let Some((neg, m)) = mono_mul(ma, mb) {
                let c = ca * cb;
                let slot = acc.entry(m).or_insert_with(Rational::zero);
                if neg {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
    }
    acc
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&SuperPolynomial> for &SuperPolynomial {
            type Output = SuperPolynomial;
            /// Panics when the operands live over different tables;
            /// use the `checked_*` methods to get an error instead.
            fn $method(self, rhs: &SuperPolynomial) -> SuperPolynomial {
                self.$checked(rhs).expect("polynomials over different tables")
            }
        }
        impl $tr<SuperPolynomial> for SuperPolynomial {
            type Output = SuperPolynomial;
            fn $method(self, rhs: SuperPolynomial) -> SuperPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&SuperPolynomial> for SuperPolynomial {
            type Output = SuperPolynomial;
            fn $method(self, rhs: &SuperPolynomial) -> SuperPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vars::Family;

    fn eta_table() -> Arc<VarTable> {
        VarTable::tensor(2, 0, 1, 2)
    }

    #[test]
    fn odd_linear_form_squares_to_zero() {
        let t = eta_table();
        let h11 = SuperPolynomial::var(&t, t.get(Family::Eta, 1, 1).unwrap());
        let h12 = SuperPolynomial::var(&t, t.get(Family::Eta, 1, 2).unwrap());
        let s = &h11 + &h12;
        assert!((&s * &s).is_zero());
    }

    #[test]
    fn anticommuting_product() {
        let t = eta_table();
        let a = SuperPolynomial::var(&t, t.get(Family::Eta, 1, 1).unwrap());
        let b = SuperPolynomial::var(&t, t.get(Family::Eta, 2, 1).unwrap());
        assert_eq!(&a * &b, -(&b * &a));
        assert!(!(&a * &b).is_zero());
    }

    #[test]
    fn additive_identities() {
        let t = eta_table();
        let x = SuperPolynomial::var(&t, t.get(Family::X, 1, 1).unwrap());
        assert_eq!(&x + &SuperPolynomial::zero(&t), x);
        assert!((&x - &x).is_zero());
        assert_eq!(&x + &x, x.scale(&rat(2)));
        assert_eq!(&SuperPolynomial::one(&t) * &x, x);
    }

    #[test]
    fn mixing_tables_is_an_error() {
        let a = SuperPolynomial::one(&VarTable::tensor(1, 0, 1, 0));
        let b = SuperPolynomial::one(&VarTable::tensor(2, 0, 1, 0));
        assert_eq!(a.checked_add(&b), Err(Error::TableMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::TableMismatch));
    }

    #[test]
    fn truncated_product_drops_high_degrees() {
        let t = VarTable::character(1, 0, 1, 0);
        let x = SuperPolynomial::var(&t, t.lookup("x[1]").unwrap());
        let s = &SuperPolynomial::one(&t) + &x;
        let sq = s.mul_truncated(&s, 1).unwrap();
        assert_eq!(sq, &SuperPolynomial::one(&t) + &x.scale(&rat(2)));
    }
}
