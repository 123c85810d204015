use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use super::monomial::SuperMonomial;
use super::poly::{same_table, SuperPolynomial};
use super::Rational;
use crate::error::{Error, Result};

/// Graded lexicographic order on even parts: total degree first, then the
/// exponent of the lowest-indexed variable, and so on.
pub fn grlex_cmp(a: &SuperMonomial, b: &SuperMonomial) -> Ordering {
    let da: u32 = a.even().iter().map(|e| e.1).sum();
    let db: u32 = b.even().iter().map(|e| e.1).sum();
    da.cmp(&db).then_with(|| {
        let (ea, eb) = (a.even(), b.even());
        let (mut i, mut j) = (0, 0);
        loop {
            match (ea.get(i), eb.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, xa)), Some(&(vb, xb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if xa != xb {
                            return xa.cmp(&xb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    })
}

#[derive(Clone, PartialEq, Eq)]
struct Grlex(SuperMonomial);

impl Ord for Grlex {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Grlex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact quotient `num / den` for a purely even divisor.
///
/// The numerator is split by odd part and each even coefficient polynomial
/// is divided by leading terms under [`grlex_cmp`]. Fails with
/// [`Error::NotDivisible`] as soon as a leading term cannot be cancelled.
pub fn divide_exact(num: &SuperPolynomial, den: &SuperPolynomial) -> Result<SuperPolynomial> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !den.is_even_only() {
        return Err(Error::OddDivisor);
    }
    if !same_table(num.table(), den.table()) {
        return Err(Error::TableMismatch);
    }
    let divisor: Vec<(SuperMonomial, Rational)> = {
        let mut v: Vec<_> = den.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| grlex_cmp(&b.0, &a.0));
        v
    };
    let (lead_m, lead_c) = divisor[0].clone();

    let mut by_odd: BTreeMap<SuperMonomial, BTreeMap<Grlex, Rational>> = BTreeMap::new();
    for (m, c) in num.terms() {
        by_odd
            .entry(m.odd_part())
            .or_default()
            .insert(Grlex(m.even_part()), c.clone());
    }

    let mut out = SuperPolynomial::zero(num.table());
    for (odd, mut rem) in by_odd {
        while let Some((top, c)) = rem.pop_last() {
            if !lead_m.even_divides(&top.0) {
                return Err(Error::NotDivisible);
            }
            let qm = lead_m.even_quotient(&top.0);
            let qc = &c / &lead_c;
            for (dm, dc) in &divisor[1..] {
                match rem.entry(Grlex(product_even(&qm, dm))) {
                    Entry::Vacant(e) => {
                        e.insert(-(&qc * dc));
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() -= &qc * dc;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            let (_, full) = SuperMonomial::from_parts(
                qm.even().iter().copied(),
                odd.odd().iter().copied(),
            )
            .expect("odd part is canonical");
            out.add_term(full, qc);
        }
    }
    Ok(out)
}

fn product_even(a: &SuperMonomial, b: &SuperMonomial) -> SuperMonomial {
    SuperMonomial::from_parts(a.even().iter().chain(b.even()).copied(), [])
        .expect("no odd variables")
        .1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat;
    use crate::algebra::vars::{Family, VarTable};

    #[test]
    fn round_trip_through_multiplication() {
        let t = VarTable::tensor(2, 0, 2, 1);
        let v = |f, a, b| SuperPolynomial::var(&t, t.get(f, a, b).unwrap());
        let den = &(&v(Family::X, 1, 1) * &v(Family::X, 2, 2)) - &(&v(Family::X, 2, 1) * &v(Family::X, 1, 2));
        let f = &(&v(Family::Eta, 1, 1) * &v(Family::X, 1, 2)) + &v(Family::Eta, 1, 2).scale(&rat(3));
        let num = &den.pow(2) * &f;
        assert_eq!(divide_exact(&num, &den.pow(2)).unwrap(), f);
    }

    #[test]
    fn errors() {
        let t = VarTable::tensor(1, 0, 2, 1);
        let x1 = SuperPolynomial::var(&t, t.get(Family::X, 1, 1).unwrap());
        let x2 = SuperPolynomial::var(&t, t.get(Family::X, 2, 1).unwrap());
        let h = SuperPolynomial::var(&t, t.get(Family::Eta, 1, 1).unwrap());
        assert_eq!(divide_exact(&x1, &x2), Err(Error::NotDivisible));
        assert_eq!(divide_exact(&x1, &h), Err(Error::OddDivisor));
        assert_eq!(divide_exact(&x1, &SuperPolynomial::zero(&t)), Err(Error::DivisionByZero));
        assert!(divide_exact(&SuperPolynomial::zero(&t), &x2).unwrap().is_zero());
    }
}
