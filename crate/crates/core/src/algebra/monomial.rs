use smallvec::SmallVec;

use super::vars::{Parity, Var, VarTable};

/// A monomial `x^a * theta_{i_1} ... theta_{i_k}` in canonical form.
///
/// Even exponents are kept sorted by variable with no zero entries; odd
/// variables are strictly increasing in table order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SuperMonomial {
    even: SmallVec<[(Var, u32); 4]>,
    odd: SmallVec<[Var; 4]>,
}

impl SuperMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    /// Monomial consisting of a single variable.
    pub fn var(table: &VarTable, v: Var) -> Self {
        let mut m = Self::one();
        if table.is_odd(v) {
            m.odd.push(v);
        } else {
            m.even.push((v, 1));
        }
        m
    }

    /// Builds a canonical monomial from unsorted parts.
    ///
    /// Returns the sign picked up by sorting the odd variables, or `None`
    /// when an odd variable repeats.
    pub fn from_parts(
        even: impl IntoIterator<Item = (Var, u32)>,
        odd: impl IntoIterator<Item = Var>,
    ) -> Option<(bool, Self)> {
        let mut ev: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        for (v, e) in even {
            if e == 0 {
                continue;
            }
            match ev.binary_search_by_key(&v, |&(w, _)| w) {
                Ok(i) => ev[i].1 += e,
                Err(i) => ev.insert(i, (v, e)),
            }
        }
        let mut od: SmallVec<[Var; 4]> = odd.into_iter().collect();
        let negative = sort_with_sign(&mut od);
        if od.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((negative, SuperMonomial { even: ev, odd: od }))
    }

    pub fn even(&self) -> &[(Var, u32)] {
        &self.even
    }

    pub fn odd(&self) -> &[Var] {
        &self.odd
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().map(|&(_, e)| e).sum::<u32>() + self.odd.len() as u32
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count(self.odd.len())
    }

    pub fn exponent(&self, v: Var) -> u32 {
        if let Ok(i) = self.even.binary_search_by_key(&v, |&(w, _)| w) {
            return self.even[i].1;
        }
        u32::from(self.odd.binary_search(&v).is_ok())
    }

    /// All variables with multiplicity, evens first then odds.
    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.even
            .iter()
            .copied()
            .chain(self.odd.iter().map(|&v| (v, 1)))
    }

    pub fn even_part(&self) -> SuperMonomial {
        SuperMonomial {
            even: self.even.clone(),
            odd: SmallVec::new(),
        }
    }

    pub fn odd_part(&self) -> SuperMonomial {
        SuperMonomial {
            even: SmallVec::new(),
            odd: self.odd.clone(),
        }
    }

    /// Whether every even exponent of `other` is at most the one here.
    /// Odd parts are ignored.
    pub fn even_divides(&self, other: &SuperMonomial) -> bool {
        let mut it = other.even.iter().peekable();
        for &(v, e) in &self.even {
            loop {
                match it.next() {
                    Some(&(w, f)) if w == v => {
                        if f < e {
                            return false;
                        }
                        break;
                    }
                    Some(&(w, _)) if w < v => continue,
                    _ => return false,
                }
            }
        }
        true
    }

    /// `other / self` on even parts; caller guarantees divisibility.
    pub fn even_quotient(&self, other: &SuperMonomial) -> SuperMonomial {
        let mut even: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        for &(w, f) in &other.even {
            let e = self.exponent(w);
            if f > e {
                even.push((w, f - e));
            }
        }
        SuperMonomial {
            even,
            odd: other.odd.clone(),
        }
    }

    /// Removes one factor of `v`.
    ///
    /// For an odd `v` the returned flag is the parity of the number of odd
    /// variables standing before `v`, i.e. the sign of a left derivative.
    pub fn remove(&self, v: Var) -> Option<(u32, bool, SuperMonomial)> {
        if let Ok(i) = self.even.binary_search_by_key(&v, |&(w, _)| w) {
            let mut m = self.clone();
            let e = m.even[i].1;
            if e == 1 {
                m.even.remove(i);
            } else {
                m.even[i].1 -= 1;
            }
            return Some((e, false, m));
        }
        if let Ok(i) = self.odd.binary_search(&v) {
            let mut m = self.clone();
            m.odd.remove(i);
            return Some((1, i % 2 == 1, m));
        }
        None
    }
}

/// Insertion sort that reports the parity of the permutation used.
fn sort_with_sign(vs: &mut [Var]) -> bool {
    let mut negative = false;
    for i in 1..vs.len() {
        let mut j = i;
        while j > 0 && vs[j - 1] > vs[j] {
            vs.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    negative
}

/// Product of two canonical monomials.
///
/// Returns `None` when the odd parts share a variable, otherwise the sign
/// (`true` for negative) of the merge permutation together with the product.
pub fn mono_mul(a: &SuperMonomial, b: &SuperMonomial) -> Option<(bool, SuperMonomial)> {
    let mut odd: SmallVec<[Var; 4]> = SmallVec::with_capacity(a.odd.len() + b.odd.len());
    let mut negative = false;
    let (mut i, mut j) = (0, 0);
    while i < a.odd.len() && j < b.odd.len() {
        let (x, y) = (a.odd[i], b.odd[j]);
        if x == y {
            return None;
        }
        if x < y {
            odd.push(x);
            i += 1;
        } else {
            // y jumps over the remaining a.odd[i..]
            if (a.odd.len() - i) % 2 == 1 {
                negative = !negative;
            }
            odd.push(y);
            j += 1;
        }
    }
    odd.extend_from_slice(&a.odd[i..]);
    odd.extend_from_slice(&b.odd[j..]);

    let mut even: SmallVec<[(Var, u32); 4]> = SmallVec::with_capacity(a.even.len() + b.even.len());
    let (mut i, mut j) = (0, 0);
    while i < a.even.len() && j < b.even.len() {
        let (x, y) = (a.even[i], b.even[j]);
        match x.0.cmp(&y.0) {
            std::cmp::Ordering::Less => {
                even.push(x);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                even.push(y);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                even.push((x.0, x.1 + y.1));
                i += 1;
                j += 1;
            }
        }
    }
    even.extend_from_slice(&a.even[i..]);
    even.extend_from_slice(&b.even[j..]);
    Some((negative, SuperMonomial { even, odd }))
}
