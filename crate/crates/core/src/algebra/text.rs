//! Canonical text form of polynomials, e.g. `3/2*x[1,1]^2*h[1,1]*h[1,2] - y[1,1]`.
//!
//! Terms are sorted by total degree, then by monomial; within a monomial even
//! variables come first, then odd variables in canonical order. Coefficient 1
//! is omitted. The zero polynomial prints as `0`.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::monomial::SuperMonomial;
use super::poly::SuperPolynomial;
use super::vars::VarTable;
use super::Rational;
use crate::error::{Error, Result};

/// Total degree first, then lexicographic on the printed variable sequence.
pub fn term_order(a: &SuperMonomial, b: &SuperMonomial) -> Ordering {
    let expand = |m: &SuperMonomial| {
        m.vars()
            .flat_map(|(v, e)| std::iter::repeat_n(v, e as usize))
            .collect::<Vec<_>>()
    };
    a.degree()
        .cmp(&b.degree())
        .then_with(|| expand(a).cmp(&expand(b)))
}

pub fn format_monomial(table: &VarTable, m: &SuperMonomial) -> String {
    let mut s = String::new();
    for (v, e) in m.vars() {
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(table.name(v));
        if e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    s
}

pub fn format_poly(p: &SuperPolynomial) -> String {
    let mut terms: Vec<_> = p.terms().collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by(|a, b| term_order(a.0, b.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mono = format_monomial(p.table(), m);
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                let _ = write!(out, "{a}*");
            }
            out.push_str(&mono);
        }
    }
    out
}

/// Parses the canonical text form (and any reordering of it).
///
/// Factors inside a term are multiplied left to right, so the order of odd
/// variables determines the sign.
pub fn parse_poly(table: &Arc<VarTable>, text: &str) -> Result<SuperPolynomial> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut out = SuperPolynomial::zero(table);
    for (negative, term) in split_terms(&compact)? {
        let mut t = SuperPolynomial::one(table);
        for factor in term.split('*') {
            t = &t * &parse_factor(table, factor)?;
        }
        out = if negative { &out - &t } else { &out + &t };
    }
    Ok(out)
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'[' => depth += 1,
            b']' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                // a sign directly after '^' belongs to no valid input
                if i == 0 {
                    negative = b == b'-';
                    start = 1;
                    continue;
                }
                out.push((negative, &s[start..i]));
                negative = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((negative, &s[start..]));
    if out.iter().any(|(_, t)| t.is_empty()) {
        return Err(Error::Parse(format!("empty term in {s:?}")));
    }
    Ok(out)
}

fn parse_factor(table: &Arc<VarTable>, f: &str) -> Result<SuperPolynomial> {
    if f.is_empty() {
        return Err(Error::Parse("empty factor".into()));
    }
    if f.as_bytes()[0].is_ascii_digit() {
        let c = parse_rational(f)?;
        return Ok(SuperPolynomial::constant(table, c));
    }
    let (name, exp) = match f.rsplit_once('^') {
        Some((n, e)) => (
            n,
            e.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent in {f:?}")))?,
        ),
        None => (f, 1),
    };
    let v = table
        .lookup(name)
        .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
    Ok(SuperPolynomial::var(table, v).pow(exp))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat_frac;
    use crate::algebra::vars::Family;

    #[test]
    fn formats_in_canonical_order() {
        let t = VarTable::tensor(2, 0, 1, 1);
        let v = |f, a, b| SuperPolynomial::var(&t, t.get(f, a, b).unwrap());
        let p = &(&v(Family::Eta, 1, 2) * &v(Family::Eta, 1, 1)) + &v(Family::X, 1, 1).pow(2).scale(&rat_frac(3, 2));
        assert_eq!(format_poly(&p), "3/2*x[1,1]^2 - h[1,1]*h[1,2]");
        assert_eq!(format_poly(&SuperPolynomial::zero(&t)), "0");
    }

    #[test]
    fn parses_back() {
        let t = VarTable::tensor(2, 0, 1, 1);
        for s in ["3/2*x[1,1]^2*h[1,1]*h[1,2] - x[1,2]", "-1/3", "0", "h[1,1] + 2*x[1,1]*h[1,2]"] {
            let p = parse_poly(&t, s).unwrap();
            assert_eq!(parse_poly(&t, &format_poly(&p)).unwrap(), p);
        }
        let a = parse_poly(&t, "h[1,2]*h[1,1]").unwrap();
        assert_eq!(format_poly(&a), "-h[1,1]*h[1,2]");
        assert!(parse_poly(&t, "q[1,1]").is_err());
        assert!(parse_poly(&t, "x[1,1] +").is_err());
    }
}
