//! Element literal grammar.
//!
//! Integers and residues: optional sign then decimal digits. Polynomials:
//! terms `c*x^k`, `c*x`, `x^k`, `c` joined by `+`/`-`. Gaussian integers:
//! terms `b*i`, `bi`, `i`, `a` joined by `+`/`-`. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{poly, reduce_u64, Elem, Repr, Ring, RingKind};
use crate::error::{Error, Result};

struct Term<'a> {
    negative: bool,
    body: &'a str,
}

fn split_terms(s: &str) -> Option<Vec<Term<'_>>> {
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut negative = false;
    let mut i = 0;
    if matches!(bytes.first(), Some(b'+') | Some(b'-')) {
        negative = bytes[0] == b'-';
        start = 1;
        i = 1;
    }
    while i <= bytes.len() {
        if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
            let body = &s[start..i];
            if body.is_empty() {
                return None;
            }
            terms.push(Term { negative, body });
            if i < bytes.len() {
                negative = bytes[i] == b'-';
            }
            start = i + 1;
        }
        i += 1;
    }
    Some(terms)
}

fn digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses a `[coef][*]<var>[...]` prefix coefficient; empty means 1.
fn coefficient(prefix: &str) -> Option<BigInt> {
    let prefix = prefix.strip_suffix('*').unwrap_or(prefix);
    if prefix.is_empty() {
        Some(BigInt::one())
    } else {
        digits(prefix)
    }
}

fn signed(negative: bool, v: BigInt) -> BigInt {
    if negative {
        -v
    } else {
        v
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let (neg, rest) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    digits(rest).map(|v| signed(neg, v))
}

/// Integer coefficients of a polynomial literal, low to high, untrimmed.
fn parse_poly(s: &str) -> Option<Vec<BigInt>> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for term in split_terms(s)? {
        let (coef, degree) = match term.body.find('x') {
            None => (digits(term.body)?, 0usize),
            Some(pos) => {
                let coef = coefficient(&term.body[..pos])?;
                let tail = &term.body[pos + 1..];
                let degree = if tail.is_empty() {
                    1
                } else {
                    let e = tail.strip_prefix('^')?;
                    if e.is_empty() || !e.bytes().all(|b| b.is_ascii_digit()) {
                        return None;
                    }
                    e.parse().ok()?
                };
                (coef, degree)
            }
        };
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigInt::zero());
        }
        coeffs[degree] += signed(term.negative, coef);
    }
    Some(coeffs)
}

fn parse_gaussian(s: &str) -> Option<(BigInt, BigInt)> {
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for term in split_terms(s)? {
        match term.body.strip_suffix('i') {
            Some(prefix) => im += signed(term.negative, coefficient(prefix)?),
            None => re += signed(term.negative, digits(term.body)?),
        }
    }
    Some((re, im))
}

pub(super) fn parse_element(ring: Ring, literal: &str) -> Result<Elem> {
    let s: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
    let malformed = || Error::MalformedLiteral { ring: ring.to_string(), literal: literal.to_string() };
    let wrong_kind = || Error::WrongRingKind { ring: ring.to_string(), literal: literal.to_string() };
    let has_x = s.contains('x');
    let has_i = s.contains('i');
    match ring.kind() {
        RingKind::Integers | RingKind::Modular(_) => {
            if has_x || has_i {
                return Err(wrong_kind());
            }
            let v = parse_integer(&s).ok_or_else(malformed)?;
            Ok(ring.from_bigint(&v))
        }
        RingKind::PolyFp(p) => {
            if has_i {
                return Err(wrong_kind());
            }
            let c = parse_poly(&s).ok_or_else(malformed)?;
            let mut coeffs: Vec<u64> = c.iter().map(|k| reduce_u64(k, p)).collect();
            poly::trim_fp(&mut coeffs);
            Ok(Elem(Repr::PolyFp { p, coeffs }))
        }
        RingKind::PolyZ => {
            if has_i {
                return Err(wrong_kind());
            }
            let mut c = parse_poly(&s).ok_or_else(malformed)?;
            poly::trim_z(&mut c);
            Ok(Elem(Repr::PolyZ(c)))
        }
        RingKind::Gaussian => {
            if has_x {
                return Err(wrong_kind());
            }
            let (re, im) = parse_gaussian(&s).ok_or_else(malformed)?;
            Ok(Elem(Repr::Gauss(re, im)))
        }
    }
}
