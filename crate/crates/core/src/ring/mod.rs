//! Exact commutative rings selected at runtime.
//!
//! A [`Ring`] is a small descriptor (`Z`, `Z/m`, `F_p[x]`, `Z[x]`, `Z[i]`);
//! an [`Elem`] is a value of one of those rings in canonical form, so
//! structural equality is ring equality. Every element remembers which ring
//! it lives in, which lets arithmetic reject mixed-ring operands.

mod enumerate;
mod parse;
pub(crate) mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub use enumerate::Enumeration;

use poly::{add_mod, inv_mod, mul_mod, neg_mod};

/// Which concrete ring a [`Ring`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Modular(u64),
    PolyFp(u64),
    PolyZ,
    Gaussian,
}

/// Descriptor of a supported ring. Construct through the validating
/// constructors or by parsing `Z`, `Z/6`, `Fp[x]/5`, `Z[x]`, `Zi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring(RingKind);

/// Binary/unary ring operations exposed through [`Ring::arithmetic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Repr {
    Int(BigInt),
    Mod { m: u64, r: u64 },
    PolyFp { p: u64, coeffs: Vec<u64> },
    PolyZ(Vec<BigInt>),
    Gauss(BigInt, BigInt),
}

/// An element of a supported ring, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) Repr);

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    pub const fn integers() -> Self {
        Ring(RingKind::Integers)
    }

    pub fn modular(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidRing(format!("Z/{m}: modulus must be at least 2")));
        }
        Ok(Ring(RingKind::Modular(m)))
    }

    /// `F_p[x]`; `p` must be a prime below 2^32.
    pub fn poly_fp(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::InvalidRing(format!("Fp[x]/{p}: {p} is not a supported prime")));
        }
        Ok(Ring(RingKind::PolyFp(p)))
    }

    pub const fn poly_z() -> Self {
        Ring(RingKind::PolyZ)
    }

    pub const fn gaussian() -> Self {
        Ring(RingKind::Gaussian)
    }

    pub fn kind(&self) -> RingKind {
        self.0
    }

    pub fn is_domain(&self) -> bool {
        match self.0 {
            RingKind::Modular(m) => is_prime(m),
            _ => true,
        }
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self.0, RingKind::Integers | RingKind::Gaussian | RingKind::PolyFp(_))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0, RingKind::Modular(_))
    }

    /// Number of elements for finite rings.
    pub fn cardinality(&self) -> Option<u64> {
        match self.0 {
            RingKind::Modular(m) => Some(m),
            _ => None,
        }
    }

    pub fn contains(&self, a: &Elem) -> bool {
        a.ring() == *self
    }

    pub fn zero(&self) -> Elem {
        self.from_bigint(&BigInt::zero())
    }

    pub fn one(&self) -> Elem {
        self.from_bigint(&BigInt::one())
    }

    pub fn from_i64(&self, k: i64) -> Elem {
        self.from_bigint(&BigInt::from(k))
    }

    /// Image of an integer under the canonical map `Z -> R`.
    pub fn from_bigint(&self, k: &BigInt) -> Elem {
        Elem(match self.0 {
            RingKind::Integers => Repr::Int(k.clone()),
            RingKind::Modular(m) => Repr::Mod { m, r: reduce_u64(k, m) },
            RingKind::PolyFp(p) => {
                let r = reduce_u64(k, p);
                Repr::PolyFp { p, coeffs: if r == 0 { vec![] } else { vec![r] } }
            }
            RingKind::PolyZ => Repr::PolyZ(if k.is_zero() { vec![] } else { vec![k.clone()] }),
            RingKind::Gaussian => Repr::Gauss(k.clone(), BigInt::zero()),
        })
    }

    /// `x` in a polynomial ring.
    pub fn variable(&self) -> Option<Elem> {
        match self.0 {
            RingKind::PolyFp(p) => Some(Elem(Repr::PolyFp { p, coeffs: vec![0, 1] })),
            RingKind::PolyZ => Some(Elem(Repr::PolyZ(vec![BigInt::zero(), BigInt::one()]))),
            _ => None,
        }
    }

    /// `a + b i` in the Gaussian integers.
    pub fn gaussian_elem(&self, re: i64, im: i64) -> Option<Elem> {
        match self.0 {
            RingKind::Gaussian => Some(Elem(Repr::Gauss(re.into(), im.into()))),
            _ => None,
        }
    }

    /// Polynomial with the given integer coefficients (low to high), reduced
    /// into this ring's coefficient ring.
    pub fn polynomial(&self, coeffs: &[i64]) -> Option<Elem> {
        match self.0 {
            RingKind::PolyFp(p) => {
                let mut c: Vec<u64> = coeffs.iter().map(|&k| reduce_u64(&k.into(), p)).collect();
                poly::trim_fp(&mut c);
                Some(Elem(Repr::PolyFp { p, coeffs: c }))
            }
            RingKind::PolyZ => {
                let mut c: Vec<BigInt> = coeffs.iter().map(|&k| k.into()).collect();
                poly::trim_z(&mut c);
                Some(Elem(Repr::PolyZ(c)))
            }
            _ => None,
        }
    }

    pub fn parse_element(&self, literal: &str) -> Result<Elem> {
        parse::parse_element(*self, literal)
    }

    /// Checked arithmetic; `b` must be `None` exactly for [`ArithOp::Neg`].
    pub fn arithmetic(&self, op: ArithOp, a: &Elem, b: Option<&Elem>) -> Result<Elem> {
        self.check(a)?;
        if let Some(b) = b {
            self.check(b)?;
        }
        match (op, b) {
            (ArithOp::Neg, None) => Ok(-a),
            (ArithOp::Add, Some(b)) => a.checked_add(b),
            (ArithOp::Sub, Some(b)) => a.checked_add(&-b),
            (ArithOp::Mul, Some(b)) => a.checked_mul(b),
            (ArithOp::Neg, Some(_)) => {
                Err(Error::InvalidParam { name: "b".into(), reason: "negation takes one operand".into() })
            }
            (_, None) => {
                Err(Error::InvalidParam { name: "b".into(), reason: "binary operation needs two operands".into() })
            }
        }
    }

    pub(crate) fn check(&self, a: &Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::MixedRings(self.to_string(), a.to_string()))
        }
    }

    /// Returns the inverse when `a` is a unit. The witness is re-verified.
    pub fn is_unit(&self, a: &Elem) -> Option<Elem> {
        if !self.contains(a) {
            return None;
        }
        let inv = match &a.0 {
            Repr::Int(k) => {
                if k.abs().is_one() {
                    Some(Elem(Repr::Int(k.clone())))
                } else {
                    None
                }
            }
            Repr::Mod { m, r } => inv_mod(*r, *m).map(|r| Elem(Repr::Mod { m: *m, r })),
            Repr::PolyFp { p, coeffs } => match coeffs.as_slice() {
                [c] => inv_mod(*c, *p).map(|r| Elem(Repr::PolyFp { p: *p, coeffs: vec![r] })),
                _ => None,
            },
            Repr::PolyZ(c) => {
                if poly::z_is_pm_one(c) {
                    Some(a.clone())
                } else {
                    None
                }
            }
            Repr::Gauss(re, im) => {
                if (re * re + im * im).is_one() {
                    Some(Elem(Repr::Gauss(re.clone(), -im)))
                } else {
                    None
                }
            }
        }?;
        debug_assert!((a * &inv).is_one());
        if (a * &inv).is_one() {
            Some(inv)
        } else {
            None
        }
    }

    /// Euclidean norm: `|a|` on `Z`, `a^2 + b^2` on `Z[i]`, `deg + 1` on
    /// `F_p[x]` (zero has norm 0). `None` for non-Euclidean rings.
    pub fn norm(&self, a: &Elem) -> Option<BigInt> {
        match &a.0 {
            Repr::Int(k) => Some(k.abs()),
            Repr::Gauss(re, im) => Some(re * re + im * im),
            Repr::PolyFp { coeffs, .. } => Some(BigInt::from(coeffs.len())),
            _ => None,
        }
    }

    /// Division with remainder: `a = q b + r` with `r = 0` or
    /// `norm(r) < norm(b)`. Integer remainders lie in `[0, |b|)`, Gaussian
    /// quotients are rounded to the nearest lattice point.
    pub fn euclid_divmod(&self, a: &Elem, b: &Elem) -> Result<(Elem, Elem)> {
        self.check(a)?;
        self.check(b)?;
        if !self.is_euclidean() {
            return Err(Error::NotEuclidean(self.to_string()));
        }
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&a.0, &b.0) {
            (Repr::Int(x), Repr::Int(y)) => {
                let r = x.mod_floor(&y.abs());
                let q = (x - &r) / y;
                (Elem(Repr::Int(q)), Elem(Repr::Int(r)))
            }
            (Repr::Gauss(a1, a2), Repr::Gauss(c, d)) => {
                let n = c * c + d * d;
                let x = a1 * c + a2 * d;
                let y = a2 * c - a1 * d;
                let two_n = &n * BigInt::from(2);
                let qr = (x * BigInt::from(2) + &n).div_floor(&two_n);
                let qi = (y * BigInt::from(2) + &n).div_floor(&two_n);
                let q = Elem(Repr::Gauss(qr, qi));
                let r = a - &(&q * b);
                (q, r)
            }
            (Repr::PolyFp { p, coeffs: x }, Repr::PolyFp { coeffs: y, .. }) => {
                let (q, r) = poly::fp_divmod(x, y, *p);
                (Elem(Repr::PolyFp { p: *p, coeffs: q }), Elem(Repr::PolyFp { p: *p, coeffs: r }))
            }
            _ => unreachable!("operands checked against a Euclidean ring"),
        })
    }

    /// Exact quotient in an integral domain, `None` if `b` does not divide `a`.
    pub fn exact_div(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        if b.is_zero() {
            return None;
        }
        match (&a.0, &b.0) {
            (Repr::PolyZ(x), Repr::PolyZ(y)) => poly::z_exact_div(x, y).map(|c| Elem(Repr::PolyZ(c))),
            (Repr::Mod { .. }, _) => None,
            _ => {
                let (q, r) = self.euclid_divmod(a, b).ok()?;
                r.is_zero().then_some(q)
            }
        }
    }

    /// The unit `u` making `u * a` normalized: positive over `Z`, monic over
    /// `F_p[x]`, in the quadrant `re > 0, im >= 0` over `Z[i]`.
    pub fn normalizing_unit(&self, a: &Elem) -> Elem {
        match &a.0 {
            Repr::Int(k) if k.is_negative() => self.from_i64(-1),
            Repr::PolyFp { p, coeffs } if !coeffs.is_empty() => {
                let inv = inv_mod(*coeffs.last().unwrap(), *p).unwrap();
                Elem(Repr::PolyFp { p: *p, coeffs: vec![inv] })
            }
            Repr::Gauss(re, im) if !(re.is_zero() && im.is_zero()) => {
                // rotate by powers of i until re > 0, im >= 0
                let units = [(1, 0), (0, 1), (-1, 0), (0, -1)];
                for (ur, ui) in units {
                    let u = Elem(Repr::Gauss(ur.into(), ui.into()));
                    if let Repr::Gauss(x, y) = (&u * a).0 {
                        if x.is_positive() && !y.is_negative() {
                            return u;
                        }
                    }
                }
                unreachable!("some rotation lands in the first quadrant")
            }
            _ => self.one(),
        }
    }

    /// A stream of pairwise distinct elements in the documented order.
    pub fn enumerate(&self, count: usize) -> std::iter::Take<Enumeration> {
        Enumeration::new(*self).take(count)
    }

    /// A random element with "size" bounded by `bound` (coefficients or
    /// parts in `[-bound, bound]`, polynomial degree at most 3).
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: u64) -> Elem {
        let b = bound as i64;
        match self.0 {
            RingKind::Integers => self.from_i64(rng.random_range(-b..=b)),
            RingKind::Modular(m) => Elem(Repr::Mod { m, r: rng.random_range(0..m) }),
            RingKind::PolyFp(p) => {
                let deg = rng.random_range(0..=3usize);
                let mut c: Vec<u64> = (0..=deg).map(|_| rng.random_range(0..p)).collect();
                poly::trim_fp(&mut c);
                Elem(Repr::PolyFp { p, coeffs: c })
            }
            RingKind::PolyZ => {
                let deg = rng.random_range(0..=3usize);
                let mut c: Vec<BigInt> = (0..=deg).map(|_| BigInt::from(rng.random_range(-b..=b))).collect();
                poly::trim_z(&mut c);
                Elem(Repr::PolyZ(c))
            }
            RingKind::Gaussian => Elem(Repr::Gauss(rng.random_range(-b..=b).into(), rng.random_range(-b..=b).into())),
        }
    }
}

pub(crate) fn reduce_u64(k: &BigInt, m: u64) -> u64 {
    k.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits in u64")
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Modular(m) => write!(f, "Z/{m}"),
            RingKind::PolyFp(p) => write!(f, "Fp[x]/{p}"),
            RingKind::PolyZ => write!(f, "Z[x]"),
            RingKind::Gaussian => write!(f, "Zi"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidRing(s.to_string());
        match t.as_str() {
            "Z" => Ok(Ring::integers()),
            "Z[x]" => Ok(Ring::poly_z()),
            "Zi" | "Z[i]" => Ok(Ring::gaussian()),
            _ => {
                if let Some(p) = t.strip_prefix("Fp[x]/") {
                    Ring::poly_fp(p.parse().map_err(|_| bad())?)
                } else if let Some(m) = t.strip_prefix("Z/") {
                    Ring::modular(m.parse().map_err(|_| bad())?)
                } else {
                    Err(bad())
                }
            }
        }
    }
}

impl Elem {
    /// The ring this element lives in.
    pub fn ring(&self) -> Ring {
        Ring(match &self.0 {
            Repr::Int(_) => RingKind::Integers,
            Repr::Mod { m, .. } => RingKind::Modular(*m),
            Repr::PolyFp { p, .. } => RingKind::PolyFp(*p),
            Repr::PolyZ(_) => RingKind::PolyZ,
            Repr::Gauss(..) => RingKind::Gaussian,
        })
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Int(k) => k.is_zero(),
            Repr::Mod { r, .. } => *r == 0,
            Repr::PolyFp { coeffs, .. } => coeffs.is_empty(),
            Repr::PolyZ(c) => c.is_empty(),
            Repr::Gauss(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring().one()
    }

    /// Integer value for `Z`; residue in `[0, m)` for `Z/m`.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match &self.0 {
            Repr::Int(k) => Some(k.clone()),
            Repr::Mod { r, .. } => Some(BigInt::from(*r)),
            _ => None,
        }
    }

    /// Residues lift to their representative in `[0, m)`; other elements
    /// are returned unchanged.
    pub fn lift(&self) -> Elem {
        match &self.0 {
            Repr::Mod { r, .. } => Elem(Repr::Int(BigInt::from(*r))),
            _ => self.clone(),
        }
    }

    pub fn checked_add(&self, other: &Elem) -> Result<Elem> {
        Ok(Elem(match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a + b),
            (Repr::Mod { m, r: a }, Repr::Mod { m: m2, r: b }) if m == m2 => {
                Repr::Mod { m: *m, r: add_mod(*a, *b, *m) }
            }
            (Repr::PolyFp { p, coeffs: a }, Repr::PolyFp { p: p2, coeffs: b }) if p == p2 => {
                Repr::PolyFp { p: *p, coeffs: poly::fp_add(a, b, *p) }
            }
            (Repr::PolyZ(a), Repr::PolyZ(b)) => Repr::PolyZ(poly::z_add(a, b)),
            (Repr::Gauss(a, b), Repr::Gauss(c, d)) => Repr::Gauss(a + c, b + d),
            _ => return Err(Error::MixedRings(self.to_string(), other.to_string())),
        }))
    }

    pub fn checked_mul(&self, other: &Elem) -> Result<Elem> {
        Ok(Elem(match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a * b),
            (Repr::Mod { m, r: a }, Repr::Mod { m: m2, r: b }) if m == m2 => {
                Repr::Mod { m: *m, r: mul_mod(*a, *b, *m) }
            }
            (Repr::PolyFp { p, coeffs: a }, Repr::PolyFp { p: p2, coeffs: b }) if p == p2 => {
                Repr::PolyFp { p: *p, coeffs: poly::fp_mul(a, b, *p) }
            }
            (Repr::PolyZ(a), Repr::PolyZ(b)) => Repr::PolyZ(poly::z_mul(a, b)),
            (Repr::Gauss(a, b), Repr::Gauss(c, d)) => Repr::Gauss(a * c - b * d, a * d + b * c),
            _ => return Err(Error::MixedRings(self.to_string(), other.to_string())),
        }))
    }
}

impl Neg for &Elem {
    type Output = Elem;

    fn neg(self) -> Elem {
        Elem(match &self.0 {
            Repr::Int(a) => Repr::Int(-a),
            Repr::Mod { m, r } => Repr::Mod { m: *m, r: neg_mod(*r, *m) },
            Repr::PolyFp { p, coeffs } => Repr::PolyFp { p: *p, coeffs: poly::fp_neg(coeffs, *p) },
            Repr::PolyZ(c) => Repr::PolyZ(c.iter().map(|x| -x).collect()),
            Repr::Gauss(a, b) => Repr::Gauss(-a, -b),
        })
    }
}

impl Neg for Elem {
    type Output = Elem;

    fn neg(self) -> Elem {
        -&self
    }
}

// The operator impls panic on mixed rings; matrices and vectors are
// homogeneous by construction, and `checked_*` is the fallible route.
macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Elem> for &Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                let f: fn(&Elem, &Elem) -> Result<Elem> = $body;
                f(self, rhs).expect("mixed-ring operands")
            }
        }
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: Elem) -> Elem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.checked_add(b));
binop!(Sub, sub, |a, b| a.checked_add(&-b));
binop!(Mul, mul, |a, b| a.checked_mul(b));

fn fmt_poly_terms<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, bool, T, bool)>,
) -> fmt::Result {
    // (degree, negative, magnitude, magnitude_is_one), high degree first
    let mut first = true;
    for (k, neg, mag, unit) in terms {
        if neg {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        first = false;
        match (k, unit) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "x")?,
            (1, false) => write!(f, "{mag}*x")?,
            (_, true) => write!(f, "x^{k}")?,
            (_, false) => write!(f, "{mag}*x^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Int(k) => write!(f, "{k}"),
            Repr::Mod { r, .. } => write!(f, "{r}"),
            Repr::PolyFp { coeffs, .. } => fmt_poly_terms(
                f,
                coeffs.iter().enumerate().rev().filter(|(_, c)| **c != 0).map(|(k, c)| (k, false, *c, *c == 1)),
            ),
            Repr::PolyZ(coeffs) => fmt_poly_terms(
                f,
                coeffs
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.is_negative(), c.abs(), c.abs().is_one())),
            ),
            Repr::Gauss(a, b) => {
                if b.is_zero() {
                    return write!(f, "{a}");
                }
                if !a.is_zero() {
                    write!(f, "{a}")?;
                    if b.is_positive() {
                        write!(f, "+")?;
                    }
                }
                if b.is_one() {
                    write!(f, "i")
                } else if (-b).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{b}i")
                }
            }
        }
    }
}

impl serde::Serialize for Elem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Dot product of two equal-length vectors.
pub fn dot(a: &[Elem], b: &[Elem]) -> Elem {
    assert_eq!(a.len(), b.len(), "dot product of unequal lengths");
    let ring = a.first().map(Elem::ring).unwrap_or(Ring::integers());
    a.iter().zip(b).fold(ring.zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn all_rings() -> Vec<Ring> {
        vec![
            Ring::integers(),
            Ring::modular(6).unwrap(),
            Ring::modular(9).unwrap(),
            Ring::poly_fp(5).unwrap(),
            Ring::poly_z(),
            Ring::gaussian(),
        ]
    }

    #[test]
    fn descriptor_flags() {
        let z6 = Ring::modular(6).unwrap();
        assert!(z6.is_finite() && !z6.is_euclidean() && !z6.is_domain());
        assert!(Ring::integers().is_euclidean() && !Ring::integers().is_finite());
        assert!(Ring::gaussian().is_euclidean());
        assert!(Ring::poly_fp(5).unwrap().is_euclidean());
        assert!(!Ring::poly_z().is_euclidean() && Ring::poly_z().is_domain());
        assert!(Ring::modular(1).is_err());
        assert!(Ring::poly_fp(6).is_err());
    }

    #[test]
    fn descriptor_text_roundtrip() {
        for r in all_rings() {
            assert_eq!(r.to_string().parse::<Ring>().unwrap(), r);
        }
        assert_eq!("Fp[x]/5".parse::<Ring>().unwrap(), Ring::poly_fp(5).unwrap());
        assert!("Q".parse::<Ring>().is_err());
        assert!("Z/0".parse::<Ring>().is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let z = Ring::integers();
        let r = z.arithmetic(ArithOp::Add, &z.from_i64(2), Some(&z.from_i64(3))).unwrap();
        assert_eq!(r, z.from_i64(5));

        let z6 = Ring::modular(6).unwrap();
        let r = z6.arithmetic(ArithOp::Mul, &z6.from_i64(4), Some(&z6.from_i64(3))).unwrap();
        assert!(r.is_zero());

        let zx = Ring::poly_z();
        let a = zx.parse_element("x+1").unwrap();
        let b = zx.parse_element("x-1").unwrap();
        let r = zx.arithmetic(ArithOp::Mul, &a, Some(&b)).unwrap();
        assert_eq!(r, zx.polynomial(&[-1, 0, 1]).unwrap());
        assert_eq!(r.to_string(), "x^2-1");
    }

    #[test]
    fn mixed_ring_operands_rejected() {
        let z = Ring::integers();
        let z6 = Ring::modular(6).unwrap();
        let z7 = Ring::modular(7).unwrap();
        assert!(matches!(z.arithmetic(ArithOp::Add, &z.one(), Some(&z6.one())), Err(Error::MixedRings(..))));
        assert!(z6.one().checked_add(&z7.one()).is_err());
        assert!(z.arithmetic(ArithOp::Add, &z.one(), None).is_err());
    }

    #[test]
    fn unit_examples() {
        let z = Ring::integers();
        assert_eq!(z.is_unit(&z.one()), Some(z.one()));
        assert_eq!(z.is_unit(&z.from_i64(2)), None);
        let z9 = Ring::modular(9).unwrap();
        // oracle: scan residues for 2k = 1 mod 9
        let k = (0..9).find(|k| (2 * k) % 9 == 1).unwrap();
        assert_eq!(z9.is_unit(&z9.from_i64(2)), Some(z9.from_i64(k)));
        assert_eq!(k, 5);
        assert_eq!(z9.is_unit(&z9.from_i64(3)), None);
        let zi = Ring::gaussian();
        let i = zi.gaussian_elem(0, 1).unwrap();
        assert_eq!(zi.is_unit(&i), zi.gaussian_elem(0, -1));
        assert_eq!(zi.is_unit(&zi.gaussian_elem(1, 1).unwrap()), None);
        let f5 = Ring::poly_fp(5).unwrap();
        assert_eq!(f5.is_unit(&f5.from_i64(2)), Some(f5.from_i64(3)));
        assert_eq!(f5.is_unit(&f5.variable().unwrap()), None);
        let zx = Ring::poly_z();
        assert_eq!(zx.is_unit(&zx.from_i64(-1)), Some(zx.from_i64(-1)));
        assert_eq!(zx.is_unit(&zx.from_i64(2)), None);
    }

    #[test]
    fn divmod_examples() {
        let z = Ring::integers();
        let (q, r) = z.euclid_divmod(&z.from_i64(7), &z.from_i64(3)).unwrap();
        assert_eq!((q, r), (z.from_i64(2), z.from_i64(1)));
        let (q, r) = z.euclid_divmod(&z.from_i64(-7), &z.from_i64(3)).unwrap();
        assert_eq!((q.clone(), r.clone()), (z.from_i64(-3), z.from_i64(2)));
        assert_eq!(q * z.from_i64(3) + r, z.from_i64(-7));
        let (_, r) = z.euclid_divmod(&z.from_i64(-7), &z.from_i64(-3)).unwrap();
        assert_eq!(r, z.from_i64(2));

        let f5 = Ring::poly_fp(5).unwrap();
        let a = f5.parse_element("x^2+1").unwrap();
        let b = f5.parse_element("x+2").unwrap();
        let (q, r) = f5.euclid_divmod(&a, &b).unwrap();
        assert_eq!(q, f5.parse_element("x+3").unwrap());
        assert!(r.is_zero());
        // multiply back over F_5: (x+2)(x+3) = x^2 + 5x + 6 = x^2 + 1
        assert_eq!(&b * &q, a);

        assert_eq!(z.euclid_divmod(&z.one(), &z.zero()), Err(Error::DivisionByZero));
        let zx = Ring::poly_z();
        assert!(matches!(zx.euclid_divmod(&zx.one(), &zx.one()), Err(Error::NotEuclidean(_))));
        let z6 = Ring::modular(6).unwrap();
        assert!(matches!(z6.euclid_divmod(&z6.one(), &z6.one()), Err(Error::NotEuclidean(_))));
    }

    #[test]
    fn gaussian_remainder_is_small() {
        let zi = Ring::gaussian();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let a = zi.sample(&mut rng, 50);
            let b = zi.sample(&mut rng, 9);
            if b.is_zero() {
                continue;
            }
            let (q, r) = zi.euclid_divmod(&a, &b).unwrap();
            assert_eq!(&q * &b + &r, a);
            let nr = zi.norm(&r).unwrap();
            let nb = zi.norm(&b).unwrap();
            assert!(&nr * 2 <= nb, "N(r) = {nr} too large for N(b) = {nb}");
        }
    }

    #[test]
    fn normalizing_units() {
        let z = Ring::integers();
        assert_eq!(z.normalizing_unit(&z.from_i64(-4)), z.from_i64(-1));
        let zi = Ring::gaussian();
        for (re, im) in [(2, 3), (-2, 3), (-2, -3), (2, -3), (0, 5), (0, -5), (-5, 0)] {
            let a = zi.gaussian_elem(re, im).unwrap();
            let u = zi.normalizing_unit(&a);
            assert!(zi.is_unit(&u).is_some());
            let Repr::Gauss(x, y) = (u * a).0 else { unreachable!() };
            assert!(x.is_positive() && !y.is_negative());
        }
        let f5 = Ring::poly_fp(5).unwrap();
        let a = f5.parse_element("3*x^2+1").unwrap();
        let monic = f5.normalizing_unit(&a) * a;
        assert_eq!(monic, f5.parse_element("x^2+2").unwrap());
    }

    #[test]
    fn exact_division_in_domains() {
        let zx = Ring::poly_z();
        let a = zx.parse_element("x^2-1").unwrap();
        let b = zx.parse_element("x+1").unwrap();
        assert_eq!(zx.exact_div(&a, &b), Some(zx.parse_element("x-1").unwrap()));
        assert_eq!(zx.exact_div(&a, &zx.from_i64(2)), None);
        let z = Ring::integers();
        assert_eq!(z.exact_div(&z.from_i64(-12), &z.from_i64(4)), Some(z.from_i64(-3)));
        assert_eq!(z.exact_div(&z.from_i64(5), &z.from_i64(4)), None);
    }

    #[test]
    fn gaussian_display() {
        let zi = Ring::gaussian();
        let cases = [
            ((0, 0), "0"),
            ((3, 0), "3"),
            ((0, 1), "i"),
            ((0, -1), "-i"),
            ((3, 2), "3+2i"),
            ((-3, -1), "-3-i"),
            ((0, 4), "4i"),
        ];
        for ((a, b), s) in cases {
            let e = zi.gaussian_elem(a, b).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(zi.parse_element(s).unwrap(), e);
        }
    }
}
