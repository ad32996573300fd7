//! Coefficient-list helpers for `F_p[x]` and `Z[x]`.
//!
//! Coefficients are stored low-to-high with no trailing zeros, so the zero
//! polynomial is the empty list.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub(crate) fn trim_fp(c: &mut Vec<u64>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

pub(crate) fn trim_z(c: &mut Vec<BigInt>) {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn neg_mod(a: u64, m: u64) -> u64 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

/// Inverse of `a` modulo `m` when `gcd(a, m) = 1`.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

pub(crate) fn fp_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n).map(|i| add_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p)).collect();
    trim_fp(&mut out);
    out
}

pub(crate) fn fp_neg(a: &[u64], p: u64) -> Vec<u64> {
    a.iter().map(|&c| neg_mod(c, p)).collect()
}

pub(crate) fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim_fp(&mut out);
    out
}

/// Polynomial long division over `F_p`; `b` must be nonzero.
pub(crate) fn fp_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p).expect("leading coefficient invertible mod prime");
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let coef = mul_mod(*rem.last().unwrap(), lead_inv, p);
        quot[shift] = coef;
        for (k, &bc) in b.iter().enumerate() {
            let t = mul_mod(coef, bc, p);
            rem[shift + k] = add_mod(rem[shift + k], neg_mod(t, p), p);
        }
        trim_fp(&mut rem);
    }
    trim_fp(&mut quot);
    (quot, rem)
}

pub(crate) fn z_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out: Vec<BigInt> = (0..n).map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).collect();
    trim_z(&mut out);
    out
}

pub(crate) fn z_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_z(&mut out);
    out
}

/// Exact quotient `a / b` in `Z[x]`, or `None` when `b` does not divide `a`.
pub(crate) fn z_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while !rem.is_empty() {
        if rem.len() <= db {
            return None;
        }
        let shift = rem.len() - 1 - db;
        let (coef, r) = rem.last().unwrap().div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (k, bc) in b.iter().enumerate() {
            rem[shift + k] -= &coef * bc;
        }
        quot[shift] = coef;
        trim_z(&mut rem);
    }
    trim_z(&mut quot);
    Some(quot)
}

pub(crate) fn z_is_pm_one(a: &[BigInt]) -> bool {
    a.len() == 1 && (a[0].is_one() || (-&a[0]).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_small() {
        assert_eq!(inv_mod(2, 9), Some(5));
        assert_eq!(inv_mod(3, 9), None);
        assert_eq!(inv_mod(1, 2), Some(1));
    }

    #[test]
    fn fp_division_multiplies_back() {
        // (x^3 + 2x + 4) / (x + 2) over F_5
        let a = vec![4, 2, 0, 1];
        let b = vec![2, 1];
        let (q, r) = fp_divmod(&a, &b, 5);
        assert_eq!(fp_add(&fp_mul(&q, &b, 5), &r, 5), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn z_exact_division() {
        let i = |v: i64| BigInt::from(v);
        // (x^2 - 1) / (x - 1) = x + 1
        let q = z_exact_div(&[i(-1), i(0), i(1)], &[i(-1), i(1)]).unwrap();
        assert_eq!(q, vec![i(1), i(1)]);
        assert!(z_exact_div(&[i(1), i(0), i(1)], &[i(-1), i(1)]).is_none());
        assert!(z_exact_div(&[i(3)], &[i(2)]).is_none());
    }
}
