//! Canonical enumeration of ring elements.
//!
//! * `Z`: `0, 1, -1, 2, -2, ...`
//! * `Z/m`: `0, 1, ..., m-1`, then the stream ends.
//! * `F_p[x]`: the `k`-th element has the base-`p` digits of `k` as
//!   coefficients (low to high), so it is graded by degree.
//! * `Z[x]`: graded by weight `degree + height` (height = largest absolute
//!   coefficient, the zero polynomial has weight 0); within a weight,
//!   lexicographic on the coefficients' integer-enumeration indices, low
//!   degree first. Starts `0, 1, -1, x, -x, x+1, ...`.
//! * `Z[i]`: graded by `|a| + |b|`, then lexicographic on the integer
//!   enumeration indices of `(a, b)`.

use std::collections::VecDeque;

use num_bigint::BigInt;

use super::{Elem, Repr, Ring, RingKind};

/// Position of an integer in the order `0, 1, -1, 2, -2, ...`.
pub(crate) fn integer_index(k: i64) -> u64 {
    match k {
        0 => 0,
        k if k > 0 => 2 * k as u64 - 1,
        k => 2 * k.unsigned_abs(),
    }
}

/// Inverse of [`integer_index`].
pub(crate) fn integer_at(idx: u64) -> i64 {
    if idx % 2 == 1 {
        idx.div_ceil(2) as i64
    } else {
        -((idx / 2) as i64)
    }
}

/// Single-consumer cursor over the elements of a ring.
#[derive(Clone, Debug)]
pub struct Enumeration {
    ring: Ring,
    next: u64,
    shell: u64,
    buffer: VecDeque<Elem>,
}

impl Enumeration {
    pub fn new(ring: Ring) -> Self {
        Enumeration { ring, next: 0, shell: 0, buffer: VecDeque::new() }
    }

    fn fill_shell(&mut self) {
        let s = self.shell;
        self.shell += 1;
        match self.ring.kind() {
            RingKind::PolyZ => {
                if s == 0 {
                    self.buffer.push_back(Elem(Repr::PolyZ(vec![])));
                    return;
                }
                let mut items: Vec<Vec<u64>> = Vec::new();
                for degree in 0..s {
                    let height = s - degree;
                    let len = degree as usize + 1;
                    // odometer over indices 0..=2h, i.e. coefficients in [-h, h]
                    let mut idx = vec![0u64; len];
                    loop {
                        let lead_nonzero = idx[len - 1] != 0;
                        let max_height = idx.iter().map(|&i| integer_at(i).unsigned_abs()).max().unwrap();
                        if lead_nonzero && max_height == height {
                            items.push(idx.clone());
                        }
                        let mut pos = 0;
                        loop {
                            if pos == len {
                                break;
                            }
                            idx[pos] += 1;
                            if idx[pos] <= 2 * height {
                                break;
                            }
                            idx[pos] = 0;
                            pos += 1;
                        }
                        if pos == len {
                            break;
                        }
                    }
                }
                items.sort();
                self.buffer.extend(
                    items
                        .into_iter()
                        .map(|idx| Elem(Repr::PolyZ(idx.into_iter().map(|i| BigInt::from(integer_at(i))).collect()))),
                );
            }
            RingKind::Gaussian => {
                let s = s as i64;
                let mut items: Vec<(u64, u64)> = Vec::new();
                for a in -s..=s {
                    let rest = s - a.abs();
                    items.push((integer_index(a), integer_index(rest)));
                    if rest != 0 {
                        items.push((integer_index(a), integer_index(-rest)));
                    }
                }
                items.sort();
                self.buffer.extend(
                    items.into_iter().map(|(a, b)| Elem(Repr::Gauss(integer_at(a).into(), integer_at(b).into()))),
                );
            }
            _ => unreachable!("only graded rings use shells"),
        }
    }
}

impl Iterator for Enumeration {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        match self.ring.kind() {
            RingKind::Integers => {
                let k = self.next;
                self.next += 1;
                Some(self.ring.from_i64(integer_at(k)))
            }
            RingKind::Modular(m) => {
                if self.next >= m {
                    return None;
                }
                let r = self.next;
                self.next += 1;
                Some(Elem(Repr::Mod { m, r }))
            }
            RingKind::PolyFp(p) => {
                let mut k = self.next;
                self.next += 1;
                let mut coeffs = Vec::new();
                while k > 0 {
                    coeffs.push(k % p);
                    k /= p;
                }
                Some(Elem(Repr::PolyFp { p, coeffs }))
            }
            RingKind::PolyZ | RingKind::Gaussian => {
                while self.buffer.is_empty() {
                    self.fill_shell();
                }
                self.buffer.pop_front()
            }
        }
    }
}
