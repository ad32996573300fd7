//! Elementary, elementary symplectic and elementary orthogonal generators,
//! the invariant forms, and the stabilization embedding.
//!
//! Generator indices are 1-based, as in the usual matrix notation; the
//! [`Matrix`] accessors stay 0-based.

mod word;

pub use word::{GeneratorWord, GroupKind, Tag, Token};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{dot, Elem, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symplectic,
    Orthogonal,
}

impl FormKind {
    /// `-1` for symplectic, `+1` for orthogonal.
    pub fn epsilon(self) -> i64 {
        match self {
            FormKind::Symplectic => -1,
            FormKind::Orthogonal => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormKind::Symplectic => "symplectic",
            FormKind::Orthogonal => "orthogonal",
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symplectic" | "sp" => Ok(FormKind::Symplectic),
            "orthogonal" | "o" => Ok(FormKind::Orthogonal),
            _ => Err(Error::InvalidParam { name: "form".into(), reason: format!("unknown form `{s}`") }),
        }
    }
}

/// The split symplectic or orthogonal form on `R^{2n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    kind: FormKind,
    n: usize,
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(ring: Ring, n: usize, kind: FormKind) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParam { name: "n".into(), reason: "half-rank must be at least 1".into() });
        }
        let mut gram = Matrix::zeros(ring, 2 * n, 2 * n);
        let lower = ring.from_i64(kind.epsilon());
        for i in 0..n {
            gram.set(i, n + i, ring.one());
            gram.set(n + i, i, lower.clone());
        }
        Ok(BilinearForm { kind, n, gram })
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn epsilon(&self) -> i64 {
        self.kind.epsilon()
    }

    pub fn half_rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn ring(&self) -> Ring {
        self.gram.ring()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    fn check_vec(&self, x: &[Elem]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::Dimension(format!("vector of length {} for a form on R^{}", x.len(), self.dim())));
        }
        x.iter().try_for_each(|e| self.ring().check(e))
    }

    /// The row vector `x^T G`, i.e. the functional `<x, ->`.
    pub fn functional(&self, x: &[Elem]) -> Result<Vec<Elem>> {
        self.check_vec(x)?;
        self.gram.transpose().mul_vec(x)
    }

    /// `<x, y> = x^T G y`.
    pub fn pairing(&self, x: &[Elem], y: &[Elem]) -> Result<Elem> {
        self.check_vec(y)?;
        Ok(dot(&self.functional(x)?, y))
    }
}

/// The Gram matrix of the symplectic form `(0 I; -I 0)` or the orthogonal
/// form `(0 I; I 0)`.
pub fn form_matrix(ring: Ring, n: usize, kind: FormKind) -> Result<BilinearForm> {
    BilinearForm::new(ring, n, kind)
}

/// The index involution on `1..=2n`.
pub fn sigma(n: usize, k: usize) -> usize {
    if k <= n {
        k + n
    } else {
        k - n
    }
}

/// The sign `s` with `a' = s * a` in the short root generator
/// `rho_ij(a) = I + a E_ij - a' E_{sigma j, sigma i}`: `1` when `i` and `j`
/// lie on the same side of `n`, `epsilon` otherwise.
pub fn a_prime_sign(n: usize, epsilon: i64, i: usize, j: usize) -> i64 {
    match (i <= n, j <= n) {
        (true, true) | (false, false) => 1,
        (true, false) | (false, true) => epsilon,
    }
}

fn check_index(size: usize, i: usize) -> Result<()> {
    if i == 0 || i > size {
        return Err(Error::InvalidIndex(format!("index {i} outside 1..={size}")));
    }
    Ok(())
}

/// `e_ij(r) = I_n + r E_ij` with `i != j`.
pub fn elementary_matrix(ring: Ring, n: usize, i: usize, j: usize, r: &Elem) -> Result<Matrix> {
    check_index(n, i)?;
    check_index(n, j)?;
    if i == j {
        return Err(Error::InvalidIndex(format!("elementary matrix needs i != j, got i = j = {i}")));
    }
    ring.check(r)?;
    let mut m = Matrix::identity(ring, n);
    m.set(i - 1, j - 1, r.clone());
    Ok(m)
}

/// Elementary unitary generators of size `2n`: `I + a E_{i, sigma i}` when
/// `j = sigma i` (symplectic only), otherwise
/// `I + a E_ij - a' E_{sigma j, sigma i}`.
pub fn unitary_generator(ring: Ring, n: usize, kind: FormKind, i: usize, j: usize, a: &Elem) -> Result<Matrix> {
    let size = 2 * n;
    check_index(size, i)?;
    check_index(size, j)?;
    if i == j {
        return Err(Error::InvalidIndex(format!("unitary generator needs i != j, got i = j = {i}")));
    }
    ring.check(a)?;
    let mut m = Matrix::identity(ring, size);
    if j == sigma(n, i) {
        if kind == FormKind::Orthogonal {
            return Err(Error::InvalidIndex(format!(
                "long root generator ({i},{j}) does not exist in the orthogonal group"
            )));
        }
        m.set(i - 1, j - 1, a.clone());
        return Ok(m);
    }
    let a_prime = ring.from_i64(a_prime_sign(n, kind.epsilon(), i, j)) * a;
    m.set(i - 1, j - 1, a.clone());
    m.set(sigma(n, j) - 1, sigma(n, i) - 1, -a_prime);
    Ok(m)
}

/// `M^T G M = G`.
pub fn preserves_form(m: &Matrix, form: &BilinearForm) -> Result<bool> {
    if m.rows() != form.dim() || m.cols() != form.dim() {
        return Err(Error::Dimension(format!("{}x{} matrix against a form on R^{}", m.rows(), m.cols(), form.dim())));
    }
    let lhs = m.transpose().mul(form.gram())?.mul(m)?;
    Ok(lhs == *form.gram())
}

/// The embedding of a `2n x 2n` matrix `(alpha beta; gamma delta)` into size
/// `2n + 2`: new rows/columns `1` and `n + 2` carry a diagonal `1`, the
/// blocks move to rows/columns `2..=n+1` and `n+3..=2n+2`.
pub fn embed_stabilize(a: &Matrix) -> Result<Matrix> {
    if !a.is_square() || !a.rows().is_multiple_of(2) {
        return Err(Error::Dimension(format!("expected an even square matrix, got {}x{}", a.rows(), a.cols())));
    }
    let n = a.rows() / 2;
    let ring = a.ring();
    let place = |k: usize| if k < n { k + 1 } else { k + 2 };
    let mut out = Matrix::zeros(ring, 2 * n + 2, 2 * n + 2);
    out.set(0, 0, ring.one());
    out.set(n + 1, n + 1, ring.one());
    for i in 0..2 * n {
        for j in 0..2 * n {
            out.set(place(i), place(j), a.get(i, j).clone());
        }
    }
    Ok(out)
}

/// Generators `rho_{1i}(1)`, `i != 1` (and `i != n + 1` for the
/// orthogonal form) of the abelian-candidate subgroup of the stabilizer of
/// `e_1`, paired with their index.
pub fn stabilizer_root_generators(ring: Ring, n: usize, kind: FormKind, a: &Elem) -> Result<Vec<(usize, Matrix)>> {
    (2..=2 * n)
        .filter(|&i| !(kind == FormKind::Orthogonal && i == n + 1))
        .map(|i| Ok((i, unitary_generator(ring, n, kind, 1, i, a)?)))
        .collect()
}
