//! Dense matrices over a [`Ring`].
//!
//! Text format: rows separated by `;`, entries by `,`, each entry in the
//! ring's literal grammar (`1,0;0,1`).

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    /// Builds a matrix from row-major entries, checking ring and shape.
    pub fn new(ring: Ring, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        for e in &data {
            ring.check(e)?;
        }
        Ok(Matrix { ring, rows, cols, data })
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers mapped into `ring`.
    pub fn from_ints<R: AsRef<[i64]>>(ring: Ring, rows: &[R]) -> Self {
        let rows = rows.iter().map(|row| row.as_ref().iter().map(|&k| ring.from_i64(k)).collect()).collect();
        Matrix::from_rows(ring, rows).expect("rectangular integer rows")
    }

    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        Matrix { ring, rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    /// A single column vector.
    pub fn column_vector(ring: Ring, v: &[Elem]) -> Result<Self> {
        Matrix::new(ring, v.len(), 1, v.to_vec())
    }

    /// A single row vector.
    pub fn row_vector(ring: Ring, v: &[Elem]) -> Result<Self> {
        Matrix::new(ring, 1, v.len(), v.to_vec())
    }

    pub fn parse(ring: Ring, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::MalformedMatrix("empty matrix text".into()));
        }
        let rows = text
            .split(';')
            .map(|row| row.split(',').map(|lit| ring.parse_element(lit)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(ring, rows).map_err(|e| Error::MalformedMatrix(e.to_string()))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Elem) {
        assert!(self.ring.contains(&value), "entry from a different ring");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Elem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.ring, self.rows)
    }

    fn same_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRings(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(())
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector given as a slice.
    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        for e in v {
            self.ring.check(e)?;
        }
        Ok((0..self.rows).map(|i| crate::ring::dot(self.row(i), v)).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { ring: self.ring, rows: self.cols, cols: self.rows, data }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("sum of differently shaped matrices".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { ring: self.ring, rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&-self.ring.one()))
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { ring: self.ring, rows: self.rows, cols: self.cols, data }
    }

    /// Rectangular block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        let mut data = Vec::with_capacity(rows * cols);
        for i in r0..r0 + rows {
            data.extend_from_slice(&self.data[i * self.cols + c0..i * self.cols + c0 + cols]);
        }
        Matrix { ring: self.ring, rows, cols, data }
    }

    /// The 2x2 block matrix `(tl, tr; bl, br)`.
    pub fn assemble_block(tl: &Matrix, tr: &Matrix, bl: &Matrix, br: &Matrix) -> Result<Matrix> {
        for m in [tr, bl, br] {
            tl.same_ring(m)?;
        }
        if tl.rows != tr.rows || bl.rows != br.rows || tl.cols != bl.cols || tr.cols != br.cols {
            return Err(Error::Dimension(format!(
                "blocks {}x{}, {}x{}, {}x{}, {}x{} do not conform",
                tl.rows, tl.cols, tr.rows, tr.cols, bl.rows, bl.cols, br.rows, br.cols
            )));
        }
        let rows = tl.rows + bl.rows;
        let cols = tl.cols + tr.cols;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..tl.rows {
            data.extend_from_slice(tl.row(i));
            data.extend_from_slice(tr.row(i));
        }
        for i in 0..bl.rows {
            data.extend_from_slice(bl.row(i));
            data.extend_from_slice(br.row(i));
        }
        Ok(Matrix { ring: tl.ring, rows, cols, data })
    }

    /// `(self | other)` side by side.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.rows != other.rows {
            return Err(Error::Dimension(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Matrix { ring: self.ring, rows: self.rows, cols: self.cols + other.cols, data })
    }

    /// Entries of a `Z/m` matrix lifted to their representatives in `[0, m)`.
    pub fn lift_to_integers(&self) -> Matrix {
        Matrix {
            ring: Ring::integers(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Elem::lift).collect(),
        }
    }

    /// Image of an integer matrix under `Z -> ring`.
    pub fn reduce_into(&self, ring: Ring) -> Matrix {
        assert_eq!(self.ring, Ring::integers(), "only integer matrices can be reduced");
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| ring.from_bigint(&e.to_bigint().unwrap())).collect(),
        }
    }

    /// Exact determinant: fraction-free Bareiss elimination over integral
    /// domains; `Z/m` matrices are lifted to `Z` and the result reduced.
    pub fn determinant(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        if let RingKind::Modular(_) = self.ring.kind() {
            let d = self.lift_to_integers().determinant()?;
            return Ok(self.ring.from_bigint(&d.to_bigint().unwrap()));
        }
        Ok(bareiss(self.clone()))
    }

    /// Determinant by cofactor expansion along the first row. Exponential;
    /// kept as an independent check for small matrices.
    pub fn determinant_cofactor(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        Ok(cofactor_det(self))
    }

    /// The matrix with row `i` and column `j` deleted.
    pub fn minor(&self, i: usize, j: usize) -> Matrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != i) {
            for c in (0..self.cols).filter(|&c| c != j) {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { ring: self.ring, rows: self.rows - 1, cols: self.cols - 1, data }
    }

    pub fn adjugate(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("adjugate of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 1 {
            return Ok(Matrix::identity(self.ring, 1));
        }
        let mut adj = Matrix::zeros(self.ring, n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).determinant()?;
                adj.data[j * n + i] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        Ok(adj)
    }

    /// Inverse via the adjugate and the inverse of the determinant. Fails
    /// when the determinant is not a unit.
    pub fn inverse(&self) -> Result<Matrix> {
        let det = self.determinant()?;
        let det_inv = self.ring.is_unit(&det).ok_or_else(|| Error::NotInvertible { det: det.to_string() })?;
        let inv = self.adjugate()?.scale(&det_inv);
        if !self.mul(&inv)?.is_identity() || !inv.mul(self)?.is_identity() {
            return Err(Error::VerificationFailed("adjugate inverse does not multiply to I".into()));
        }
        Ok(inv)
    }

    // Elementary operations used by the normal-form algorithms.

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &Elem) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = &self.data[src * self.cols + j] * factor;
            let idx = dst * self.cols + j;
            self.data[idx] = &self.data[idx] + &t;
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &Elem) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = &self.data[i * self.cols + src] * factor;
            let idx = i * self.cols + dst;
            self.data[idx] = &self.data[idx] + &t;
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, factor: &Elem) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = &self.data[idx] * factor;
        }
    }
}

fn bareiss(mut m: Matrix) -> Elem {
    let n = m.rows;
    let ring = m.ring;
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if m.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                Some(i) => {
                    m.swap_rows(k, i);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        let pivot = m.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(m.get(i, j) * &pivot) - &(m.get(i, k) * m.get(k, j));
                let q = ring.exact_div(&num, &prev).expect("Bareiss division is exact in a domain");
                m.set(i, j, q);
            }
        }
        prev = pivot;
    }
    let d = m.get(n - 1, n - 1).clone();
    if negate {
        -d
    } else {
        d
    }
}

fn cofactor_det(m: &Matrix) -> Elem {
    let ring = m.ring;
    match m.rows {
        0 => ring.one(),
        1 => m.get(0, 0).clone(),
        n => {
            let mut acc = ring.zero();
            for j in 0..n {
                let a = m.get(0, j);
                if a.is_zero() {
                    continue;
                }
                let term = a * &cofactor_det(&m.minor(0, j));
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs).expect("conforming matrices")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn z() -> Ring {
        Ring::integers()
    }

    fn e(ring: Ring, n: usize, i: usize, j: usize, r: &Elem) -> Matrix {
        let mut m = Matrix::identity(ring, n);
        m.set(i, j, r.clone());
        m
    }

    fn random(ring: Ring, rng: &mut ChaCha8Rng, r: usize, c: usize, bound: u64) -> Matrix {
        let data = (0..r * c).map(|_| ring.sample(rng, bound)).collect();
        Matrix::new(ring, r, c, data).unwrap()
    }

    #[test]
    fn text_format() {
        let m = Matrix::parse(z(), "1, 0; 0, -1").unwrap();
        assert_eq!(m, Matrix::from_ints(z(), &[[1, 0], [0, -1]]));
        assert_eq!(m.to_string(), "1,0;0,-1");
        let zx = Ring::poly_z();
        let p = Matrix::parse(zx, "x^2-1,1;0,3*x").unwrap();
        assert_eq!(Matrix::parse(zx, &p.to_string()).unwrap(), p);
        assert!(matches!(Matrix::parse(z(), "1,2;3"), Err(Error::MalformedMatrix(_))));
        assert!(Matrix::parse(z(), "").is_err());
        assert!(Matrix::parse(z(), "1,x").is_err());
    }

    #[test]
    fn multiplication_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random(z(), &mut rng, 3, 3, 9);
        assert_eq!(&Matrix::identity(z(), 3) * &a, a);
        let (ea, eb) = (z().from_i64(4), z().from_i64(-9));
        assert_eq!(&e(z(), 2, 0, 1, &ea) * &e(z(), 2, 0, 1, &eb), e(z(), 2, 0, 1, &(&ea + &eb)));
        // e21(1) e1 = e1 + e2
        let v = e(z(), 2, 1, 0, &z().one()).mul_vec(&[z().one(), z().zero()]).unwrap();
        assert_eq!(v, vec![z().one(), z().one()]);
        assert!(matches!(a.mul(&Matrix::identity(z(), 2)), Err(Error::Dimension(_))));
        let z6 = Ring::modular(6).unwrap();
        assert!(matches!(a.mul(&Matrix::identity(z6, 3)), Err(Error::MixedRings(..))));
    }

    #[test]
    fn determinant_examples() {
        for n in 1..=4 {
            assert!(Matrix::identity(z(), n).determinant().unwrap().is_one());
            for i in 0..n {
                for j in (0..n).filter(|&j| j != i) {
                    let m = e(z(), n, i, j, &z().from_i64(-7));
                    assert!(m.determinant().unwrap().is_one());
                    assert!(m.determinant_cofactor().unwrap().is_one());
                }
            }
        }
        let j = Matrix::from_ints(z(), &[[0, 1], [-1, 0]]);
        assert!(j.determinant().unwrap().is_one());
        assert!(Matrix::zeros(z(), 2, 3).determinant().is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Matrix::identity(z(), 3).inverse().unwrap(), Matrix::identity(z(), 3));
        let r = z().from_i64(5);
        assert_eq!(e(z(), 3, 0, 1, &r).inverse().unwrap(), e(z(), 3, 0, 1, &-&r));
        let err = Matrix::from_ints(z(), &[[2, 0], [0, 1]]).inverse().unwrap_err();
        assert_eq!(err, Error::NotInvertible { det: "2".into() });
        // over Z/9 the same matrix is invertible
        let z9 = Ring::modular(9).unwrap();
        let m = Matrix::from_ints(z9, &[[2, 0], [0, 1]]);
        assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn block_assembly() {
        let i1 = Matrix::identity(z(), 1);
        let i2 = Matrix::identity(z(), 2);
        let m = Matrix::assemble_block(&i1, &Matrix::zeros(z(), 1, 2), &Matrix::zeros(z(), 2, 1), &i2).unwrap();
        assert!(m.is_identity());
        let x = Matrix::from_ints(z(), &[[3, -4]]);
        let s = Matrix::assemble_block(&i1, &x, &Matrix::zeros(z(), 2, 1), &i2).unwrap();
        assert_eq!(s, Matrix::from_ints(z(), &[[1, 3, -4], [0, 1, 0], [0, 0, 1]]));
        let a = Matrix::from_ints(z(), &[[1, 2], [2, 5]]);
        let t = Matrix::assemble_block(&i2, &a, &Matrix::zeros(z(), 2, 2), &i2).unwrap();
        assert_eq!(t.block(0, 2, 2, 2), a);
        assert!(Matrix::assemble_block(&i1, &i2, &i1, &i2).is_err());
    }

    #[test]
    fn associativity_and_transpose() {
        let rings = [z(), Ring::modular(6).unwrap(), Ring::poly_fp(5).unwrap(), Ring::poly_z(), Ring::gaussian()];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for ring in rings {
            for _ in 0..100 {
                let a = random(ring, &mut rng, 4, 4, 5);
                let b = random(ring, &mut rng, 4, 4, 5);
                let c = random(ring, &mut rng, 4, 4, 5);
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
            }
        }
    }

    #[test]
    fn determinant_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for ring in [z(), Ring::modular(6).unwrap(), Ring::modular(8).unwrap()] {
            for _ in 0..200 {
                let a = random(ring, &mut rng, 3, 3, 9);
                let b = random(ring, &mut rng, 3, 3, 9);
                let lhs = (&a * &b).determinant().unwrap();
                assert_eq!(lhs, a.determinant().unwrap() * b.determinant().unwrap());
            }
        }
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.random_range(1..=5);
            let a = random(z(), &mut rng, n, n, 9);
            assert_eq!(a.determinant().unwrap(), a.determinant_cofactor().unwrap());
        }
        for ring in [Ring::poly_z(), Ring::gaussian(), Ring::poly_fp(3).unwrap(), Ring::modular(12).unwrap()] {
            for _ in 0..40 {
                let n = rng.random_range(1..=4);
                let a = random(ring, &mut rng, n, n, 4);
                assert_eq!(a.determinant().unwrap(), a.determinant_cofactor().unwrap(), "{ring}: {a}");
            }
        }
    }

    #[test]
    fn inverse_multiplies_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut found = 0;
        for ring in [z(), Ring::modular(7).unwrap(), Ring::gaussian()] {
            for _ in 0..300 {
                let a = random(ring, &mut rng, 3, 3, 2);
                if let Ok(inv) = a.inverse() {
                    assert!((&inv * &a).is_identity());
                    found += 1;
                }
            }
        }
        assert!(found > 20);
    }
}
