//! Hermite and Smith normal forms over Euclidean rings, kernel bases, and
//! streams of distinct kernel vectors.
//!
//! `Z/m` inputs are lifted to the integers: normal forms are computed over
//! `Z` and reduced, kernels are solved as `A x = m y` over `Z`.
//!
//! Pivot selection always takes the smallest nonzero norm in the working
//! column (HNF) or submatrix (SNF), ties going to the lowest row index and
//! then the lowest column index.

mod stream;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring, RingKind};

pub use stream::{SolutionStream, TupleCursor};

/// `U * A = H` with `U` unimodular and `H` in row echelon form with
/// normalized pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub h: Matrix,
    pub u: Matrix,
}

/// `U * A * V = D` with `D` diagonal, `d_i | d_{i+1}`, `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub d: Matrix,
    pub u: Matrix,
    pub v: Matrix,
}

impl Snf {
    /// The diagonal entries `d_1, ..., d_min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<Elem> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Generators of `{x : A x = 0}`. Over Euclidean domains the generators
/// form a basis (linearly independent, `cols - rank` of them); over `Z/m`
/// they generate the kernel but need not be independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelModule {
    pub ring: Ring,
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Elem>>,
    pub defining: Matrix,
}

impl KernelModule {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `sum_i c_i * basis_i`.
    pub fn combine(&self, coeffs: &[Elem]) -> Vec<Elem> {
        combine(self.ring, self.ambient_dim, &self.basis, coeffs)
    }

    /// True when `v` is annihilated by the defining matrix.
    pub fn contains(&self, v: &[Elem]) -> bool {
        self.defining.mul_vec(v).is_ok_and(|w| w.iter().all(Elem::is_zero))
    }
}

pub(crate) fn combine(ring: Ring, dim: usize, basis: &[Vec<Elem>], coeffs: &[Elem]) -> Vec<Elem> {
    let mut out = vec![ring.zero(); dim];
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o = &*o + &(c * x);
        }
    }
    out
}

fn require_euclidean(ring: Ring, op: &'static str) -> Result<()> {
    if ring.is_euclidean() {
        Ok(())
    } else {
        Err(Error::Unsupported { op, ring: ring.to_string() })
    }
}

fn norm(ring: Ring, a: &Elem) -> num_bigint::BigInt {
    ring.norm(a).expect("Euclidean ring has a norm")
}

/// Row-style Hermite normal form.
pub fn hermite_normal_form(a: &Matrix) -> Result<Hnf> {
    let ring = a.ring();
    if let RingKind::Modular(_) = ring.kind() {
        let Hnf { h, u } = hermite_normal_form(&a.lift_to_integers())?;
        return Ok(Hnf { h: h.reduce_into(ring), u: u.reduce_into(ring) });
    }
    require_euclidean(ring, "hermite_normal_form")?;

    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = Matrix::identity(ring, rows);
    let mut pr = 0;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        let mut has_pivot = false;
        loop {
            let best = (pr..rows)
                .filter(|&i| !h.get(i, col).is_zero())
                .min_by(|&i, &j| norm(ring, h.get(i, col)).cmp(&norm(ring, h.get(j, col))).then(i.cmp(&j)));
            let Some(best) = best else { break };
            has_pivot = true;
            h.swap_rows(pr, best);
            u.swap_rows(pr, best);
            let mut clean = true;
            for i in pr + 1..rows {
                if h.get(i, col).is_zero() {
                    continue;
                }
                let (q, r) = ring.euclid_divmod(h.get(i, col), h.get(pr, col))?;
                let neg_q = -q;
                h.add_row_multiple(i, pr, &neg_q);
                u.add_row_multiple(i, pr, &neg_q);
                clean &= r.is_zero();
            }
            if clean {
                break;
            }
        }
        if !has_pivot {
            continue;
        }
        let unit = ring.normalizing_unit(h.get(pr, col));
        h.scale_row(pr, &unit);
        u.scale_row(pr, &unit);
        for i in 0..pr {
            let (q, _) = ring.euclid_divmod(h.get(i, col), h.get(pr, col))?;
            let neg_q = -q;
            h.add_row_multiple(i, pr, &neg_q);
            u.add_row_multiple(i, pr, &neg_q);
        }
        pr += 1;
    }
    Ok(Hnf { h, u })
}

/// Number of nonzero rows of a matrix in echelon form.
fn echelon_rank(h: &Matrix) -> usize {
    (0..h.rows()).filter(|&i| h.row(i).iter().any(|e| !e.is_zero())).count()
}

pub fn smith_normal_form(a: &Matrix) -> Result<Snf> {
    let ring = a.ring();
    if let RingKind::Modular(_) = ring.kind() {
        let Snf { d, u, v } = smith_normal_form(&a.lift_to_integers())?;
        return Ok(Snf { d: d.reduce_into(ring), u: u.reduce_into(ring), v: v.reduce_into(ring) });
    }
    require_euclidean(ring, "smith_normal_form")?;

    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(ring, rows);
    let mut v = Matrix::identity(ring, cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let e = d.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| norm(ring, e) < norm(ring, d.get(bi, bj))) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Ok(Snf { d, u, v });
            };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut clean = true;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = ring.euclid_divmod(d.get(i, t), d.get(t, t))?;
                let neg_q = -q;
                d.add_row_multiple(i, t, &neg_q);
                u.add_row_multiple(i, t, &neg_q);
                clean &= r.is_zero();
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = ring.euclid_divmod(d.get(t, j), d.get(t, t))?;
                let neg_q = -q;
                d.add_col_multiple(j, t, &neg_q);
                v.add_col_multiple(j, t, &neg_q);
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide everything left in the submatrix
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !ring.euclid_divmod(d.get(i, j), &pivot).unwrap().1.is_zero()));
            match offender {
                Some(i) => {
                    let one = ring.one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        let unit = ring.normalizing_unit(d.get(t, t));
        d.scale_row(t, &unit);
        u.scale_row(t, &unit);
    }
    Ok(Snf { d, u, v })
}

/// Generators of the kernel of `a`, canonicalized by a Hermite normal form
/// of the generator rows.
pub fn kernel_basis(a: &Matrix) -> Result<KernelModule> {
    let ring = a.ring();
    let cols = a.cols();
    if let RingKind::Modular(m) = ring.kind() {
        // A x = m y over Z, i.e. the kernel of [A | -m I]
        let lifted = a.lift_to_integers();
        let z = Ring::integers();
        let neg_m = Matrix::identity(z, a.rows()).scale(&z.from_i64(-(m as i64)));
        let aug = lifted.hstack(&neg_m)?;
        let full = kernel_basis(&aug)?;
        let projected: Vec<Vec<Elem>> = full.basis.iter().map(|v| v[..cols].to_vec()).collect();
        let canon = canonical_rows(z, cols, projected)?;
        let mut basis: Vec<Vec<Elem>> = Vec::new();
        for row in canon {
            let reduced: Vec<Elem> = row.iter().map(|e| ring.from_bigint(&e.to_bigint().unwrap())).collect();
            if reduced.iter().any(|e| !e.is_zero()) && !basis.contains(&reduced) {
                basis.push(reduced);
            }
        }
        return Ok(KernelModule { ring, ambient_dim: cols, basis, defining: a.clone() });
    }
    require_euclidean(ring, "kernel_basis")?;

    let Hnf { h, u } = hermite_normal_form(&a.transpose())?;
    let rank = echelon_rank(&h);
    let raw: Vec<Vec<Elem>> = (rank..cols).map(|i| u.row(i).to_vec()).collect();
    let basis = canonical_rows(ring, cols, raw)?;
    let km = KernelModule { ring, ambient_dim: cols, basis, defining: a.clone() };
    debug_assert!(km.basis.iter().all(|v| km.contains(v)));
    Ok(km)
}

/// Nonzero rows of the Hermite normal form of the given row vectors.
fn canonical_rows(ring: Ring, dim: usize, rows: Vec<Vec<Elem>>) -> Result<Vec<Vec<Elem>>> {
    if rows.is_empty() {
        return Ok(rows);
    }
    let m = Matrix::from_rows(ring, rows)?;
    debug_assert_eq!(m.cols(), dim);
    let h = hermite_normal_form(&m)?.h;
    Ok((0..echelon_rank(&h)).map(|i| h.row(i).to_vec()).collect())
}

/// Rank over the fraction field, read off a Hermite normal form.
pub fn rank(a: &Matrix) -> Result<usize> {
    Ok(echelon_rank(&hermite_normal_form(a)?.h))
}

/// Up to `count` pairwise-distinct nonzero kernel vectors of `a`, in the
/// order of the coefficient enumeration over the kernel basis.
pub fn solution_stream(a: &Matrix, count: usize) -> Result<SolutionStream> {
    Ok(SolutionStream::new(kernel_basis(a)?).limit(count))
}

/// Functionals `phi` on `R^dim` (as row vectors) with `phi(u_i) = 0` for
/// every constraint `u_i`: the kernel of the matrix whose rows are the
/// `u_i`.
pub fn annihilating_functionals(
    ring: Ring,
    dim: usize,
    constraints: &[Vec<Elem>],
    count: usize,
) -> Result<SolutionStream> {
    if constraints.iter().any(|u| u.len() != dim) {
        return Err(Error::Dimension(format!("constraint vectors must have length {dim}")));
    }
    let a = if constraints.is_empty() {
        Matrix::zeros(ring, 0, dim)
    } else {
        Matrix::from_rows(ring, constraints.to_vec())?
    };
    solution_stream(&a, count)
}

/// For a map `f = (a b) : R^2 -> R` over any commutative domain, the family
/// `c * (b, -a)`, `c` ranging over the ring, lies in `ker f`. When `a = b =
/// 0` every vector is in the kernel and the whole of `R^2` is streamed.
/// This needs no kernel algorithm, so it also covers `Z[x]`.
pub fn two_rigidity_witnesses(f: &Matrix, count: usize) -> Result<SolutionStream> {
    if f.rows() != 1 || f.cols() != 2 {
        return Err(Error::Dimension(format!("expected a 1x2 map, got {}x{}", f.rows(), f.cols())));
    }
    let ring = f.ring();
    let (a, b) = (f.get(0, 0), f.get(0, 1));
    let generators =
        if a.is_zero() && b.is_zero() { Matrix::identity(ring, 2).to_rows() } else { vec![vec![b.clone(), -a]] };
    Ok(SolutionStream::from_generators(ring, 2, generators, f.clone()).limit(count))
}
