use rand::Rng;

use super::StabilizerContext;
use crate::error::{Error, Result};
use crate::groups::{BilinearForm, FormKind};
use crate::matrix::Matrix;
use crate::normal_forms::{kernel_basis, KernelModule};
use crate::ring::Elem;

/// `C = {v : <v, w> = 0 for every w in vectors}`, the kernel of the rows
/// `w^T G`.
pub fn complement_module(form: &BilinearForm, vectors: &[Vec<Elem>]) -> Result<KernelModule> {
    let rows = vectors.iter().map(|w| form.functional(w)).collect::<Result<Vec<_>>>()?;
    let a =
        if rows.is_empty() { Matrix::zeros(form.ring(), 0, form.dim()) } else { Matrix::from_rows(form.ring(), rows)? };
    kernel_basis(&a)
}

/// The column `x` times the row `y`.
fn outer(x: &[Elem], y: &[Elem]) -> Result<Matrix> {
    let ring = x.first().map(Elem::ring).or_else(|| y.first().map(Elem::ring));
    let ring = ring.ok_or_else(|| Error::Dimension("empty vectors".into()))?;
    Matrix::column_vector(ring, x)?.mul(&Matrix::row_vector(ring, y)?)
}

fn require_isotropic(form: &BilinearForm, pairs: &[(&[Elem], &[Elem], &str)]) -> Result<()> {
    for (x, y, label) in pairs {
        let p = form.pairing(x, y)?;
        if !p.is_zero() {
            return Err(Error::NotIsotropic(format!("{label} = {p}")));
        }
    }
    Ok(())
}

/// `tau(u, v): x -> x + eps u <v, x> - v <u, x>`, i.e.
/// `I + eps u (v^T G) - v (u^T G)`, for isotropic, orthogonal `u`, `v`.
pub fn transvection(form: &BilinearForm, u: &[Elem], v: &[Elem]) -> Result<Matrix> {
    require_isotropic(form, &[(u, u, "<u,u>"), (u, v, "<u,v>"), (v, v, "<v,v>")])?;
    let ring = form.ring();
    let eps = ring.from_i64(form.epsilon());
    let plus = outer(u, &form.functional(v)?)?.scale(&eps);
    let minus = outer(v, &form.functional(u)?)?;
    Matrix::identity(ring, form.dim()).add(&plus)?.sub(&minus)
}

/// `tau_{v,r}: x -> x - r v <v, x>` in the symplectic case and the identity
/// in the orthogonal case; `v` must be isotropic.
pub fn transvection_short(form: &BilinearForm, v: &[Elem], r: &Elem) -> Result<Matrix> {
    require_isotropic(form, &[(v, v, "<v,v>")])?;
    form.ring().check(r)?;
    let id = Matrix::identity(form.ring(), form.dim());
    match form.kind() {
        FormKind::Orthogonal => Ok(id),
        FormKind::Symplectic => id.sub(&outer(v, &form.functional(v)?)?.scale(r)),
    }
}

/// Checks `tau(u, v) w = w` and `tau_{v,r} w = w` for every orbit vector
/// `w = g_i e_1` (`i = 0..k`) of a form context, with `u`, `v` in the
/// complement module.
pub fn transvection_fixes_constraints(ctx: &StabilizerContext, u: &[Elem], v: &[Elem], r: &Elem) -> Result<bool> {
    let form = ctx
        .form()
        .ok_or_else(|| Error::InvalidParam { name: "context".into(), reason: "transvections need a form".into() })?;
    let tau = transvection(form, u, v)?;
    let short = transvection_short(form, v, r)?;
    for w in ctx.orbit_vectors() {
        if tau.mul_vec(&w)? != w || short.mul_vec(&w)? != w {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A random pair `u, v` in the complement of `constraints` that is
/// isotropic and mutually orthogonal: with `h` form-preserving, solve for
/// `u', v'` in the Lagrangian `span(e_1..e_n)` orthogonal to every
/// `h^{-1} w`, and return `(h u', h v')`. `None` when that solution module
/// is zero.
pub fn isotropic_pair_in_complement<R: Rng + ?Sized>(
    form: &BilinearForm,
    constraints: &[Vec<Elem>],
    h: &Matrix,
    h_inv: &Matrix,
    rng: &mut R,
    bound: u64,
) -> Result<Option<(Vec<Elem>, Vec<Elem>)>> {
    let ring = form.ring();
    let n = form.half_rank();
    // <(c, 0), x> = c . (G x)[0..n]
    let rows = constraints
        .iter()
        .map(|w| Ok(form.gram().mul_vec(&h_inv.mul_vec(w)?)?[..n].to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let a = if rows.is_empty() { Matrix::zeros(ring, 0, n) } else { Matrix::from_rows(ring, rows)? };
    let module = kernel_basis(&a)?;
    if module.rank() == 0 {
        return Ok(None);
    }
    let bound = bound.max(1);
    let mut pick = || -> Result<Vec<Elem>> {
        loop {
            let coeffs: Vec<Elem> = module.basis.iter().map(|_| ring.sample(rng, bound)).collect();
            let c = module.combine(&coeffs);
            if c.iter().any(|e| !e.is_zero()) {
                let mut full = c;
                full.extend(std::iter::repeat_n(ring.zero(), n));
                return h.mul_vec(&full);
            }
        }
    };
    let u = pick()?;
    let v = pick()?;
    Ok(Some((u, v)))
}
