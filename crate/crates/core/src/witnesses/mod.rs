//! Witness families for the stabilizer subgroup `Q` of `e_1`: the maps
//! `T_phi`, their conjugates, Eichler transvections and the `t_A` family.
//! Every emitted witness is checked exactly before it is handed out.

mod t_a;
mod transvection;

pub use t_a::{t_a_common_witnesses, t_a_matrix, t_a_parameter_pairs, t_a_product, t_a_witnesses, TaWitnesses};
pub use transvection::{
    complement_module, isotropic_pair_in_complement, transvection, transvection_fixes_constraints, transvection_short,
};

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{preserves_form, BilinearForm, GeneratorWord};
use crate::matrix::Matrix;
use crate::normal_forms::{annihilating_functionals, kernel_basis, KernelModule, SolutionStream};
use crate::ring::{dot, Elem, Ring};

/// Conjugators `g_1..g_k` (with `g_0 = I` implicit), their inverses and the
/// images `g_i e_1`.
#[derive(Clone, Debug)]
pub struct StabilizerContext {
    ring: Ring,
    size: usize,
    form: Option<BilinearForm>,
    conjugators: Vec<Matrix>,
    inverses: Vec<Matrix>,
    first_columns: Vec<Vec<Elem>>,
}

impl StabilizerContext {
    fn build(ring: Ring, size: usize, form: Option<BilinearForm>, pairs: Vec<(Matrix, Matrix)>) -> Result<Self> {
        let mut conjugators = Vec::new();
        let mut inverses = Vec::new();
        for (g, inv) in pairs {
            if g.ring() != ring || inv.ring() != ring {
                return Err(Error::MixedRings(ring.to_string(), g.ring().to_string()));
            }
            if g.rows() != size || g.cols() != size {
                return Err(Error::Dimension(format!(
                    "conjugator is {}x{}, expected {size}x{size}",
                    g.rows(),
                    g.cols()
                )));
            }
            if !g.mul(&inv)?.is_identity() {
                return Err(Error::VerificationFailed("conjugator inverse does not invert".into()));
            }
            if let Some(f) = &form {
                if !preserves_form(&g, f)? {
                    return Err(Error::NotFormPreserving(f.kind().name()));
                }
            }
            conjugators.push(g);
            inverses.push(inv);
        }
        let first_columns = conjugators.iter().map(|g| g.column(0)).collect();
        Ok(StabilizerContext { ring, size, form, conjugators, inverses, first_columns })
    }

    fn with_inverses(ring: Ring, size: usize, form: Option<BilinearForm>, conjugators: Vec<Matrix>) -> Result<Self> {
        let pairs = conjugators
            .into_iter()
            .map(|g| {
                let inv = g.inverse()?;
                Ok((g, inv))
            })
            .collect::<Result<Vec<_>>>()?;
        StabilizerContext::build(ring, size, form, pairs)
    }

    /// A context for `E_n(R)`; every conjugator must be invertible.
    pub fn elementary(ring: Ring, n: usize, conjugators: Vec<Matrix>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParam { name: "n".into(), reason: "need n >= 2".into() });
        }
        StabilizerContext::with_inverses(ring, n, None, conjugators)
    }

    /// A context for a form-preserving group; conjugators must be invertible
    /// and preserve the form.
    pub fn with_form(form: BilinearForm, conjugators: Vec<Matrix>) -> Result<Self> {
        StabilizerContext::with_inverses(form.ring(), form.dim(), Some(form), conjugators)
    }

    /// A context whose conjugators are evaluated words; inverses come from
    /// the inverted words.
    pub fn from_words(words: &[GeneratorWord]) -> Result<Self> {
        let first = words.first().ok_or_else(|| Error::InvalidParam {
            name: "conjugators".into(),
            reason: "from_words needs at least one word".into(),
        })?;
        let (ring, group, n) = (first.ring(), first.group(), first.n());
        let form = group.form().map(|k| BilinearForm::new(ring, n, k)).transpose()?;
        let pairs = words
            .iter()
            .map(|w| {
                if (w.ring(), w.group(), w.n()) != (ring, group, n) {
                    return Err(Error::MalformedWord("conjugator words from different groups".into()));
                }
                Ok((w.evaluate()?, w.inverse().evaluate()?))
            })
            .collect::<Result<Vec<_>>>()?;
        StabilizerContext::build(ring, group.size(n), form, pairs)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Matrix size (`n` for `E_n`, `2n` for forms).
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn form(&self) -> Option<&BilinearForm> {
        self.form.as_ref()
    }

    pub fn conjugators(&self) -> &[Matrix] {
        &self.conjugators
    }

    /// `g_i e_1` for `i = 1..k`.
    pub fn first_column_images(&self) -> &[Vec<Elem>] {
        &self.first_columns
    }

    /// `g_i e_1` for `i = 0..k`, starting with `e_1` itself.
    pub fn orbit_vectors(&self) -> Vec<Vec<Elem>> {
        std::iter::once(unit_vector(self.ring, self.size, 0)).chain(self.first_columns.iter().cloned()).collect()
    }

    /// `u_i = p(g_i e_1)`, the images with the first coordinate dropped.
    pub fn constraint_vectors(&self) -> Vec<Vec<Elem>> {
        self.first_columns.iter().map(|c| c[1..].to_vec()).collect()
    }
}

pub(crate) fn unit_vector(ring: Ring, dim: usize, k: usize) -> Vec<Elem> {
    (0..dim).map(|i| if i == k { ring.one() } else { ring.zero() }).collect()
}

/// Whether `M e_1 = e_1`.
pub fn stabilizer_check(m: &Matrix) -> bool {
    m.is_square() && m.rows() > 0 && m.column(0) == unit_vector(m.ring(), m.rows(), 0)
}

/// `T_phi = (1 e_phi; 0 I)` together with its functional.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TphiWitness {
    pub phi: Vec<Elem>,
    pub matrix: Matrix,
}

/// `T_phi` for a functional on `R^{n-1}`, written as the row vector
/// `(phi(e_2), ..., phi(e_n))`.
pub fn build_t_phi(ring: Ring, n: usize, phi: &[Elem]) -> Result<TphiWitness> {
    if n < 2 {
        return Err(Error::InvalidParam { name: "n".into(), reason: "need n >= 2".into() });
    }
    if phi.len() != n - 1 {
        return Err(Error::Dimension(format!("functional of length {} for n = {n}", phi.len())));
    }
    let mut matrix = Matrix::identity(ring, n);
    for (j, c) in phi.iter().enumerate() {
        ring.check(c)?;
        matrix.set(0, j + 1, c.clone());
    }
    Ok(TphiWitness { phi: phi.to_vec(), matrix })
}

/// Verified `T_phi` witnesses lying in `Q` and every `g_i Q g_i^{-1}`.
#[derive(Clone, Debug)]
pub struct IntersectionWitnesses {
    ctx: StabilizerContext,
    functionals: SolutionStream,
    constraints: Vec<Vec<Elem>>,
    failed: bool,
}

impl IntersectionWitnesses {
    /// The constraint vectors `u_i`.
    pub fn constraints(&self) -> &[Vec<Elem>] {
        &self.constraints
    }

    /// The module `Phi` of admissible functionals.
    pub fn functional_module(&self) -> &KernelModule {
        self.functionals.kernel()
    }

    fn verify(&self, w: &TphiWitness) -> Result<()> {
        let e1 = unit_vector(self.ctx.ring, self.ctx.size, 0);
        if w.matrix.mul_vec(&e1)? != e1 {
            return Err(Error::VerificationFailed("T_phi does not fix e1".into()));
        }
        for (i, (g, inv)) in self.ctx.conjugators.iter().zip(&self.ctx.inverses).enumerate() {
            let image = inv.mul_vec(&w.matrix.mul_vec(&g.mul_vec(&e1)?)?)?;
            if image != e1 {
                return Err(Error::NotInIntersection(i + 1));
            }
        }
        Ok(())
    }
}

impl Iterator for IntersectionWitnesses {
    type Item = Result<TphiWitness>;

    fn next(&mut self) -> Option<Result<TphiWitness>> {
        if self.failed {
            return None;
        }
        let phi = self.functionals.next()?;
        let out = build_t_phi(self.ctx.ring, self.ctx.size, &phi).and_then(|w| {
            self.verify(&w)?;
            Ok(w)
        });
        self.failed = out.is_err();
        Some(out)
    }
}

/// Streams up to `count` distinct verified `T_phi`, `phi` ranging over the
/// functionals with `phi(u_i) = 0`.
pub fn intersection_witnesses(ctx: &StabilizerContext, count: usize) -> Result<IntersectionWitnesses> {
    if ctx.form.is_some() {
        return Err(Error::InvalidParam {
            name: "context".into(),
            reason: "T_phi witnesses live in E_n contexts".into(),
        });
    }
    let constraints = ctx.constraint_vectors();
    let functionals = annihilating_functionals(ctx.ring, ctx.size - 1, &constraints, count)?;
    Ok(IntersectionWitnesses { ctx: ctx.clone(), functionals, constraints, failed: false })
}

/// The blocks `(x, A)` of a matrix `(1 x; 0 A)`.
pub fn q_blocks(q: &Matrix) -> Result<(Vec<Elem>, Matrix)> {
    if !stabilizer_check(q) || q.rows() < 2 {
        return Err(Error::NotStabilizerShape);
    }
    let n = q.rows();
    Ok((q.row(0)[1..].to_vec(), q.block(1, 1, n - 1, n - 1)))
}

/// `q^{-1} T_phi q` for any `q = (1 x; 0 A)` with `A` invertible: the map
/// `T_psi` with `psi = e_phi A`, checked through `q T_psi = T_phi q`.
pub fn conjugate_tphi(w: &TphiWitness, q: &Matrix) -> Result<TphiWitness> {
    let (_, a) = q_blocks(q)?;
    let det = a.determinant()?;
    if q.ring().is_unit(&det).is_none() {
        return Err(Error::NotInvertible { det: det.to_string() });
    }
    let psi = a.transpose().mul_vec(&w.phi)?;
    let out = build_t_phi(q.ring(), q.rows(), &psi)?;
    if q.mul(&out.matrix)? != w.matrix.mul(q)? {
        return Err(Error::VerificationFailed("q^-1 T_phi q differs from T_(phi A)".into()));
    }
    Ok(out)
}

/// Conjugation of a witness by an element `q` of `Q` that also lies in
/// every `g_i Q g_i^{-1}`; the result is checked to annihilate every `u_i`.
pub fn conjugate_in_q(w: &TphiWitness, q: &Matrix, ctx: &StabilizerContext) -> Result<TphiWitness> {
    if q.ring() != ctx.ring {
        return Err(Error::MixedRings(q.ring().to_string(), ctx.ring.to_string()));
    }
    if q.rows() != ctx.size || q.cols() != ctx.size {
        return Err(Error::Dimension(format!("q must be {0}x{0}", ctx.size)));
    }
    q_blocks(q)?;
    for (i, c) in ctx.first_columns.iter().enumerate() {
        if q.mul_vec(c)? != *c {
            return Err(Error::NotInIntersection(i + 1));
        }
    }
    let out = conjugate_tphi(w, q)?;
    for u in ctx.constraint_vectors() {
        if !dot(&out.phi, &u).is_zero() {
            return Err(Error::VerificationFailed(format!("conjugated functional does not annihilate {u:?}")));
        }
    }
    Ok(out)
}

/// A random element of `Q` that fixes every `g_i e_1`: a product of
/// `factors` matrices `(1 x; 0 I + w psi)` with `x, psi` annihilating every
/// `u_i` and `psi(w) = 0`, so `I + w psi` has inverse `I - w psi`.
pub fn random_intersection_element<R: Rng + ?Sized>(
    ctx: &StabilizerContext,
    rng: &mut R,
    factors: usize,
    bound: u64,
) -> Result<Matrix> {
    let ring = ctx.ring;
    let n = ctx.size;
    let constraints = ctx.constraint_vectors();
    let phi_module = if constraints.is_empty() {
        kernel_basis(&Matrix::zeros(ring, 0, n - 1))?
    } else {
        kernel_basis(&Matrix::from_rows(ring, constraints)?)?
    };
    let random_in = |module: &KernelModule, rng: &mut R| -> Vec<Elem> {
        let coeffs: Vec<Elem> = module.basis.iter().map(|_| ring.sample(rng, bound)).collect();
        module.combine(&coeffs)
    };
    let mut q = Matrix::identity(ring, n);
    for _ in 0..factors {
        let x = random_in(&phi_module, rng);
        let psi = random_in(&phi_module, rng);
        let w_module = kernel_basis(&Matrix::row_vector(ring, &psi)?)?;
        let w = random_in(&w_module, rng);
        let mut factor = Matrix::identity(ring, n);
        for j in 0..n - 1 {
            factor.set(0, j + 1, x[j].clone());
            for (k, p) in psi.iter().enumerate() {
                let entry = factor.get(j + 1, k + 1) + &(&w[j] * p);
                factor.set(j + 1, k + 1, entry);
            }
        }
        q = q.mul(&factor)?;
    }
    Ok(q)
}

#[cfg(test)]
mod tests;
