use super::StabilizerContext;
use crate::error::{Error, Result};
use crate::groups::{preserves_form, unitary_generator, BilinearForm, FormKind};
use crate::matrix::Matrix;
use crate::normal_forms::{kernel_basis, KernelModule, SolutionStream};
use crate::ring::Elem;

/// Free entries `(i, j)` (1-based, `i <= j`) of the block `A`: the whole
/// upper triangle for the symplectic form (`A` symmetric), the strict upper
/// triangle for the orthogonal form (`A` antisymmetric, zero diagonal).
pub fn t_a_parameter_pairs(form: &BilinearForm) -> Vec<(usize, usize)> {
    let n = form.half_rank();
    let strict = form.kind() == FormKind::Orthogonal;
    (1..=n).flat_map(|i| ((if strict { i + 1 } else { i })..=n).map(move |j| (i, j))).collect()
}

fn check_params(form: &BilinearForm, params: &[Elem]) -> Result<Vec<(usize, usize)>> {
    let pairs = t_a_parameter_pairs(form);
    if params.len() != pairs.len() {
        return Err(Error::Dimension(format!("{} parameters for {} free entries", params.len(), pairs.len())));
    }
    Ok(pairs)
}

/// `t_A = (I A; 0 I)` with `A` filled from the free entries.
pub fn t_a_matrix(form: &BilinearForm, params: &[Elem]) -> Result<Matrix> {
    let pairs = check_params(form, params)?;
    let n = form.half_rank();
    let mut m = Matrix::identity(form.ring(), 2 * n);
    for (&(i, j), a) in pairs.iter().zip(params) {
        m.set(i - 1, n + j - 1, a.clone());
        if i != j {
            let mirror = match form.kind() {
                FormKind::Symplectic => a.clone(),
                FormKind::Orthogonal => -a,
            };
            m.set(j - 1, n + i - 1, mirror);
        }
    }
    Ok(m)
}

/// `prod rho_{i, n+j}(a_ij)` over the free entries, as a product of
/// generators.
pub fn t_a_product(form: &BilinearForm, params: &[Elem]) -> Result<Matrix> {
    let pairs = check_params(form, params)?;
    let n = form.half_rank();
    let mut m = Matrix::identity(form.ring(), 2 * n);
    for (&(i, j), a) in pairs.iter().zip(params) {
        m = m.mul(&unitary_generator(form.ring(), n, form.kind(), i, n + j, a)?)?;
    }
    Ok(m)
}

/// Verified `t_A` fixing `g e_1` for each target `g`.
#[derive(Clone, Debug)]
pub struct TaWitnesses {
    form: BilinearForm,
    targets: Vec<Vec<Elem>>,
    params: SolutionStream,
    failed: bool,
    /// Set when the orthogonal half-rank is below 4.
    pub warning: Option<String>,
}

impl TaWitnesses {
    /// The vectors `g e_1` that every witness fixes.
    pub fn targets(&self) -> &[Vec<Elem>] {
        &self.targets
    }

    /// Admissible parameter vectors.
    pub fn parameter_module(&self) -> &KernelModule {
        self.params.kernel()
    }
}

impl Iterator for TaWitnesses {
    type Item = Result<Matrix>;

    fn next(&mut self) -> Option<Result<Matrix>> {
        if self.failed {
            return None;
        }
        let p = self.params.next()?;
        let out = t_a_matrix(&self.form, &p).and_then(|t| {
            for target in &self.targets {
                if t.mul_vec(target)? != *target {
                    return Err(Error::VerificationFailed("t_A does not fix g e1".into()));
                }
            }
            if !preserves_form(&t, &self.form)? {
                return Err(Error::NotFormPreserving(self.form.kind().name()));
            }
            Ok(t)
        });
        self.failed = out.is_err();
        Some(out)
    }
}

/// Streams up to `count` distinct `t_A` with `t_A (g e_1) = g e_1`.
///
/// The linear constraint on the free entries is obtained by expanding
/// `t_A (g e_1) - g e_1` on each unit parameter vector; its kernel is then
/// enumerated.
pub fn t_a_witnesses(ctx: &StabilizerContext, g: &Matrix, count: usize) -> Result<TaWitnesses> {
    let form = context_form(ctx)?;
    if !preserves_form(g, &form)? {
        return Err(Error::NotFormPreserving(form.kind().name()));
    }
    t_a_fixing(form, vec![g.column(0)], count)
}

/// `t_A` fixing `g_i e_1` for every conjugator of the context at once.
pub fn t_a_common_witnesses(ctx: &StabilizerContext, count: usize) -> Result<TaWitnesses> {
    let form = context_form(ctx)?;
    for g in ctx.conjugators() {
        if !preserves_form(g, &form)? {
            return Err(Error::NotFormPreserving(form.kind().name()));
        }
    }
    t_a_fixing(form, ctx.first_column_images().to_vec(), count)
}

fn context_form(ctx: &StabilizerContext) -> Result<BilinearForm> {
    Ok(ctx
        .form()
        .ok_or_else(|| Error::InvalidParam { name: "context".into(), reason: "t_A needs a form".into() })?
        .clone())
}

fn t_a_fixing(form: BilinearForm, targets: Vec<Vec<Elem>>, count: usize) -> Result<TaWitnesses> {
    let ring = form.ring();
    let pairs = t_a_parameter_pairs(&form);
    let mut columns = Vec::with_capacity(pairs.len());
    for k in 0..pairs.len() {
        let unit: Vec<Elem> = (0..pairs.len()).map(|i| if i == k { ring.one() } else { ring.zero() }).collect();
        let t = t_a_matrix(&form, &unit)?;
        let mut column = Vec::new();
        for target in &targets {
            let moved = t.mul_vec(target)?;
            column.extend(moved.iter().zip(target).map(|(a, b)| a - b));
        }
        columns.push(column);
    }
    let constraint = if targets.is_empty() || pairs.is_empty() {
        Matrix::zeros(ring, 1, pairs.len())
    } else {
        Matrix::from_rows(ring, columns)?.transpose()
    };
    let warning = (form.kind() == FormKind::Orthogonal && form.half_rank() < 4)
        .then(|| format!("orthogonal t_A family with n = {} < 4", form.half_rank()));
    let params = SolutionStream::new(kernel_basis(&constraint)?).limit(count);
    Ok(TaWitnesses { form, targets, params, failed: false, warning })
}
