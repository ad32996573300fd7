use std::collections::{BTreeMap, HashSet};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{run_trials, unsupported, Outcome, SuiteParams, Trial};
use crate::error::Result;
use crate::groups::{
    a_prime_sign, elementary_matrix, embed_stabilize, form_matrix, preserves_form, sigma, stabilizer_root_generators,
    unitary_generator, BilinearForm, FormKind, GeneratorWord, GroupKind,
};
use crate::matrix::Matrix;
use crate::normal_forms::kernel_basis;
use crate::ring::{dot, Elem, Ring};
use crate::witnesses::{
    complement_module, conjugate_in_q, intersection_witnesses, isotropic_pair_in_complement,
    random_intersection_element, stabilizer_check, t_a_witnesses, transvection, transvection_fixes_constraints,
    transvection_short, unit_vector, StabilizerContext, TphiWitness,
};

fn require_kernels(suite: &'static str, ring: Ring) -> Result<()> {
    if ring.is_euclidean() || ring.is_finite() {
        Ok(())
    } else {
        Err(unsupported(suite, ring))
    }
}

fn words_text(words: &[GeneratorWord]) -> String {
    let parts: Vec<String> = words.iter().map(|w| format!("[{w}]")).collect();
    parts.join(" ")
}

/// `k = n - 2` random conjugator words for `E_n`, then the context.
fn ke_context(
    ring: Ring,
    n: usize,
    rng: &mut ChaCha8Rng,
    max_len: usize,
    bound: u64,
) -> Result<(Vec<GeneratorWord>, StabilizerContext)> {
    let words = (0..n - 2)
        .map(|_| GeneratorWord::random(ring, GroupKind::Elementary, n, rng, max_len, bound))
        .collect::<Result<Vec<_>>>()?;
    let ctx = if words.is_empty() {
        StabilizerContext::elementary(ring, n, vec![])?
    } else {
        StabilizerContext::from_words(&words)?
    };
    Ok((words, ctx))
}

/// Checks the `T_phi` shape and `phi(u_i) = 0`.
fn check_t_phi(trial: &mut Trial, input: &str, w: &TphiWitness, constraints: &[Vec<Elem>]) {
    let n = w.matrix.rows();
    let lower_identity = w
        .matrix
        .block(1, 0, n - 1, n)
        .to_rows()
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, e)| if j == i + 1 { e.is_one() } else { e.is_zero() }));
    let top_matches = w.matrix.get(0, 0).is_one() && w.matrix.row(0)[1..] == w.phi[..];
    trial.check(lower_identity && top_matches, || input.to_string(), "(1 e_phi; 0 I)", || w.matrix.to_string());
    for u in constraints {
        let value = dot(&w.phi, u);
        trial.check(value.is_zero(), || format!("{input}, u = {u:?}"), "phi(u) = 0", || value.to_string());
    }
}

struct KeParams {
    n: usize,
    trials: usize,
    count: usize,
    max_len: usize,
    bound: u64,
}

fn ke_params(params: &SuiteParams, out: &mut Outcome) -> KeParams {
    let p = KeParams {
        n: params.n.unwrap_or(3).max(2),
        trials: params.trials.unwrap_or(20),
        count: params.count.unwrap_or(50),
        max_len: params.max_len.unwrap_or(6),
        bound: params.bound.unwrap_or(3),
    };
    out.param("n", p.n);
    out.param("trials", p.trials);
    out.param("count", p.count);
    out.param("max_len", p.max_len);
    out.param("bound", p.bound);
    out.param("conjugators", p.n - 2);
    p
}

/// Witnesses of one lemma-ke trial, checked independently of the stream's
/// own verification.
fn ke_trial(
    ring: Ring,
    p: &KeParams,
    rng: &mut ChaCha8Rng,
    trial: &mut Trial,
) -> Option<(StabilizerContext, Vec<TphiWitness>)> {
    let (words, ctx) = match ke_context(ring, p.n, rng, p.max_len, p.bound) {
        Ok(x) => x,
        Err(e) => {
            trial.fail("random conjugators", "a context", e.to_string());
            return None;
        }
    };
    let input = format!("n = {}, conjugators {}", p.n, words_text(&words));
    let found: Result<Vec<TphiWitness>> = intersection_witnesses(&ctx, p.count).and_then(|s| s.collect());
    let found = match found {
        Ok(f) => f,
        Err(e) => {
            trial.fail(input, "verified witnesses", e.to_string());
            return None;
        }
    };
    let distinct = found.iter().collect::<HashSet<_>>().len();
    if !ring.is_finite() {
        trial.check(
            distinct >= p.count,
            || input.clone(),
            &format!(">= {} distinct witnesses", p.count),
            || distinct.to_string(),
        );
    }
    trial.check(
        distinct == found.len(),
        || input.clone(),
        "pairwise distinct",
        || format!("{distinct} of {}", found.len()),
    );
    let e1 = unit_vector(ring, p.n, 0);
    let inverses: Vec<(Matrix, Matrix)> =
        words.iter().map(|w| (w.evaluate().unwrap(), w.inverse().evaluate().unwrap())).collect();
    let constraints = ctx.constraint_vectors();
    for w in &found {
        check_t_phi(trial, &input, w, &constraints);
        for (i, (g, g_inv)) in inverses.iter().enumerate() {
            let moved = g_inv.mul(&w.matrix).and_then(|m| m.mul(g)).map(|m| m.column(0));
            trial.check(
                moved.as_ref() == Ok(&e1),
                || format!("{input}, T = {}", w.matrix),
                &format!("g{}^-1 T g{} e1 = e1", i + 1, i + 1),
                || format!("{moved:?}"),
            );
        }
    }
    trial.metric("witnesses", distinct as u64);
    Some((ctx, found))
}

pub(super) fn lemma_ke(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    require_kernels("lemma-ke", ring)?;
    let mut out = Outcome::default();
    let p = ke_params(params, &mut out);
    let results = run_trials(params.seed, p.trials, |t, rng| {
        let mut trial = Trial::default();
        if let Some((ctx, found)) = ke_trial(ring, &p, rng, &mut trial) {
            if t < 2 {
                trial.samples.push(json!({
                    "conjugators": ctx.conjugators(),
                    "constraints": ctx.constraint_vectors(),
                    "witnesses": found.iter().take(3).map(|w| &w.matrix).collect::<Vec<_>>(),
                }));
            }
        }
        trial
    });
    out.absorb(results);
    Ok(out)
}

pub(super) fn lemma_new(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    require_kernels("lemma-new", ring)?;
    let mut out = Outcome::default();
    let p = ke_params(params, &mut out);
    let per_trial = params.samples.unwrap_or(10);
    out.param("conjugators_q_per_trial", per_trial);
    let results = run_trials(params.seed, p.trials, |t, rng| {
        let mut trial = Trial::default();
        // Contexts and witnesses are drawn exactly as in lemma-ke.
        let Some((ctx, found)) = ke_trial(ring, &p, rng, &mut trial) else {
            return trial;
        };
        let constraints = ctx.constraint_vectors();
        let mut conjugations = 0;
        for _ in 0..per_trial {
            let q = match random_intersection_element(&ctx, rng, 2, 2) {
                Ok(q) => q,
                Err(e) => {
                    trial.fail("random element of the intersection", "a matrix", e.to_string());
                    continue;
                }
            };
            let q_inv = match q.inverse() {
                Ok(q) => q,
                Err(e) => {
                    trial.fail(format!("q = {q}"), "invertible q", e.to_string());
                    continue;
                }
            };
            trial.check(stabilizer_check(&q), || format!("q = {q}"), "q e1 = e1", || q.column(0).len().to_string());
            for w in &found {
                let input = format!("T = {}, q = {q}", w.matrix);
                match conjugate_in_q(w, &q, &ctx) {
                    Ok(c) => {
                        check_t_phi(&mut trial, &input, &c, &constraints);
                        let direct = q_inv.mul(&w.matrix).and_then(|m| m.mul(&q));
                        trial.check(
                            direct.as_ref() == Ok(&c.matrix),
                            || input.clone(),
                            "q^-1 T q = T_psi",
                            || format!("{direct:?}"),
                        );
                        conjugations += 1;
                    }
                    Err(e) => trial.fail(input, "a conjugate in T", e.to_string()),
                }
            }
            if t == 0 && trial.samples.is_empty() {
                trial.samples.push(json!({"q": q, "constraints": constraints}));
            }
        }
        trial.metric("conjugations", conjugations);
        trial
    });
    out.absorb(results);
    Ok(out)
}

pub(super) fn forms_generators(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    let ns: Vec<usize> = match params.n {
        Some(n) => vec![n.max(2)],
        None => vec![2, 3],
    };
    let trials = params.trials.unwrap_or(100);
    let max_len = params.max_len.unwrap_or(8);
    let bound = params.bound.unwrap_or(3);
    let mut out = Outcome::default();
    out.param("n", &ns);
    out.param("parameters", [1, -1, 2]);
    out.param("trials", trials);
    out.param("max_len", max_len);
    out.param("bound", bound);

    let mut exhaustive = Trial::default();
    let mut checked = 0;
    for &n in &ns {
        let forms = [form_matrix(ring, n, FormKind::Symplectic)?, form_matrix(ring, n, FormKind::Orthogonal)?];
        for form in &forms {
            let kind = form.kind();
            for i in 1..=2 * n {
                for j in (1..=2 * n).filter(|&j| j != i) {
                    for a in [1, -1, 2] {
                        let a_elem = ring.from_i64(a);
                        let input = || format!("{kind} n = {n}, rho_({i},{j})({a})");
                        if kind == FormKind::Orthogonal && j == sigma(n, i) {
                            let mut m = Matrix::identity(ring, 2 * n);
                            m.set(i - 1, j - 1, a_elem.clone());
                            let preserves = preserves_form(&m, form)?;
                            let two_a_zero = (&a_elem + &a_elem).is_zero();
                            exhaustive.check(
                                preserves == two_a_zero,
                                input,
                                "I + aE_(i,sigma i) preserves psi iff 2a = 0",
                                || format!("preserves = {preserves}"),
                            );
                            let rejected = unitary_generator(ring, n, kind, i, j, &a_elem).is_err();
                            exhaustive.check(rejected, input, "long root rejected for the orthogonal form", || {
                                "accepted".into()
                            });
                        } else {
                            let g = unitary_generator(ring, n, kind, i, j, &a_elem)?;
                            exhaustive.check(preserves_form(&g, form)?, input, "preserves the form", || g.to_string());
                            if j != sigma(n, i) {
                                let sign = a_prime_sign(n, kind.epsilon(), i, j);
                                let expected = -(&ring.from_i64(sign) * &a_elem);
                                let got = g.get(sigma(n, j) - 1, sigma(n, i) - 1).clone();
                                exhaustive.check(
                                    got == expected,
                                    input,
                                    &format!("entry (sigma j, sigma i) = {expected}"),
                                    || got.to_string(),
                                );
                            }
                        }
                        checked += 1;
                    }
                }
            }
        }
        for k in 1..=2 * n {
            exhaustive.check(
                sigma(n, sigma(n, k)) == k,
                || format!("sigma on {k}, n = {n}"),
                "involution",
                || "not".into(),
            );
        }
    }
    exhaustive.metric("generators_checked", checked);

    let groups = [GroupKind::Elementary, GroupKind::Symplectic, GroupKind::Orthogonal];
    let results = run_trials(params.seed, trials, |t, rng| {
        let mut trial = Trial::default();
        let group = groups[t % 3];
        let n = ns[(t / 3) % ns.len()];
        let w = match GeneratorWord::random(ring, group, n, rng, max_len, bound) {
            Ok(w) => w,
            Err(e) => {
                trial.fail(format!("random {group} word, n = {n}"), "a word", e.to_string());
                return trial;
            }
        };
        let input = || format!("{group} n = {n}: {w}");
        let m = w.evaluate().unwrap();
        let back = m.mul(&w.inverse().evaluate().unwrap()).unwrap();
        trial.check(back.is_identity(), input, "w * w^-1 = I", || back.to_string());
        match group.form() {
            None => {
                let det = m.determinant().unwrap();
                trial.check(det.is_one(), input, "det = 1", || det.to_string());
            }
            Some(kind) => {
                let form = form_matrix(ring, n, kind).unwrap();
                let big = form_matrix(ring, n + 1, kind).unwrap();
                trial.check(preserves_form(&m, &form).unwrap(), input, "preserves the form", || m.to_string());
                let e = embed_stabilize(&m).unwrap();
                trial.check(preserves_form(&e, &big).unwrap(), input, "embedding preserves the larger form", || {
                    e.to_string()
                });
                let tok = &w.tokens()[0];
                let (a, b) = (ring.sample(rng, bound), ring.sample(rng, bound));
                let ga = unitary_generator(ring, n, kind, tok.i, tok.j, &a).unwrap();
                let gb = unitary_generator(ring, n, kind, tok.i, tok.j, &b).unwrap();
                let gab = unitary_generator(ring, n, kind, tok.i, tok.j, &(&a + &b)).unwrap();
                trial.check(
                    ga.mul(&gb).unwrap() == gab,
                    || format!("rho_({},{}) at {a}, {b}", tok.i, tok.j),
                    "rho(a) rho(b) = rho(a+b)",
                    || "differs".into(),
                );
            }
        }
        if t < 3 {
            trial.samples.push(json!({"group": group.name(), "word": w.to_string(), "matrix": m}));
        }
        trial
    });
    out.absorb(vec![exhaustive]);
    out.absorb(results);
    Ok(out)
}

fn random_form_word(
    ring: Ring,
    group: GroupKind,
    n: usize,
    rng: &mut ChaCha8Rng,
    bound: u64,
) -> Result<(GeneratorWord, Matrix, Matrix)> {
    let w = GeneratorWord::random(ring, group, n, rng, 6, bound)?;
    let (m, inv) = (w.evaluate()?, w.inverse().evaluate()?);
    Ok((w, m, inv))
}

fn random_nonzero_combination(
    ring: Ring,
    vectors: &[Vec<Elem>],
    basis: &[Vec<Elem>],
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Elem>> {
    let dim = vectors.first()?.len();
    for _ in 0..20 {
        let coeffs: Vec<Elem> = basis.iter().fold(vec![ring.zero(); vectors.len()], |acc, b| {
            let c = ring.sample(rng, 2);
            acc.iter().zip(b).map(|(x, y)| x + &(&c * y)).collect()
        });
        let v: Vec<Elem> =
            (0..dim).map(|k| vectors.iter().zip(&coeffs).fold(ring.zero(), |s, (w, c)| &s + &(c * &w[k]))).collect();
        if v.iter().any(|e| !e.is_zero()) {
            return Some(v);
        }
    }
    None
}

pub(super) fn transvections(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    require_kernels("transvections", ring)?;
    let trials = params.trials.unwrap_or(100);
    let bound = params.bound.unwrap_or(2);
    let configs: Vec<(GroupKind, usize)> = match (params.group, params.n) {
        (Some(GroupKind::Elementary), _) => return Err(unsupported("transvections over en", ring)),
        (Some(g), n) => vec![(g, n.unwrap_or(2).max(2))],
        (None, Some(n)) => vec![(GroupKind::Symplectic, n.max(2)), (GroupKind::Orthogonal, n.max(2))],
        (None, None) => vec![
            (GroupKind::Symplectic, 2),
            (GroupKind::Orthogonal, 2),
            (GroupKind::Symplectic, 4),
            (GroupKind::Orthogonal, 4),
        ],
    };
    let mut out = Outcome::default();
    out.param("trials", trials);
    out.param("bound", bound);
    out.param("contexts", configs.iter().map(|(g, n)| format!("{g} n={n}")).collect::<Vec<_>>());
    let results = run_trials(params.seed, trials, |t, rng| {
        let mut trial = Trial::default();
        let (group, n) = configs[t % configs.len()];
        let kind = group.form().unwrap();
        let form = form_matrix(ring, n, kind).unwrap();
        let k = rng.random_range(0..=n - 2);
        let words: Vec<GeneratorWord> =
            (0..k).map(|_| random_form_word(ring, group, n, rng, bound).unwrap().0).collect();
        let ctx = if words.is_empty() {
            StabilizerContext::with_form(form.clone(), vec![]).unwrap()
        } else {
            StabilizerContext::from_words(&words).unwrap()
        };
        let orbit = ctx.orbit_vectors();
        let input = format!("{group} n = {n}, conjugators {}", words_text(&words));
        let (_, h, h_inv) = random_form_word(ring, group, n, rng, bound).unwrap();
        let (u, v) = match isotropic_pair_in_complement(&form, &orbit, &h, &h_inv, rng, 3) {
            Ok(Some(pair)) => pair,
            other => {
                trial.fail(input, "an isotropic pair in C", format!("{other:?}"));
                return trial;
            }
        };
        let input = format!("{input}, u = {u:?}, v = {v:?}");
        let c = complement_module(&form, &orbit).unwrap();
        trial.check(c.contains(&u) && c.contains(&v), || input.clone(), "u, v in C", || "outside C".into());
        let r = ring.sample(rng, 3);
        let tau = transvection(&form, &u, &v).unwrap();
        let short = transvection_short(&form, &v, &r).unwrap();
        trial.check(
            preserves_form(&tau, &form).unwrap(),
            || input.clone(),
            "tau(u,v) preserves the form",
            || tau.to_string(),
        );
        trial.check(
            preserves_form(&short, &form).unwrap(),
            || input.clone(),
            "tau_(v,r) preserves the form",
            || short.to_string(),
        );
        let fixes = transvection_fixes_constraints(&ctx, &u, &v, &r).unwrap();
        trial.check(fixes, || input.clone(), "tau fixes every g_i e1", || "moved".into());

        let (gw, g, g_inv) = random_form_word(ring, group, n, rng, bound).unwrap();
        let lhs = g.mul(&tau).unwrap().mul(&g_inv).unwrap();
        let rhs = transvection(&form, &g.mul_vec(&u).unwrap(), &g.mul_vec(&v).unwrap());
        trial.check(
            rhs.as_ref() == Ok(&lhs),
            || format!("{input}, g = {gw}"),
            "g tau(u,v) g^-1 = tau(gu, gv)",
            || format!("{rhs:?}"),
        );

        // centrality: tau(u0, v0) with u0, v0 in K and C commutes with the
        // transvection tau(u, v), which fixes K pointwise
        let gram: Vec<Vec<Elem>> =
            orbit.iter().map(|wi| orbit.iter().map(|wj| form.pairing(wj, wi).unwrap()).collect()).collect();
        let kc = kernel_basis(&Matrix::from_rows(ring, gram).unwrap()).unwrap();
        if kc.rank() > 0 {
            let u0 = random_nonzero_combination(ring, &orbit, &kc.basis, rng);
            let v0 = random_nonzero_combination(ring, &orbit, &kc.basis, rng);
            if let (Some(u0), Some(v0)) = (u0, v0) {
                let tau0 = transvection(&form, &u0, &v0);
                let neg_v: Vec<Elem> = v.iter().map(|x| -x).collect();
                let inv = transvection(&form, &u, &neg_v).unwrap();
                trial.check(
                    tau.mul(&inv).unwrap().is_identity(),
                    || input.clone(),
                    "tau(u,-v) inverts tau(u,v)",
                    || "no".into(),
                );
                match tau0 {
                    Ok(tau0) => {
                        let conj = tau.mul(&tau0).unwrap().mul(&inv).unwrap();
                        trial.check(
                            conj == tau0,
                            || format!("{input}, u0 = {u0:?}, v0 = {v0:?}"),
                            "tau(u0,v0) centralized",
                            || conj.to_string(),
                        );
                        trial.metric("centrality_checks", 1);
                    }
                    Err(e) => trial.fail(
                        format!("{input}, u0 = {u0:?}, v0 = {v0:?}"),
                        "isotropic pair in K and C",
                        e.to_string(),
                    ),
                }
            }
        }
        trial.metric("transvections", 1);
        if t < 4 {
            trial.samples.push(json!({"context": format!("{group} n={n}"), "u": u, "v": v, "tau": tau}));
        }
        trial
    });
    out.absorb(results);
    Ok(out)
}

pub(super) fn t_a_suite(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    require_kernels("t-a-witnesses", ring)?;
    let configs: Vec<(GroupKind, usize)> = match params.group {
        Some(GroupKind::Elementary) => return Err(unsupported("t-a-witnesses over en", ring)),
        Some(g @ GroupKind::Symplectic) => vec![(g, params.n.unwrap_or(2))],
        Some(g @ GroupKind::Orthogonal) => vec![(g, params.n.unwrap_or(4))],
        None => vec![(GroupKind::Symplectic, params.n.unwrap_or(2)), (GroupKind::Orthogonal, params.n.unwrap_or(4))],
    };
    if configs.iter().any(|&(g, n)| n < 1 || (g == GroupKind::Orthogonal && n < 2)) {
        return Err(unsupported("t-a-witnesses with this n", ring));
    }
    let per_config = params.trials.unwrap_or(20);
    let count = params.count.unwrap_or(50);
    let bound = params.bound.unwrap_or(3);
    let mut out = Outcome::default();
    out.param("trials_per_context", per_config);
    out.param("count", count);
    out.param("bound", bound);
    out.param("contexts", configs.iter().map(|(g, n)| format!("{g} n={n}")).collect::<Vec<_>>());
    let warnings: Vec<String> = configs
        .iter()
        .filter(|&&(g, n)| g == GroupKind::Orthogonal && n < 4)
        .map(|(_, n)| format!("orthogonal t_A family with n = {n} < 4"))
        .collect();
    if !warnings.is_empty() {
        out.extra("warnings", warnings);
    }
    let results = run_trials(params.seed, per_config * configs.len(), |t, rng| {
        let mut trial = Trial::default();
        let (group, n) = configs[t / per_config];
        let form = form_matrix(ring, n, group.form().unwrap()).unwrap();
        let (w, g, _) = random_form_word(ring, group, n, rng, bound).unwrap();
        let input = format!("{group} n = {n}, g = {w}");
        let ctx = StabilizerContext::from_words(std::slice::from_ref(&w)).unwrap();
        let found: Result<Vec<Matrix>> = t_a_witnesses(&ctx, &g, count).and_then(|s| s.collect());
        let found = match found {
            Ok(f) => f,
            Err(e) => {
                trial.fail(input, "verified t_A", e.to_string());
                return trial;
            }
        };
        let distinct = found.iter().collect::<HashSet<_>>().len();
        if !ring.is_finite() {
            trial.check(
                distinct >= count,
                || input.clone(),
                &format!(">= {count} distinct t_A"),
                || distinct.to_string(),
            );
        }
        let target = g.column(0);
        for ta in &found {
            check_t_a_shape(&mut trial, &input, ta, &form);
            let fixed = ta.mul_vec(&target).unwrap();
            trial.check(fixed == target, || format!("{input}, t_A = {ta}"), "t_A g e1 = g e1", || format!("{fixed:?}"));
            trial.check(
                preserves_form(ta, &form).unwrap(),
                || format!("{input}, t_A = {ta}"),
                "preserves the form",
                || "does not".into(),
            );
        }
        trial.metric("witnesses", distinct as u64);
        if t % per_config == 0 {
            trial.samples.push(json!({"context": format!("{group} n={n}"), "g": w.to_string(), "t_a": found.iter().take(2).collect::<Vec<_>>()}));
        }
        trial
    });
    out.absorb(results);
    Ok(out)
}

fn check_t_a_shape(trial: &mut Trial, input: &str, ta: &Matrix, form: &BilinearForm) {
    let n = form.half_rank();
    let ring = form.ring();
    let id = Matrix::identity(ring, n);
    let blocks_ok = ta.block(0, 0, n, n) == id && ta.block(n, n, n, n) == id && ta.block(n, 0, n, n).is_zero();
    let a = ta.block(0, n, n, n);
    let sign = ring.from_i64(-form.epsilon());
    let symmetry_ok = (0..n).all(|i| (0..n).all(|j| *a.get(j, i) == a.get(i, j) * &sign))
        && (form.kind() == FormKind::Symplectic || (0..n).all(|i| a.get(i, i).is_zero()));
    trial.check(
        blocks_ok && symmetry_ok,
        || format!("{input}, t_A = {ta}"),
        "(I A; 0 I) with admissible A",
        || "wrong shape".into(),
    );
}

/// Generators of the candidate abelian normal subgroup of the stabilizer:
/// `e_1j(a)` for `E_n`, `rho_1i(a)` for the form groups.
fn s_generators(ring: Ring, group: GroupKind, n: usize, a: &Elem) -> Result<Vec<(String, Matrix)>> {
    match group.form() {
        None => (2..=n).map(|j| Ok((format!("e_(1,{j})({a})"), elementary_matrix(ring, n, 1, j, a)?))).collect(),
        Some(kind) => Ok(stabilizer_root_generators(ring, n, kind, a)?
            .into_iter()
            .map(|(i, m)| (format!("rho_(1,{i})({a})"), m))
            .collect()),
    }
}

pub(super) fn abelian_s(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    let groups: Vec<GroupKind> = match params.group {
        Some(g) => vec![g],
        None => vec![GroupKind::Elementary, GroupKind::Symplectic, GroupKind::Orthogonal],
    };
    let ns: Vec<usize> = match params.n {
        Some(n) => vec![n],
        None => vec![2, 3, 4],
    };
    let mut out = Outcome::default();
    out.param("groups", groups.iter().map(|g| g.name()).collect::<Vec<_>>());
    out.param("n", &ns);
    out.param("parameters", [1, -1, 2]);
    let params_list: Vec<Elem> = [1, -1, 2].iter().map(|&a| ring.from_i64(a)).collect();
    let mut per_group: BTreeMap<&str, &str> = BTreeMap::new();
    let mut central = BTreeMap::new();
    let mut trials = Vec::new();
    for &group in &groups {
        let mut group_ok = true;
        let mut commutators_central = true;
        for &n in &ns {
            let mut trial = Trial::default();
            if group == GroupKind::Elementary && n < 2 || group == GroupKind::Orthogonal && n < 2 {
                continue;
            }
            let gens: Vec<(String, Matrix)> = params_list
                .iter()
                .map(|a| s_generators(ring, group, n, a))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            let mut pairs = 0;
            let mut noncommuting = 0;
            for (x, (lx, mx)) in gens.iter().enumerate() {
                for (ly, my) in &gens[x + 1..] {
                    pairs += 1;
                    let xy = mx.mul(my)?;
                    let yx = my.mul(mx)?;
                    if xy == yx {
                        continue;
                    }
                    noncommuting += 1;
                    group_ok = false;
                    // the commutator x y x^-1 y^-1, with inverses from the
                    // negated parameters, and whether it is central in S
                    let comm = xy.mul(&mx.inverse()?)?.mul(&my.inverse()?)?;
                    let is_central = gens.iter().all(|(_, g)| g.mul(&comm).ok() == comm.mul(g).ok());
                    commutators_central &= is_central;
                    trial.fail(
                        format!("{group} n = {n}: {lx}, {ly}"),
                        "xy = yx",
                        format!("commutator {comm} (central in S: {is_central})"),
                    );
                }
            }
            trial.metric("pairs_checked", pairs);
            trial.metric("noncommuting_pairs", noncommuting);
            trials.push(trial);
        }
        per_group.insert(group.name(), if group_ok { "pass" } else { "fail" });
        central.insert(group.name(), commutators_central);
    }
    out.extra("per_group", per_group);
    out.extra("commutators_central", central);
    out.absorb(trials);
    Ok(out)
}
