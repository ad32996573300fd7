use super::*;
use crate::groups::{elementary_matrix, form_matrix, sigma, unitary_generator, FormKind, GroupKind};
use crate::ring::Ring;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

fn z() -> Ring {
    Ring::integers()
}

fn ints(v: &[i64]) -> Vec<Elem> {
    v.iter().map(|&k| z().from_i64(k)).collect()
}

fn e(n: usize, i: usize, j: usize, r: i64) -> Matrix {
    elementary_matrix(z(), n, i, j, &z().from_i64(r)).unwrap()
}

type M64 = Vec<Vec<i64>>;

fn mul64(a: &M64, b: &M64) -> M64 {
    (0..a.len()).map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn elem64(n: usize, i: usize, j: usize, r: i64) -> M64 {
    let mut m: M64 = (0..n).map(|a| (0..n).map(|b| i64::from(a == b)).collect()).collect();
    m[i - 1][j - 1] = r;
    m
}

#[test]
fn stabilizer_examples() {
    assert!(stabilizer_check(&Matrix::identity(z(), 3)));
    assert!(stabilizer_check(&e(3, 1, 2, 5)));
    assert!(!stabilizer_check(&e(3, 2, 1, 1)));
    assert!(!stabilizer_check(&Matrix::zeros(z(), 2, 3)));
}

#[test]
fn t_phi_examples() {
    assert!(build_t_phi(z(), 3, &ints(&[0, 0])).unwrap().matrix.is_identity());
    assert_eq!(build_t_phi(z(), 3, &ints(&[0, 4])).unwrap().matrix, e(3, 1, 3, 4));
    assert!(build_t_phi(z(), 3, &ints(&[1])).is_err());
    assert!(build_t_phi(z(), 1, &[]).is_err());
    let a = build_t_phi(z(), 4, &ints(&[1, -2, 3])).unwrap();
    let b = build_t_phi(z(), 4, &ints(&[5, 7, -1])).unwrap();
    assert_eq!(&a.matrix * &b.matrix, build_t_phi(z(), 4, &ints(&[6, 5, 2])).unwrap().matrix);
    assert!(stabilizer_check(&a.matrix));
}

#[test]
fn intersection_example_with_one_conjugator() {
    let ctx = StabilizerContext::elementary(z(), 3, vec![e(3, 2, 1, 1)]).unwrap();
    assert_eq!(ctx.constraint_vectors(), vec![ints(&[1, 0])]);
    let stream = intersection_witnesses(&ctx, 4).unwrap();
    assert_eq!(stream.constraints(), &[ints(&[1, 0])]);
    let out: Vec<TphiWitness> = stream.map(Result::unwrap).collect();
    let cs: Vec<i64> = vec![1, -1, 2, -2];
    assert_eq!(out.len(), 4);
    for (w, c) in out.iter().zip(cs) {
        assert_eq!(w.phi, ints(&[0, c]));
        assert_eq!(w.matrix, e(3, 1, 3, c));
        let chain = mul64(&mul64(&elem64(3, 2, 1, -1), &elem64(3, 1, 3, c)), &elem64(3, 2, 1, 1));
        assert_eq!((0..3).map(|i| chain[i][0]).collect::<Vec<_>>(), vec![1, 0, 0]);
    }
}

#[test]
fn intersection_without_constraints_is_all_of_s() {
    let ctx = StabilizerContext::elementary(z(), 3, vec![Matrix::identity(z(), 3)]).unwrap();
    let out: Vec<TphiWitness> = intersection_witnesses(&ctx, 8).unwrap().map(Result::unwrap).collect();
    assert_eq!(out.len(), 8);
    assert_eq!(out[0].phi, ints(&[0, 1]));
    assert_eq!(out[1].phi, ints(&[1, 0]));
    let ctx = StabilizerContext::elementary(z(), 3, vec![]).unwrap();
    assert_eq!(intersection_witnesses(&ctx, 8).unwrap().count(), 8);
}

#[test]
fn singular_conjugator_rejected() {
    let bad = Matrix::from_ints(z(), &[[2, 0], [0, 1]]);
    assert!(matches!(StabilizerContext::elementary(z(), 2, vec![bad]), Err(Error::NotInvertible { .. })));
}

#[test]
fn intersection_over_a_finite_ring_is_finite() {
    let f5 = Ring::modular(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10 {
        let w = GeneratorWord::random(f5, GroupKind::Elementary, 3, &mut rng, 6, 0).unwrap();
        let ctx = StabilizerContext::from_words(&[w]).unwrap();
        let out: Vec<TphiWitness> = intersection_witnesses(&ctx, usize::MAX).unwrap().map(Result::unwrap).collect();
        // Phi is a subspace of F_5^2 of dimension 1 or 2
        assert!(out.len() == 4 || out.len() == 24, "{}", out.len());
        let u = &ctx.constraint_vectors()[0];
        assert!(out.iter().all(|w| dot(&w.phi, u).is_zero()));
    }
}

#[test]
fn intersection_witnesses_for_n_minus_two_conjugators() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 3..=5 {
        for _ in 0..5 {
            let words: Vec<GeneratorWord> = (0..n - 2)
                .map(|_| GeneratorWord::random(z(), GroupKind::Elementary, n, &mut rng, 6, 3).unwrap())
                .collect();
            let ctx = StabilizerContext::from_words(&words).unwrap();
            let out: Vec<TphiWitness> = intersection_witnesses(&ctx, 50).unwrap().map(Result::unwrap).collect();
            assert_eq!(out.len(), 50);
            assert_eq!(out.iter().collect::<HashSet<_>>().len(), 50);
            for w in &out {
                for g in ctx.conjugators() {
                    let inv = g.inverse().unwrap();
                    assert!(stabilizer_check(&inv.mul(&w.matrix).unwrap().mul(g).unwrap()));
                }
            }
        }
    }
}

#[test]
fn conjugation_examples() {
    let ctx = StabilizerContext::elementary(z(), 3, vec![]).unwrap();
    let w = build_t_phi(z(), 3, &ints(&[2, -5])).unwrap();
    assert_eq!(conjugate_in_q(&w, &Matrix::identity(z(), 3), &ctx).unwrap(), w);
    let shear = Matrix::from_ints(z(), &[[1, 7, -3], [0, 1, 0], [0, 0, 1]]);
    assert_eq!(conjugate_in_q(&w, &shear, &ctx).unwrap().phi, w.phi);

    // q = 1 + A with A = e12(1) e21(-1) e12(1) = [[0,1],[-1,0]]
    let a = e(2, 1, 2, 1).mul(&e(2, 2, 1, -1)).unwrap().mul(&e(2, 1, 2, 1)).unwrap();
    assert_eq!(a, Matrix::from_ints(z(), &[[0, 1], [-1, 0]]));
    let q = Matrix::assemble_block(&Matrix::identity(z(), 1), &Matrix::zeros(z(), 1, 2), &Matrix::zeros(z(), 2, 1), &a)
        .unwrap();
    let out = conjugate_in_q(&w, &q, &ctx).unwrap();
    assert_eq!(out.phi, ints(&[5, 2]));
    let direct = q.inverse().unwrap().mul(&w.matrix).unwrap().mul(&q).unwrap();
    assert_eq!(out.matrix, direct);
}

#[test]
fn conjugation_errors() {
    let ctx = StabilizerContext::elementary(z(), 3, vec![e(3, 2, 1, 1)]).unwrap();
    let w = build_t_phi(z(), 3, &ints(&[0, 1])).unwrap();
    assert_eq!(conjugate_in_q(&w, &e(3, 2, 1, 1), &ctx), Err(Error::NotStabilizerShape));
    // (1 1 0; 0 1 0; 0 0 1) moves g1 e1 = e1 + e2
    assert_eq!(conjugate_in_q(&w, &e(3, 1, 2, 1), &ctx), Err(Error::NotInIntersection(1)));
    let singular = Matrix::from_ints(z(), &[[1, 0, 0], [0, 2, 0], [0, 0, 1]]);
    let free = StabilizerContext::elementary(z(), 3, vec![]).unwrap();
    assert!(matches!(conjugate_in_q(&w, &singular, &free), Err(Error::NotInvertible { .. })));
}

#[test]
fn conjugation_closure_on_random_contexts() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 3..=5 {
        for _ in 0..4 {
            let words: Vec<GeneratorWord> = (0..n - 2)
                .map(|_| GeneratorWord::random(z(), GroupKind::Elementary, n, &mut rng, 6, 3).unwrap())
                .collect();
            let ctx = StabilizerContext::from_words(&words).unwrap();
            let witnesses: Vec<TphiWitness> = intersection_witnesses(&ctx, 10).unwrap().map(Result::unwrap).collect();
            for _ in 0..10 {
                let q = random_intersection_element(&ctx, &mut rng, 2, 2).unwrap();
                assert!(stabilizer_check(&q));
                for c in ctx.first_column_images() {
                    assert_eq!(q.mul_vec(c).unwrap(), *c);
                }
                for w in &witnesses {
                    let out = conjugate_in_q(w, &q, &ctx).unwrap();
                    let direct = q.inverse().unwrap().mul(&w.matrix).unwrap().mul(&q).unwrap();
                    assert_eq!(out.matrix, direct);
                }
            }
        }
    }
}

#[test]
fn complement_examples() {
    let f = form_matrix(z(), 2, FormKind::Symplectic).unwrap();
    let c = complement_module(&f, &[ints(&[1, 0, 0, 0])]).unwrap();
    assert_eq!(c.rank(), 3);
    for v in [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]] {
        assert!(c.contains(&ints(&v)));
    }
    assert!(!c.contains(&ints(&[0, 0, 1, 0])));
    assert!(c.basis.iter().all(|v| v[2].is_zero()));

    let c = complement_module(&f, &[ints(&[1, 0, 0, 0]), ints(&[0, 1, 0, 0])]).unwrap();
    assert_eq!(c.rank(), 2);
    assert!(c.basis.iter().all(|v| v[2].is_zero() && v[3].is_zero()));

    assert_eq!(complement_module(&f, &[]).unwrap().rank(), 4);
}

#[test]
fn transvection_examples() {
    let f = form_matrix(z(), 2, FormKind::Symplectic).unwrap();
    let zero = ints(&[0, 0, 0, 0]);
    let e1 = ints(&[1, 0, 0, 0]);
    assert!(transvection(&f, &zero, &e1).unwrap().is_identity());
    assert!(transvection(&f, &e1, &zero).unwrap().is_identity());

    let short = transvection_short(&f, &e1, &z().one()).unwrap();
    let mut expected = Matrix::identity(z(), 4);
    expected.set(0, 2, z().from_i64(-1));
    assert_eq!(short, expected);
    assert!(preserves_form(&short, &f).unwrap());

    let o = form_matrix(z(), 2, FormKind::Orthogonal).unwrap();
    assert!(transvection_short(&o, &e1, &z().from_i64(3)).unwrap().is_identity());
    let bad = ints(&[1, 0, 1, 0]);
    assert!(matches!(transvection(&o, &bad, &zero), Err(Error::NotIsotropic(_))));
    assert!(matches!(transvection_short(&o, &bad, &z().one()), Err(Error::NotIsotropic(_))));
    // <e1, e3> != 0 in both forms
    assert!(matches!(transvection(&f, &e1, &ints(&[0, 0, 1, 0])), Err(Error::NotIsotropic(_))));

    // u = e1, v = e2 span a Lagrangian; the result moves e3 and e4
    let t = transvection(&o, &e1, &ints(&[0, 1, 0, 0])).unwrap();
    assert!(preserves_form(&t, &o).unwrap());
    assert!(!t.is_identity());
}

#[test]
fn transvections_fix_constraints_and_are_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (group, n) in [(GroupKind::Symplectic, 2), (GroupKind::Orthogonal, 4), (GroupKind::Symplectic, 4)] {
        let kind = group.form().unwrap();
        let form = form_matrix(z(), n, kind).unwrap();
        for _ in 0..25 {
            let k = rng.random_range(0..=n - 2);
            let words: Vec<GeneratorWord> =
                (0..k).map(|_| GeneratorWord::random(z(), group, n, &mut rng, 6, 2).unwrap()).collect();
            let ctx = if words.is_empty() {
                StabilizerContext::with_form(form.clone(), vec![]).unwrap()
            } else {
                StabilizerContext::from_words(&words).unwrap()
            };
            let h = GeneratorWord::random(z(), group, n, &mut rng, 6, 2).unwrap();
            let (hm, hinv) = (h.evaluate().unwrap(), h.inverse().evaluate().unwrap());
            let (u, v) = isotropic_pair_in_complement(&form, &ctx.orbit_vectors(), &hm, &hinv, &mut rng, 3)
                .unwrap()
                .expect("k + 1 < n constraints leave room in a Lagrangian");
            let c = complement_module(&form, &ctx.orbit_vectors()).unwrap();
            assert!(c.contains(&u) && c.contains(&v));
            let r = z().sample(&mut rng, 3);
            assert!(transvection_fixes_constraints(&ctx, &u, &v, &r).unwrap());
            let tau = transvection(&form, &u, &v).unwrap();
            assert!(preserves_form(&tau, &form).unwrap());
            assert!(preserves_form(&transvection_short(&form, &v, &r).unwrap(), &form).unwrap());

            let g = GeneratorWord::random(z(), group, n, &mut rng, 6, 2).unwrap();
            let (gm, ginv) = (g.evaluate().unwrap(), g.inverse().evaluate().unwrap());
            let lhs = gm.mul(&tau).unwrap().mul(&ginv).unwrap();
            let rhs = transvection(&form, &gm.mul_vec(&u).unwrap(), &gm.mul_vec(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn transvection_centralized_by_stabilizing_transvections() {
    // constraints {e1}: e1 lies in K and in C; a transvection g built from
    // C fixes K, hence commutes with tau(e1, e1)
    let form = form_matrix(z(), 2, FormKind::Symplectic).unwrap();
    let ctx = StabilizerContext::with_form(form.clone(), vec![]).unwrap();
    let e1 = ints(&[1, 0, 0, 0]);
    let tau = transvection(&form, &e1, &e1).unwrap();
    assert!(!tau.is_identity());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let h = GeneratorWord::random(z(), GroupKind::Symplectic, 2, &mut rng, 4, 2).unwrap();
        let (hm, hinv) = (h.evaluate().unwrap(), h.inverse().evaluate().unwrap());
        let (u, v) =
            isotropic_pair_in_complement(&form, &ctx.orbit_vectors(), &hm, &hinv, &mut rng, 2).unwrap().unwrap();
        let g = transvection(&form, &u, &v).unwrap();
        assert_eq!(g.mul_vec(&e1).unwrap(), e1);
        let ginv = transvection(&form, &u, &v.iter().map(|x| -x).collect::<Vec<_>>()).unwrap();
        assert!(g.mul(&ginv).unwrap().is_identity());
        assert_eq!(g.mul(&tau).unwrap().mul(&ginv).unwrap(), tau);
    }
}

#[test]
fn t_a_matches_generator_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (kind, n) in [(FormKind::Symplectic, 2), (FormKind::Symplectic, 3), (FormKind::Orthogonal, 4)] {
        let form = form_matrix(z(), n, kind).unwrap();
        let pairs = t_a_parameter_pairs(&form);
        let expected = match kind {
            FormKind::Symplectic => n * (n + 1) / 2,
            FormKind::Orthogonal => n * (n - 1) / 2,
        };
        assert_eq!(pairs.len(), expected);
        for _ in 0..20 {
            let params: Vec<Elem> = pairs.iter().map(|_| z().sample(&mut rng, 5)).collect();
            let t = t_a_matrix(&form, &params).unwrap();
            assert_eq!(t, t_a_product(&form, &params).unwrap());
            assert!(preserves_form(&t, &form).unwrap());
            let a = t.block(0, n, n, n);
            let sign = -form.epsilon();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(*a.get(j, i), a.get(i, j) * &z().from_i64(sign));
                }
            }
        }
    }
}

#[test]
fn t_a_examples() {
    let form = form_matrix(z(), 2, FormKind::Symplectic).unwrap();
    let ctx = StabilizerContext::with_form(form.clone(), vec![]).unwrap();
    let stream = t_a_witnesses(&ctx, &Matrix::identity(z(), 4), 10).unwrap();
    assert_eq!(stream.parameter_module().rank(), 3);
    assert_eq!(stream.count(), 10);

    let g = unitary_generator(z(), 2, FormKind::Symplectic, 3, sigma(2, 3), &z().one()).unwrap();
    assert_eq!(g.column(0), ints(&[1, 0, 1, 0]));
    let out: Vec<Matrix> = t_a_witnesses(&ctx, &g, 20).unwrap().map(Result::unwrap).collect();
    assert_eq!(out.len(), 20);
    for t in &out {
        let a = t.block(0, 2, 2, 2);
        assert!(a.get(0, 0).is_zero() && a.get(0, 1).is_zero() && a.get(1, 0).is_zero());
        assert!(!a.get(1, 1).is_zero());
        assert_eq!(t.mul_vec(&g.column(0)).unwrap(), g.column(0));
    }

    let bad = e(4, 2, 1, 1);
    assert!(matches!(t_a_witnesses(&ctx, &bad, 1), Err(Error::NotFormPreserving(_))));

    let o2 = form_matrix(z(), 2, FormKind::Orthogonal).unwrap();
    let octx = StabilizerContext::with_form(o2, vec![]).unwrap();
    assert!(t_a_witnesses(&octx, &Matrix::identity(z(), 4), 1).unwrap().warning.is_some());
}

#[test]
fn t_a_streams_reach_requested_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (group, n) in [(GroupKind::Symplectic, 2), (GroupKind::Orthogonal, 4)] {
        let form = form_matrix(z(), n, group.form().unwrap()).unwrap();
        let ctx = StabilizerContext::with_form(form.clone(), vec![]).unwrap();
        for _ in 0..5 {
            let g = GeneratorWord::random(z(), group, n, &mut rng, 6, 3).unwrap().evaluate().unwrap();
            let stream = t_a_witnesses(&ctx, &g, 60).unwrap();
            assert!(stream.warning.is_none());
            let out: Vec<Matrix> = stream.map(Result::unwrap).collect();
            assert_eq!(out.len(), 60);
            assert_eq!(out.iter().collect::<HashSet<_>>().len(), 60);
        }
    }
}

#[test]
fn common_t_a_fixes_every_conjugator() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let form = form_matrix(z(), 4, FormKind::Orthogonal).unwrap();
    let words: Vec<GeneratorWord> =
        (0..2).map(|_| GeneratorWord::random(z(), GroupKind::Orthogonal, 4, &mut rng, 6, 3).unwrap()).collect();
    let ctx = StabilizerContext::from_words(&words).unwrap();
    let stream = t_a_common_witnesses(&ctx, 30).unwrap();
    assert_eq!(stream.targets().len(), 2);
    let out: Vec<Matrix> = stream.map(Result::unwrap).collect();
    assert!(!out.is_empty());
    for t in &out {
        assert!(preserves_form_ok(t, &form));
        for g in ctx.conjugators() {
            assert_eq!(t.mul_vec(&g.column(0)).unwrap(), g.column(0));
        }
    }
    let free = StabilizerContext::with_form(form, vec![]).unwrap();
    assert_eq!(t_a_common_witnesses(&free, 5).unwrap().parameter_module().rank(), 6);
}

fn preserves_form_ok(m: &Matrix, form: &BilinearForm) -> bool {
    crate::groups::preserves_form(m, form).unwrap()
}
