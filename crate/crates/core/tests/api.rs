use rigidity_core::groups::{form_matrix, preserves_form};
use rigidity_core::normal_forms::{kernel_basis, smith_normal_form};
use rigidity_core::witnesses::{conjugate_in_q, intersection_witnesses, t_a_witnesses};
use rigidity_core::{FormKind, GeneratorWord, GroupKind, Matrix, Ring, StabilizerContext};

fn z() -> Ring {
    "Z".parse().unwrap()
}

#[test]
fn text_formats_round_trip() {
    for s in ["Z", "Z/6", "Fp[x]/5", "Z[x]", "Zi"] {
        let r: Ring = s.parse().unwrap();
        assert_eq!(r.to_string().parse::<Ring>().unwrap(), r);
    }
    let m = Matrix::parse(z(), "1, -2; 3,4").unwrap();
    assert_eq!(m.to_string(), "1,-2;3,4");
    let w = GeneratorWord::parse(z(), GroupKind::Symplectic, 2, "rs(1,2,3); rl(4,-1)^-1").unwrap();
    assert_eq!(GeneratorWord::parse(z(), GroupKind::Symplectic, 2, &w.to_string()).unwrap(), w);
}

#[test]
fn kernel_and_snf_agree_on_rank() {
    let a = Matrix::parse(z(), "2,4,6;1,2,3").unwrap();
    let k = kernel_basis(&a).unwrap();
    let snf = smith_normal_form(&a).unwrap();
    let nonzero = snf.diagonal().iter().filter(|d| !d.is_zero()).count();
    assert_eq!(k.rank() + nonzero, a.cols());
}

#[test]
fn witness_pipeline() {
    let w = GeneratorWord::parse(z(), GroupKind::Elementary, 3, "e(2,1,1);e(3,2,-2)").unwrap();
    let g = w.evaluate().unwrap();
    let ctx = StabilizerContext::from_words(std::slice::from_ref(&w)).unwrap();
    let e1 = Matrix::parse(z(), "1;0;0").unwrap();
    let q = Matrix::parse(z(), "1,0,0;0,1,0;0,0,1").unwrap();
    for t in intersection_witnesses(&ctx, 20).unwrap() {
        let t = t.unwrap();
        let fixed = w.inverse().evaluate().unwrap().mul(&t.matrix).unwrap().mul(&g).unwrap().mul(&e1).unwrap();
        assert_eq!(fixed, e1);
        assert_eq!(conjugate_in_q(&t, &q, &ctx).unwrap(), t);
    }

    let form = form_matrix(z(), 2, FormKind::Symplectic).unwrap();
    let h = GeneratorWord::parse(z(), GroupKind::Symplectic, 2, "rs(1,2,1);rl(3,2)").unwrap().evaluate().unwrap();
    let sctx = StabilizerContext::with_form(form.clone(), vec![]).unwrap();
    for t in t_a_witnesses(&sctx, &h, 10).unwrap() {
        let t = t.unwrap();
        assert!(preserves_form(&t, &form).unwrap());
        assert_eq!(t.mul_vec(&h.column(0)).unwrap(), h.column(0));
    }
}
