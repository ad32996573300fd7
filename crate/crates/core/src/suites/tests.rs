use super::*;

fn ring(s: &str) -> Ring {
    s.parse().unwrap()
}

fn params(seed: u64, pairs: &[(&str, &str)]) -> SuiteParams {
    let mut p = SuiteParams::with_seed(seed);
    for (k, v) in pairs {
        p.set(k, v).unwrap();
    }
    p
}

#[test]
fn ring_axioms_on_z6() {
    let r = run_suite("ring-axioms", ring("Z/6"), &params(0, &[("samples", "1000")])).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.params["samples"], json!(1000));
}

#[test]
fn ring_axioms_on_every_ring_kind() {
    for s in ["Z", "Z/2", "Z/97", "Fp[x]/7", "Z[x]", "Zi"] {
        let r = run_suite("ring-axioms", ring(s), &params(3, &[("samples", "200")])).unwrap();
        assert!(r.passed(), "{s}: {:?}", r.failures);
    }
}

#[test]
fn lemma_ke_example() {
    let r = run_suite("lemma-ke", ring("Z"), &params(1, &[("n", "3"), ("trials", "20")])).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.trials, 20);
    assert!(r.metric_min("witnesses").unwrap() >= 50);
}

#[test]
fn rigidity_empirical_on_z4() {
    let r = run_suite("rigidity-empirical", ring("Z/4"), &params(0, &[("n", "2")])).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.extra["finite_ring"], json!(true));
}

#[test]
fn reports_are_deterministic() {
    for suite in ["lemma-ke", "snf-oracle", "transvections"] {
        let p = params(42, &[("trials", "6")]);
        let a = run_suite(suite, ring("Z"), &p).unwrap();
        let b = run_suite(suite, ring("Z"), &p).unwrap();
        assert_eq!(a.canonical_json(), b.canonical_json(), "{suite}");
    }
    let a = run_suite("lemma-ke", ring("Z"), &params(1, &[("trials", "4")])).unwrap();
    let b = run_suite("lemma-ke", ring("Z"), &params(2, &[("trials", "4")])).unwrap();
    assert_ne!(a.canonical_json(), b.canonical_json());
}

#[test]
fn unknown_suite_and_parameter() {
    assert!(matches!(run_suite("nope", ring("Z"), &SuiteParams::default()), Err(Error::UnknownSuite(_))));
    assert!(SuiteParams::default().set("colour", "red").is_err());
    assert!(SuiteParams::default().set("n", "x").is_err());
    assert!(run_suite("snf-oracle", ring("Z/6"), &SuiteParams::default()).is_err());
}

#[test]
fn suites_pass_on_small_parameters() {
    type Case<'a> = (&'a str, &'a str, &'a [(&'a str, &'a str)]);
    let cases: [Case; 8] = [
        ("snf-oracle", "Z", &[("trials", "40")]),
        ("kernel-oracle", "Z", &[("trials", "60")]),
        ("rigidity-empirical", "Z", &[("trials", "10"), ("count", "20")]),
        ("rigidity-empirical", "Z[x]", &[("trials", "5"), ("count", "10")]),
        ("lemma-new", "Z", &[("trials", "3"), ("count", "10"), ("samples", "3")]),
        ("forms-generators", "Z", &[("trials", "30")]),
        ("transvections", "Z", &[("trials", "12")]),
        ("t-a-witnesses", "Z", &[("trials", "3"), ("count", "20")]),
    ];
    for (suite, r, p) in cases {
        let rep = run_suite(suite, ring(r), &params(7, p)).unwrap();
        assert!(rep.passed(), "{suite} over {r}: {:?}", &rep.failures[..rep.failures.len().min(3)]);
        assert!(rep.trials > 0);
    }
}

#[test]
fn lemma_ke_over_finite_ring_exhausts() {
    let r = run_suite("lemma-ke", ring("Z/5"), &params(0, &[("trials", "5")])).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn abelian_s_fails_only_for_symplectic() {
    let r = run_suite("abelian-s", ring("Z"), &params(0, &[])).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.extra["per_group"], json!({"en": "pass", "eo": "pass", "esp": "fail"}));
    assert_eq!(r.extra["commutators_central"]["esp"], json!(true));
    assert!(r.failures.iter().all(|f| f.input.starts_with("esp")));
    for g in ["en", "eo"] {
        let r = run_suite("abelian-s", ring("Z"), &params(0, &[("group", g)])).unwrap();
        assert!(r.passed(), "{g}");
    }
}

#[test]
fn samples_are_capped() {
    let r = run_suite("forms-generators", ring("Z"), &params(0, &[("trials", "30")])).unwrap();
    assert!(r.samples.len() <= 5);
    assert!(!r.to_json().is_empty());
    assert!(!r.canonical_json().contains("elapsed_ms"));
}
