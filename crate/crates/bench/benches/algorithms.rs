use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rigidity_core::groups::form_matrix;
use rigidity_core::normal_forms::{hermite_normal_form, kernel_basis, smith_normal_form, solution_stream};
use rigidity_core::witnesses::{intersection_witnesses, t_a_witnesses};
use rigidity_core::{run_suite, GeneratorWord, GroupKind, Matrix, Ring, StabilizerContext, SuiteParams};

fn random_matrix(ring: Ring, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-9..=9)).collect()).collect();
    Matrix::from_ints(ring, &data)
}

fn normal_forms(c: &mut Criterion) {
    let z = Ring::integers();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("normal_forms");
    for size in [4, 8, 12] {
        let a = random_matrix(z, size, size + 1, &mut rng);
        group.bench_with_input(BenchmarkId::new("hnf", size), &a, |b, a| b.iter(|| hermite_normal_form(black_box(a))));
        group.bench_with_input(BenchmarkId::new("snf", size), &a, |b, a| b.iter(|| smith_normal_form(black_box(a))));
        group.bench_with_input(BenchmarkId::new("kernel", size), &a, |b, a| b.iter(|| kernel_basis(black_box(a))));
    }
    let zm: Ring = "Z/12".parse().unwrap();
    let a = random_matrix(zm, 6, 8, &mut rng);
    group.bench_function("kernel_z12_6x8", |b| b.iter(|| kernel_basis(black_box(&a))));
    let a = random_matrix(z, 2, 5, &mut rng);
    group.bench_function("stream_1000", |b| b.iter(|| solution_stream(black_box(&a), 1000).unwrap().count()));
    group.finish();
}

fn witness_streams(c: &mut Criterion) {
    let z = Ring::integers();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut group = c.benchmark_group("witnesses");
    for n in [3, 5] {
        let words: Vec<GeneratorWord> =
            (0..n - 2).map(|_| GeneratorWord::random(z, GroupKind::Elementary, n, &mut rng, 6, 3).unwrap()).collect();
        let ctx = StabilizerContext::from_words(&words).unwrap();
        group.bench_with_input(BenchmarkId::new("t_phi_50", n), &ctx, |b, ctx| {
            b.iter(|| intersection_witnesses(ctx, 50).unwrap().count())
        });
    }
    let form = form_matrix(z, 4, GroupKind::Orthogonal.form().unwrap()).unwrap();
    let g = GeneratorWord::random(z, GroupKind::Orthogonal, 4, &mut rng, 6, 3).unwrap().evaluate().unwrap();
    let ctx = StabilizerContext::with_form(form, vec![]).unwrap();
    group.bench_function("t_a_eo4_50", |b| b.iter(|| t_a_witnesses(&ctx, black_box(&g), 50).unwrap().count()));
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    let z = Ring::integers();
    let params = SuiteParams::with_seed(0);
    for suite in ["lemma-ke", "transvections", "t-a-witnesses"] {
        group.bench_function(suite, |b| b.iter(|| run_suite(suite, z, &params).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, normal_forms, witness_streams, suites);
criterion_main!(benches);
