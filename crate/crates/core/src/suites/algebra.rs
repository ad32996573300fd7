use std::collections::{BTreeMap, HashSet};

use rand::Rng;
use serde_json::json;

use super::oracle::{box_vectors, in_integer_span, minor_gcd};
use super::{run_trials, unsupported, Outcome, SuiteParams, Trial};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::normal_forms::{
    kernel_basis, rank, smith_normal_form, solution_stream, two_rigidity_witnesses, TupleCursor,
};
use crate::ring::{Elem, Ring, RingKind};

fn ints(m: &Matrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|e| i64::try_from(e.to_bigint().expect("integer entry")).expect("small entry")).collect())
        .collect()
}

fn random_matrix<R: Rng>(rng: &mut R, ring: Ring, rows: usize, cols: usize, bound: u64) -> Matrix {
    Matrix::new(ring, rows, cols, (0..rows * cols).map(|_| ring.sample(rng, bound)).collect()).expect("shape")
}

fn fmt_vec(v: &[Elem]) -> String {
    let parts: Vec<String> = v.iter().map(Elem::to_string).collect();
    format!("({})", parts.join(", "))
}

pub(super) fn ring_axioms(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    let samples = params.samples.unwrap_or(1000);
    let bound = params.bound.unwrap_or(20);
    let mut out = Outcome::default();
    out.param("samples", samples);
    out.param("bound", bound);
    let trials = run_trials(params.seed, samples, |t, rng| {
        let mut trial = Trial::default();
        let (a, b, c) = (ring.sample(rng, bound), ring.sample(rng, bound), ring.sample(rng, bound));
        let (zero, one) = (ring.zero(), ring.one());
        let laws: [(&str, Elem, Elem); 10] = [
            ("a+(b+c) = (a+b)+c", &a + &(&b + &c), &(&a + &b) + &c),
            ("a+b = b+a", &a + &b, &b + &a),
            ("a(bc) = (ab)c", &a * &(&b * &c), &(&a * &b) * &c),
            ("ab = ba", &a * &b, &b * &a),
            ("a(b+c) = ab+ac", &a * &(&b + &c), &(&a * &b) + &(&a * &c)),
            ("(a+b)c = ac+bc", &(&a + &b) * &c, &(&a * &c) + &(&b * &c)),
            ("a+0 = a", &a + &zero, a.clone()),
            ("a*1 = a", &a * &one, a.clone()),
            ("a+(-a) = 0", &a + &(-&a), zero.clone()),
            ("a-b = a+(-b)", &a - &b, &a + &(-&b)),
        ];
        for (law, lhs, rhs) in laws {
            trial.check(lhs == rhs, || format!("{law} at a={a}, b={b}, c={c}"), &rhs.to_string(), || lhs.to_string());
        }
        for x in [&a, &b, &c] {
            let back = ring.parse_element(&x.to_string());
            trial.check(
                back.as_ref() == Ok(x),
                || format!("parse(print({x}))"),
                &x.to_string(),
                || format!("{back:?}"),
            );
        }
        if t < 3 {
            trial.samples.push(json!([a, b, c]));
        }
        trial
    });
    out.absorb(trials);
    Ok(out)
}

pub(super) fn snf_oracle(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    if ring.kind() != RingKind::Integers {
        return Err(unsupported("snf-oracle", ring));
    }
    let trials = params.trials.unwrap_or(200);
    let bound = params.bound.unwrap_or(9);
    let mut out = Outcome::default();
    out.param("trials", trials);
    out.param("bound", bound);
    out.param("max_shape", "4x5");
    let results = run_trials(params.seed, trials, |t, rng| {
        let mut trial = Trial::default();
        let (r, c) = (rng.random_range(1..=4), rng.random_range(1..=5));
        let a = random_matrix(rng, ring, r, c, bound);
        let input = || format!("A = {a}");
        let snf = match smith_normal_form(&a) {
            Ok(s) => s,
            Err(e) => {
                trial.fail(input(), "a Smith normal form", e.to_string());
                return trial;
            }
        };
        let uav = snf.u.mul(&a).and_then(|m| m.mul(&snf.v));
        trial.check(uav.as_ref() == Ok(&snf.d), input, "U A V = D", || format!("{uav:?}"));
        for (name, m) in [("U", &snf.u), ("V", &snf.v)] {
            let det = m.determinant().map(|d| d.to_string()).unwrap_or_default();
            trial.check(det == "1" || det == "-1", input, &format!("det {name} = +-1"), || det.clone());
        }
        let off_diagonal_zero = (0..r).all(|i| (0..c).all(|j| i == j || snf.d.get(i, j).is_zero()));
        trial.check(off_diagonal_zero, input, "D diagonal", || snf.d.to_string());
        let diag: Vec<i128> =
            ints(&snf.d).iter().enumerate().filter_map(|(i, row)| row.get(i).map(|&x| x as i128)).collect();
        let chain = diag.windows(2).all(|w| w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0));
        trial.check(chain && diag.iter().all(|&d| d >= 0), input, "d_i >= 0 and d_i | d_(i+1)", || format!("{diag:?}"));
        let a64 = ints(&a);
        let mut prod = 1i128;
        for (k, d) in diag.iter().enumerate() {
            prod *= d;
            let g = minor_gcd(&a64, k + 1);
            trial.check(
                prod.abs() == g,
                || format!("A = {a}, k = {}", k + 1),
                &format!("gcd of {0}x{0} minors = {g}", k + 1),
                || format!("product of first {} invariant factors = {prod}", k + 1),
            );
        }
        if t < 3 {
            trial.samples.push(json!({"a": a, "d": diag.iter().map(|d| d.to_string()).collect::<Vec<_>>()}));
        }
        trial
    });
    out.absorb(results);
    Ok(out)
}

pub(super) fn kernel_oracle(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    if ring.kind() != RingKind::Integers {
        return Err(unsupported("kernel-oracle", ring));
    }
    const BOX: i64 = 6;
    let trials = params.trials.unwrap_or(500);
    let bound = params.bound.unwrap_or(4);
    let mut out = Outcome::default();
    out.param("trials", trials);
    out.param("bound", bound);
    out.param("box", BOX);
    out.param("max_shape", "2x3");
    let boxes: Vec<Vec<Vec<i64>>> = (1..=3).map(|d| box_vectors(d, BOX)).collect();
    let results = run_trials(params.seed, trials, |t, rng| {
        let mut trial = Trial::default();
        let (r, c) = (rng.random_range(1..=2), rng.random_range(1..=3));
        let a = random_matrix(rng, ring, r, c, bound);
        let input = || format!("A = {a}");
        let k = match kernel_basis(&a) {
            Ok(k) => k,
            Err(e) => {
                trial.fail(input(), "a kernel basis", e.to_string());
                return trial;
            }
        };
        let expected_rank = c - rank(&a).unwrap_or(0);
        trial.check(k.rank() == expected_rank, input, &format!("rank {expected_rank}"), || k.rank().to_string());
        for v in &k.basis {
            trial.check(k.contains(v), input, "basis vector in kernel", || fmt_vec(v));
        }
        let a64 = ints(&a);
        let basis: Vec<Vec<i64>> = k
            .basis
            .iter()
            .map(|v| v.iter().map(|e| i64::try_from(e.to_bigint().unwrap()).unwrap()).collect())
            .collect();
        let mut found = 0;
        for v in &boxes[c - 1] {
            if a64.iter().all(|row| row.iter().zip(v).map(|(x, y)| x * y).sum::<i64>() == 0) {
                found += 1;
                let spanned = in_integer_span(&basis, v);
                trial.check(
                    spanned == Some(true),
                    || format!("A = {a}, v = {v:?}"),
                    "v in the span of the basis",
                    || format!("{spanned:?} for basis {basis:?}"),
                );
            }
        }
        trial.metric("box_kernel_vectors", found);
        if t < 3 {
            trial.samples.push(json!({"a": a, "basis": k.basis}));
        }
        trial
    });
    out.absorb(results);
    Ok(out)
}

/// Exhaustive limit on the number of maps for finite rings.
const EXHAUSTIVE_MAPS: u64 = 4096;

pub(super) fn rigidity_empirical(ring: Ring, params: &SuiteParams) -> Result<Outcome> {
    let n = params.n.unwrap_or(2).max(2);
    let mut out = Outcome::default();
    out.param("n", n);
    match ring.kind() {
        RingKind::Modular(m) => rigidity_finite(ring, m, n, params, out),
        RingKind::PolyZ if n != 2 => Err(unsupported("rigidity-empirical with n != 2", ring)),
        _ => rigidity_infinite(ring, n, params, out),
    }
}

fn rigidity_finite(ring: Ring, m: u64, n: usize, params: &SuiteParams, mut out: Outcome) -> Result<Outcome> {
    let entries = (n - 1) * n;
    let total_maps = m.checked_pow(entries as u32);
    let exhaustive = total_maps.is_some_and(|t| t <= EXHAUSTIVE_MAPS);
    let trials = if exhaustive { total_maps.unwrap() as usize } else { params.trials.unwrap_or(200) };
    out.param("trials", trials);
    out.extra("finite_ring", true);
    out.extra("exhaustive", exhaustive);
    let domain: Vec<Vec<Elem>> = TupleCursor::new(ring, n).chain(std::iter::once(vec![ring.zero(); n])).collect();
    let results = run_trials(params.seed, trials, |t, rng| {
        let mut trial = Trial::default();
        let a = if exhaustive {
            let mut idx = t as u64;
            let data = (0..entries)
                .map(|_| {
                    let e = ring.from_i64((idx % m) as i64);
                    idx /= m;
                    e
                })
                .collect();
            Matrix::new(ring, n - 1, n, data).expect("shape")
        } else {
            random_matrix(rng, ring, n - 1, n, 0)
        };
        let input = || format!("f = {a}");
        let kernel = domain.iter().filter(|v| a.mul_vec(v).unwrap().iter().all(Elem::is_zero)).count() as u64;
        let image: HashSet<Vec<Elem>> = domain.iter().map(|v| a.mul_vec(v).unwrap()).collect();
        let size = domain.len() as u64;
        trial.check(kernel * image.len() as u64 == size, input, &format!("|ker| |im| = {size}"), || {
            format!("{kernel} * {}", image.len())
        });
        match solution_stream(&a, usize::MAX) {
            Ok(stream) => {
                let streamed: Vec<Vec<Elem>> = stream.take(size as usize).collect();
                let in_kernel = streamed.iter().all(|v| a.mul_vec(v).unwrap().iter().all(Elem::is_zero));
                trial.check(in_kernel, input, "streamed vectors in the kernel", || "a vector outside".into());
                trial.check(
                    streamed.len() as u64 + 1 == kernel,
                    input,
                    &format!("{} nonzero kernel vectors", kernel - 1),
                    || streamed.len().to_string(),
                );
            }
            Err(e) => trial.fail(input(), "a kernel stream", e.to_string()),
        }
        trial.metric("kernel_size", kernel);
        trial.samples.extend((t < 3).then(|| json!({"f": a, "kernel_size": kernel})));
        trial
    });
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for t in &results {
        for &(_, k) in &t.metrics {
            *histogram.entry(k).or_default() += 1;
        }
    }
    out.extra("kernel_sizes", histogram);
    out.absorb(results);
    Ok(out)
}

fn rigidity_infinite(ring: Ring, n: usize, params: &SuiteParams, mut out: Outcome) -> Result<Outcome> {
    let trials = params.trials.unwrap_or(200);
    let count = params.count.unwrap_or(50);
    let bound = params.bound.unwrap_or(9);
    out.param("trials", trials);
    out.param("count", count);
    out.param("bound", bound);
    out.extra("finite_ring", false);
    let results = run_trials(params.seed, trials, |t, rng| {
        let mut trial = Trial::default();
        let a = random_matrix(rng, ring, n - 1, n, bound);
        let input = || format!("f = {a}");
        let stream =
            if ring.kind() == RingKind::PolyZ { two_rigidity_witnesses(&a, count) } else { solution_stream(&a, count) };
        match stream {
            Ok(stream) => {
                let found: Vec<Vec<Elem>> = stream.collect();
                let distinct = found.iter().collect::<HashSet<_>>().len();
                let in_kernel = found.iter().all(|v| a.mul_vec(v).unwrap().iter().all(Elem::is_zero));
                trial.check(in_kernel, input, "every witness in the kernel", || "a vector outside".into());
                trial.check(distinct >= count, input, &format!(">= {count} distinct kernel vectors"), || {
                    distinct.to_string()
                });
                trial.metric("witnesses", distinct as u64);
                if t < 2 {
                    trial.samples.push(json!({"f": a, "first": found.iter().take(3).collect::<Vec<_>>()}));
                }
            }
            Err(e) => trial.fail(input(), "a kernel stream", e.to_string()),
        }
        trial
    });
    out.absorb(results);
    Ok(out)
}
