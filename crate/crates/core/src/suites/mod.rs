//! Seeded verification suites and their JSON reports.
//!
//! Each trial draws from its own ChaCha8 stream (`seed`, stream = trial
//! index), so trials can run in parallel and the report is independent of
//! scheduling. Failures are sorted before the report is assembled.

mod algebra;
mod groups;
pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groups::GroupKind;
use crate::ring::Ring;

/// Suite identifiers accepted by [`run_suite`].
pub const SUITES: [&str; 10] = [
    "ring-axioms",
    "snf-oracle",
    "kernel-oracle",
    "rigidity-empirical",
    "lemma-ke",
    "lemma-new",
    "forms-generators",
    "transvections",
    "t-a-witnesses",
    "abelian-s",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

impl Failure {
    pub fn new(input: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) -> Self {
        Failure { input: input.into(), expected: expected.into(), got: got.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessReport {
    pub suite: String,
    pub ring: String,
    pub params: BTreeMap<String, Value>,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub samples: Vec<Value>,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
    /// Suite-specific statistics.
    pub extra: BTreeMap<String, Value>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The JSON text with `elapsed_ms` removed, for reproducibility checks.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v.as_object_mut().expect("object").remove("elapsed_ms");
        serde_json::to_string(&v).expect("reports serialize")
    }

    /// `stats.<metric>.min`, when recorded.
    pub fn metric_min(&self, metric: &str) -> Option<u64> {
        self.extra.get("stats")?.get(metric)?.get("min")?.as_u64()
    }

    pub fn metric_total(&self, metric: &str) -> Option<u64> {
        self.extra.get("stats")?.get(metric)?.get("total")?.as_u64()
    }
}

/// Suite parameters; unset fields take per-suite defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub seed: u64,
    pub n: Option<usize>,
    pub trials: Option<usize>,
    pub samples: Option<usize>,
    pub count: Option<usize>,
    pub group: Option<GroupKind>,
    pub max_len: Option<usize>,
    pub bound: Option<u64>,
}

impl SuiteParams {
    pub fn with_seed(seed: u64) -> Self {
        SuiteParams { seed, ..Default::default() }
    }

    /// Parses `key=value` pairs (`n`, `trials`, `samples`, `count`,
    /// `group`, `max_len`, `bound`, `seed`).
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |reason: String| Error::InvalidParam { name: key.to_string(), reason };
        let num = |v: &str| v.parse::<u64>().map_err(|e| bad(e.to_string()));
        match key {
            "seed" => self.seed = num(value)?,
            "n" => self.n = Some(num(value)? as usize),
            "trials" => self.trials = Some(num(value)? as usize),
            "samples" => self.samples = Some(num(value)? as usize),
            "count" => self.count = Some(num(value)? as usize),
            "max_len" => self.max_len = Some(num(value)? as usize),
            "bound" => self.bound = Some(num(value)?),
            "group" => self.group = Some(GroupKind::from_str(value)?),
            _ => return Err(bad("unknown parameter".into())),
        }
        Ok(())
    }
}

pub(crate) fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Outcome of one trial.
#[derive(Debug, Default)]
pub(crate) struct Trial {
    pub failures: Vec<Failure>,
    pub samples: Vec<Value>,
    pub metrics: Vec<(&'static str, u64)>,
}

impl Trial {
    pub fn fail(&mut self, input: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) {
        self.failures.push(Failure::new(input, expected, got));
    }

    pub fn metric(&mut self, name: &'static str, value: u64) {
        self.metrics.push((name, value));
    }

    /// Records `check` as a failure when false.
    pub fn check(&mut self, ok: bool, input: impl FnOnce() -> String, expected: &str, got: impl FnOnce() -> String) {
        if !ok {
            self.fail(input(), expected, got());
        }
    }
}

pub(crate) fn run_trials<F>(seed: u64, trials: usize, f: F) -> Vec<Trial>
where
    F: Fn(usize, &mut ChaCha8Rng) -> Trial + Sync,
{
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            f(t, &mut rng)
        })
        .collect()
}

/// Body of a report before timing and verdict are attached.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub params: BTreeMap<String, Value>,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub samples: Vec<Value>,
    pub extra: BTreeMap<String, Value>,
    stats: BTreeMap<String, (u64, u64, u64)>,
}

const MAX_SAMPLES: usize = 5;

impl Outcome {
    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.params.insert(key.to_string(), json!(value));
    }

    pub fn extra(&mut self, key: &str, value: impl Serialize) {
        self.extra.insert(key.to_string(), json!(value));
    }

    /// Folds trial outcomes in trial order.
    pub fn absorb(&mut self, trials: Vec<Trial>) {
        self.trials += trials.len();
        for t in trials {
            self.failures.extend(t.failures);
            for s in t.samples {
                if self.samples.len() < MAX_SAMPLES {
                    self.samples.push(s);
                }
            }
            for (name, v) in t.metrics {
                let e = self.stats.entry(name.to_string()).or_insert((u64::MAX, 0, 0));
                e.0 = e.0.min(v);
                e.1 = e.1.max(v);
                e.2 += v;
            }
        }
    }

    /// Metrics become `extra.stats.<name>.{min, max, total}`.
    fn finish(&mut self) {
        if self.stats.is_empty() {
            return;
        }
        let stats: BTreeMap<&String, Value> = self
            .stats
            .iter()
            .map(|(k, (min, max, total))| (k, json!({"min": min, "max": max, "total": total})))
            .collect();
        let stats = json!(stats);
        self.extra("stats", stats);
    }
}

/// Runs a suite. Reports are deterministic in `(suite, ring, params)` apart
/// from `elapsed_ms`.
pub fn run_suite(suite: &str, ring: Ring, params: &SuiteParams) -> Result<WitnessReport> {
    let start = Instant::now();
    let mut out = match suite {
        "ring-axioms" => algebra::ring_axioms(ring, params),
        "snf-oracle" => algebra::snf_oracle(ring, params),
        "kernel-oracle" => algebra::kernel_oracle(ring, params),
        "rigidity-empirical" => algebra::rigidity_empirical(ring, params),
        "lemma-ke" => groups::lemma_ke(ring, params),
        "lemma-new" => groups::lemma_new(ring, params),
        "forms-generators" => groups::forms_generators(ring, params),
        "transvections" => groups::transvections(ring, params),
        "t-a-witnesses" => groups::t_a_suite(ring, params),
        "abelian-s" => groups::abelian_s(ring, params),
        other => return Err(Error::UnknownSuite(other.to_string())),
    }?;
    out.param("seed", params.seed);
    out.finish();
    out.failures.sort();
    let verdict = if out.failures.is_empty() { Verdict::Pass } else { Verdict::Fail };
    Ok(WitnessReport {
        suite: suite.to_string(),
        ring: ring.to_string(),
        params: out.params,
        trials: out.trials,
        failures: out.failures,
        samples: out.samples,
        elapsed_ms: start.elapsed().as_millis() as u64,
        verdict,
        extra: out.extra,
    })
}

pub(crate) fn unsupported(suite: &'static str, ring: Ring) -> Error {
    Error::Unsupported { op: suite, ring: ring.to_string() }
}

#[cfg(test)]
mod tests;
