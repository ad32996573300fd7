use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use rigidity_core::groups::form_matrix;
use rigidity_core::normal_forms::{kernel_basis, smith_normal_form, two_rigidity_witnesses, SolutionStream};
use rigidity_core::witnesses::{intersection_witnesses, t_a_common_witnesses};
use rigidity_core::{
    run_suite, Error, GeneratorWord, GroupKind, Matrix, Ring, RingKind, StabilizerContext, SuiteParams,
};

#[derive(Parser, Debug)]
#[command(name = "rigidity", version, about = "Exact kernels, normal forms and subgroup witnesses over small rings")]
struct Cli {
    /// Ring descriptor: Z, Z/m, Fp[x]/p, Z[x], Zi.
    #[arg(long, global = true, default_value = "Z")]
    ring: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print JSON instead of a text summary.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON output to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite and report pass/fail.
    Verify {
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Kernel basis of a matrix and the first few kernel vectors.
    Kernel {
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Smith normal form `U A V = D`.
    Snf {
        #[arg(long)]
        matrix: String,
    },
    /// Verified witnesses fixing `g_i e1` for each conjugator word.
    Witness {
        #[arg(long, default_value = "en")]
        group: String,
        #[arg(long)]
        n: usize,
        /// A conjugator word; repeat the flag for several, or separate
        /// words with `|`.
        #[arg(long)]
        conjugators: Vec<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Evaluate a generator word to a matrix.
    EvalWord {
        #[arg(long, default_value = "en")]
        group: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
    },
}

/// Output of a command: JSON, a text rendering, and whether it passed.
struct Output {
    json: Value,
    text: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let rendered = serde_json::to_string_pretty(&out.json).expect("json");
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, format!("{rendered}\n")) {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            if cli.json {
                println!("{rendered}");
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Malformed input and unsupported requests are usage errors.
fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::InvalidRing(_)
            | Error::MalformedLiteral { .. }
            | Error::WrongRingKind { .. }
            | Error::MalformedMatrix(_)
            | Error::MalformedWord(_)
            | Error::InvalidIndex(_)
            | Error::InvalidParam { .. }
            | Error::UnknownSuite(_)
            | Error::Unsupported { .. }
            | Error::NotEuclidean(_)
            | Error::Dimension(_),
        ) => 2,
        Some(_) => 1,
        None => 2,
    }
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    let ring: Ring = cli.ring.parse()?;
    match &cli.command {
        Command::Verify { suite, n, trials, samples, count, group, max_len, bound } => {
            let params = SuiteParams {
                seed: cli.seed,
                n: *n,
                trials: *trials,
                samples: *samples,
                count: *count,
                group: group.as_deref().map(str::parse).transpose()?,
                max_len: *max_len,
                bound: *bound,
            };
            let report = run_suite(suite, ring, &params)?;
            let mut text = format!(
                "{} over {}: {} ({} trials, {} failures, {} ms)\n",
                report.suite,
                report.ring,
                report.verdict,
                report.trials,
                report.failures.len(),
                report.elapsed_ms
            );
            for f in report.failures.iter().take(5) {
                text.push_str(&format!("  {}: expected {}, got {}\n", f.input, f.expected, f.got));
            }
            Ok(Output { json: serde_json::to_value(&report)?, text, passed: report.passed() })
        }
        Command::Kernel { matrix, count } => {
            let a = Matrix::parse(ring, matrix)?;
            let stream = if ring.kind() == RingKind::PolyZ {
                two_rigidity_witnesses(&a, *count)?
            } else {
                SolutionStream::new(kernel_basis(&a)?).limit(*count)
            };
            let basis = stream.kernel().basis.clone();
            let sample: Vec<_> = stream.collect();
            let mut text = format!("kernel over {ring}: {} generators\n", basis.len());
            for v in &basis {
                text.push_str(&format!("  {}\n", vector_text(v)));
            }
            text.push_str(&format!("first {} kernel vectors:\n", sample.len()));
            for v in &sample {
                text.push_str(&format!("  {}\n", vector_text(v)));
            }
            let json = json!({"ring": ring.to_string(), "matrix": a, "basis": basis, "stream_sample": sample});
            Ok(Output { json, text, passed: true })
        }
        Command::Snf { matrix } => {
            let a = Matrix::parse(ring, matrix)?;
            let snf = smith_normal_form(&a)?;
            let diagonal = snf.diagonal();
            let text = format!("D = {}\nU = {}\nV = {}\ndiagonal: {}\n", snf.d, snf.u, snf.v, vector_text(&diagonal));
            let json = json!({"ring": ring.to_string(), "matrix": a, "d": snf.d, "u": snf.u, "v": snf.v, "diagonal": diagonal});
            Ok(Output { json, text, passed: true })
        }
        Command::Witness { group, n, conjugators, count } => {
            let group: GroupKind = group.parse()?;
            let words = conjugators
                .iter()
                .flat_map(|c| c.split('|'))
                .map(|w| GeneratorWord::parse(ring, group, *n, w))
                .collect::<Result<Vec<_>, _>>()?;
            witness(ring, group, *n, &words, *count)
        }
        Command::EvalWord { group, n, word } => {
            let group: GroupKind = group.parse()?;
            let w = GeneratorWord::parse(ring, group, *n, word)?;
            let m = w.evaluate()?;
            let mut json =
                json!({"ring": ring.to_string(), "group": group.name(), "n": n, "word": w.to_string(), "matrix": m});
            if let Some(kind) = group.form() {
                json["preserves_form"] =
                    json!(rigidity_core::groups::preserves_form(&m, &form_matrix(ring, *n, kind)?)?);
            }
            Ok(Output { json, text: format!("{m}\n"), passed: true })
        }
    }
}

fn witness(ring: Ring, group: GroupKind, n: usize, words: &[GeneratorWord], count: usize) -> anyhow::Result<Output> {
    let ctx = if words.is_empty() {
        match group.form() {
            None => StabilizerContext::elementary(ring, n, vec![])?,
            Some(kind) => StabilizerContext::with_form(form_matrix(ring, n, kind)?, vec![])?,
        }
    } else {
        StabilizerContext::from_words(words)?
    };
    let constraints = ctx.constraint_vectors();
    let (family, matrices, warning) = match group {
        GroupKind::Elementary => {
            let found = intersection_witnesses(&ctx, count)?.collect::<Result<Vec<_>, _>>()?;
            ("t_phi", found.into_iter().map(|w| w.matrix).collect::<Vec<_>>(), None)
        }
        _ => {
            let stream = t_a_common_witnesses(&ctx, count)?;
            let warning = stream.warning.clone();
            ("t_a", stream.collect::<Result<Vec<_>, _>>()?, warning)
        }
    };
    let mut text = format!("{} verified {family} witnesses over {ring}\n", matrices.len());
    if let Some(w) = &warning {
        text.push_str(&format!("warning: {w}\n"));
    }
    for m in &matrices {
        text.push_str(&format!("  {m}\n"));
    }
    let json = json!({
        "ring": ring.to_string(),
        "group": group.name(),
        "n": n,
        "family": family,
        "conjugators": words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "constraints": constraints,
        "witnesses": matrices,
        "warning": warning,
    });
    Ok(Output { json, text, passed: true })
}

fn vector_text(v: &[rigidity_core::Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}
