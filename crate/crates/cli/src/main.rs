//! `pencil`: Kronecker invariants, Weyr characteristics and rank-one
//! perturbation checks for matrix pencils stored as JSON.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 malformed input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use pencil_core::fuzz::{run_fuzz, FuzzConfig, FuzzReport};
use pencil_core::pencil::{canonical_pencil, extract_invariants, Eigenvalue, KroneckerInvariants, Pencil};
use pencil_core::perturb::{bounds_profile, decide_rank_one, decide_rank_one_conj};
use pencil_core::weyr::weyr_direct;

#[derive(Parser)]
#[command(name = "pencil", version, about = "Exact analysis of matrix pencils A0 + s A1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Kronecker invariants of a pencil file.
    Invariants { file: PathBuf },
    /// Print the Weyr characteristic of a pencil at an eigenvalue.
    Weyr {
        file: PathBuf,
        /// "inf" or a rational such as 0, -3, 1/2
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Build the canonical pencil of an invariants file.
    Canonical {
        invariants: PathBuf,
        /// Output pencil file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether B is reachable from A by a rank-one perturbation.
    Decide { a: PathBuf, b: PathBuf },
    /// Bound profile for the pair and its check at each eigenvalue.
    Bounds {
        a: PathBuf,
        b: PathBuf,
        /// Eigenvalues to check (default: both spectra and inf)
        #[arg(long, allow_hyphen_values = true, num_args = 1..)]
        lambda: Vec<String>,
    },
    /// Property fuzzing along random rank-one perturbations.
    Fuzz {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Largest number of rows
        #[arg(long, default_value_t = 6)]
        rows: usize,
        /// Largest number of columns
        #[arg(long, default_value_t = 6)]
        cols: usize,
        /// First seed; PENCIL_SEED overrides it when set
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the report to this file
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn read_pencil(path: &Path) -> Result<Pencil, Failure> {
    Pencil::from_json(&read(path)?).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn read_invariants(path: &Path) -> Result<KroneckerInvariants, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn parse_lambda(s: &str) -> Result<Eigenvalue, Failure> {
    s.parse().map_err(|e: pencil_core::Error| malformed(e.to_string()))
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print_json<T: Serialize>(value: &T) {
    emit(&serde_json::to_string_pretty(value).expect("serializable"));
}

fn same_size(a: &Pencil, b: &Pencil) -> Result<(), Failure> {
    if (a.p(), a.q()) == (b.p(), b.q()) {
        Ok(())
    } else {
        Err(malformed(format!(
            "pencils have different sizes: {}x{} vs {}x{}",
            a.p(),
            a.q(),
            b.p(),
            b.q()
        )))
    }
}

fn cmd_decide(a: &Path, b: &Path) -> CmdResult {
    let (pa, pb) = (read_pencil(a)?, read_pencil(b)?);
    same_size(&pa, &pb)?;
    let (ka, kb) = (extract_invariants(&pa), extract_invariants(&pb));
    let chain = decide_rank_one(&ka, &kb).map_err(|e| malformed(e.to_string()))?;
    let conj = decide_rank_one_conj(&ka, &kb).map_err(|e| malformed(e.to_string()))?;
    let agreement = chain.answer == conj.answer;
    print_json(&json!({
        "answer": chain.answer,
        "case": chain.case_tag,
        "agreement": agreement,
        "chain_form": chain,
        "conjugate_form": conj,
    }));
    Ok(if agreement { 0 } else { 1 })
}

fn cmd_bounds(a: &Path, b: &Path, lambdas: &[String]) -> CmdResult {
    let (pa, pb) = (read_pencil(a)?, read_pencil(b)?);
    same_size(&pa, &pb)?;
    let (ka, kb) = (extract_invariants(&pa), extract_invariants(&pb));
    let profile = bounds_profile(&ka, &kb).map_err(|e| malformed(e.to_string()))?;
    let points: Vec<Eigenvalue> = if lambdas.is_empty() {
        let mut v = ka.spectrum().eigenvalues;
        v.extend(kb.spectrum().eigenvalues);
        v.push(Eigenvalue::Infinity);
        v.sort();
        v.dedup();
        v
    } else {
        lambdas.iter().map(|s| parse_lambda(s)).collect::<Result<_, _>>()?
    };
    let mut all_ok = true;
    let checks: Vec<_> = points
        .iter()
        .map(|lam| {
            let (wa, wb) = (weyr_direct(&pa, lam), weyr_direct(&pb, lam));
            let violation = profile.first_violation(&wa, &wb);
            all_ok &= violation.is_none();
            json!({
                "lambda": lam,
                "weyr_a": wa,
                "weyr_b": wb,
                "ok": violation.is_none(),
                "first_violation": violation.map(|(i, d)| json!({"index": i, "difference": d})),
            })
        })
        .collect();
    print_json(&json!({ "profile": profile, "checks": checks }));
    Ok(if all_ok { 0 } else { 1 })
}

/// Writes the pencils of every violating trial next to the report (or in
/// the working directory) and records the file names in the report.
fn dump_counterexamples(report: &mut FuzzReport, dir: &Path) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure {
        code: 1,
        message: format!("cannot write counterexamples to {}: {e}", dir.display()),
    };
    if report.violations.is_empty() {
        return Ok(());
    }
    fs::create_dir_all(dir).map_err(io)?;
    for v in &mut report.violations {
        let Some(c) = &v.pencils else { continue };
        for (tag, pencil) in [("A", &c.a), ("P", &c.p), ("B", &c.b)] {
            let path = dir.join(format!("seed-{}-{tag}.json", v.seed));
            fs::write(&path, pencil.to_json()).map_err(io)?;
            v.files.push(path.display().to_string());
        }
    }
    Ok(())
}

fn cmd_fuzz(trials: usize, rows: usize, cols: usize, seed: u64, report_path: Option<&Path>) -> CmdResult {
    if rows == 0 || cols == 0 {
        return Err(malformed("--rows and --cols must be at least 1"));
    }
    let seed = match std::env::var("PENCIL_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| malformed(format!("PENCIL_SEED is not a seed: {s:?}")))?,
        Err(_) => seed,
    };
    let mut report = run_fuzz(&FuzzConfig {
        trials,
        rows,
        cols,
        seed,
    });
    let dir = report_path
        .and_then(Path::parent)
        .unwrap_or(Path::new("."))
        .join("counterexamples");
    dump_counterexamples(&mut report, &dir)?;
    let text = serde_json::to_string_pretty(&report).expect("serializable");
    if let Some(path) = report_path {
        fs::write(path, format!("{text}\n")).map_err(|e| Failure {
            code: 1,
            message: format!("{}: {e}", path.display()),
        })?;
    }
    emit(&text);
    Ok(if report.violations.is_empty() { 0 } else { 1 })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Invariants { file } => {
            print_json(&extract_invariants(&read_pencil(&file)?));
            Ok(0)
        }
        Command::Weyr { file, lambda } => {
            let a = read_pencil(&file)?;
            print_json(&weyr_direct(&a, &parse_lambda(&lambda)?));
            Ok(0)
        }
        Command::Canonical { invariants, output } => {
            let k = read_invariants(&invariants)?;
            let pencil = canonical_pencil(&k).map_err(|e| malformed(e.to_string()))?;
            match output {
                Some(path) => fs::write(&path, pencil.to_json() + "\n").map_err(|e| Failure {
                    code: 1,
                    message: format!("{}: {e}", path.display()),
                })?,
                None => emit(&pencil.to_json()),
            }
            Ok(0)
        }
        Command::Decide { a, b } => cmd_decide(&a, &b),
        Command::Bounds { a, b, lambda } => cmd_bounds(&a, &b, &lambda),
        Command::Fuzz {
            trials,
            rows,
            cols,
            seed,
            report,
        } => cmd_fuzz(trials, rows, cols, seed, report.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
