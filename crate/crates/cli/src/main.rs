//! `qschur`: run verification suites and query structure constants.
//!
//! Exit codes: 0 when everything passes, 1 when a check fails, 2 for usage
//! and input/output errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use queer_schur::verify::{self, Config, Suite, SuiteReport};
use queer_schur::{Engine, PhiVector, SuperMatrix};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "qschur", version, about = "Structure constants of the queer q-Schur superalgebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite for n x n matrices of size r.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Check a seeded uniform sample of this many cases.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
        /// Sample automatically above this many cases.
        #[arg(long, default_value_t = verify::DEFAULT_CEILING)]
        ceiling: usize,
        /// Print every failure.
        #[arg(long)]
        verbose: bool,
    },
    /// Print φ_B φ_A in the standard basis, reading B and A as JSON files
    /// of the form {"n": .., "a0": [[..]], "a1": [[..]]}.
    Query { b: PathBuf, a: PathBuf },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: queer_schur::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Math,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let res = match cli.command {
        Command::Verify {
            suite,
            n,
            r,
            sample,
            seed,
            out,
            jobs,
            ceiling,
            verbose,
        } => {
            let cfg = Config {
                n,
                r,
                sample,
                seed,
                ceiling,
            };
            run_verify(suite, &cfg, out.as_deref(), jobs, verbose)
        }
        Command::Query { b, a } => run_query(&b, &a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("qschur: {msg}");
            ExitCode::from(2)
        }
    }
}

/// The report written to `--out`: a single suite report, or for `all` a
/// summary object carrying every suite report.
fn report_json(suite: Suite, cfg: &Config, reports: &[SuiteReport]) -> Value {
    if let [one] = reports {
        return serde_json::to_value(one).expect("reports serialize");
    }
    let failures: Vec<Value> = reports
        .iter()
        .flat_map(|rep| {
            rep.failures.iter().map(move |f| {
                let mut v = serde_json::to_value(f).expect("failures serialize");
                v["suite"] = json!(rep.suite);
                v
            })
        })
        .collect();
    json!({
        "suite": suite,
        "n": cfg.n,
        "r": cfg.r,
        "cases": reports.iter().map(|r| r.cases).sum::<usize>(),
        "failures": failures,
        "sampled": reports.iter().any(|r| r.sampled),
        "total": reports.iter().map(|r| r.total).sum::<usize>(),
        "seed": cfg.seed,
        "elapsed_ms": reports.iter().map(|r| r.elapsed_ms).sum::<u64>(),
        "suites": reports,
    })
}

fn run_verify(suite: Suite, cfg: &Config, out: Option<&Path>, jobs: Option<u16>, verbose: bool) -> Result<(), Failure> {
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = pool.build().map_err(|e| Failure::Usage(e.to_string()))?;
    let engine = Engine::new();
    let mut reports = Vec::new();
    for s in suite.expand() {
        let rep = pool
            .install(|| verify::run_suite_with(&engine, s, cfg))
            .map_err(|e| Failure::Usage(e.to_string()))?;
        println!("{}", rep.summary());
        if verbose {
            for f in &rep.failures {
                println!("  {}", serde_json::to_string(f).expect("failures serialize"));
            }
        }
        reports.push(rep);
    }
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&report_json(suite, cfg, &reports)).expect("reports serialize");
        fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    if reports.iter().all(SuiteReport::passed) {
        Ok(())
    } else {
        Err(Failure::Math)
    }
}

fn read_matrix(path: &Path) -> Result<SuperMatrix, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run_query(b: &Path, a: &Path) -> Result<(), Failure> {
    let (b, a) = (read_matrix(b)?, read_matrix(a)?);
    if b.n() != a.n() {
        return Err(Failure::Usage(format!(
            "matrices are {}x{} and {}x{}",
            b.n(),
            b.n(),
            a.n(),
            a.n()
        )));
    }
    let v = if b.co() == a.ro() {
        Engine::new().product(&b, &a).map_err(|e| Failure::Usage(e.to_string()))?
    } else {
        PhiVector::zero()
    };
    println!("{}", serde_json::to_string(&v).expect("vectors serialize"));
    Ok(())
}
