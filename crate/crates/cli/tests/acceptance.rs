// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Every check is exact equality over the stated ranges.

use std::process::{Command, ExitCode};
use std::time::Instant;

use queer_schur::verify::{run_suite_filtered, Config, Suite, SuiteReport};
use queer_schur::Engine;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_qschur");

/// (n, r) pairs with n ≤ max_n and r ≤ max_r.
fn grid(max_n: usize, max_r: usize) -> Vec<(usize, usize)> {
    (1..=max_n).flat_map(|n| (1..=max_r).map(move |r| (n, r))).collect()
}

fn check_tag(input: &Value) -> &str {
    input.get("check").and_then(Value::as_str).unwrap_or("")
}

fn is_d_check(input: &Value) -> bool {
    check_tag(input).contains("d_A")
}

fn is_q1_check(input: &Value) -> bool {
    check_tag(input).contains("q = 1")
}

struct Tally {
    cases: usize,
    problems: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            problems: Vec::new(),
        }
    }

    fn add(&mut self, rep: Result<SuiteReport, queer_schur::Error>) -> Option<SuiteReport> {
        match rep {
            Ok(rep) => {
                self.cases += rep.cases;
                if !rep.passed() {
                    self.problems.push(format!(
                        "{} n={} r={}: {} failures, first {}",
                        rep.suite,
                        rep.n,
                        rep.r,
                        rep.failures.len(),
                        serde_json::to_string(&rep.failures[0]).unwrap()
                    ));
                }
                Some(rep)
            }
            Err(e) => {
                self.problems.push(e.to_string());
                None
            }
        }
    }

    fn run(&mut self, engine: &Engine, suite: Suite, pairs: &[(usize, usize)], keep: impl Fn(&Value) -> bool + Copy) {
        for &(n, r) in pairs {
            self.add(run_suite_filtered(engine, suite, &Config::new(n, r), keep));
        }
    }
}

fn suites(engine: &Engine, suite: Suite, pairs: &[(usize, usize)], keep: impl Fn(&Value) -> bool + Copy) -> Tally {
    let mut t = Tally::new();
    t.run(engine, suite, pairs, keep);
    t
}

fn all(_: &Value) -> bool {
    true
}

fn relations(e: &Engine) -> Tally {
    suites(e, Suite::HeckeRelations, &grid(1, 5), all)
}

fn basis(e: &Engine) -> Tally {
    let mut pairs = grid(2, 3);
    pairs.extend([(3, 1), (3, 2)]);
    suites(e, Suite::Basis, &pairs, all)
}

fn d_a(e: &Engine) -> Tally {
    suites(e, Suite::Sdp, &grid(3, 5), is_d_check)
}

fn sdp(e: &Engine) -> Tally {
    suites(e, Suite::Sdp, &grid(3, 4), |v| !is_d_check(v) && !is_q1_check(v))
}

fn lemmas(e: &Engine) -> Tally {
    suites(e, Suite::HeckeLemmas, &grid(3, 4), all)
}

fn even(e: &Engine) -> Tally {
    let mut t = suites(e, Suite::Even, &grid(3, 4), all);
    let cfg = Config {
        sample: Some(1500),
        seed: 7,
        ..Config::new(2, 5)
    };
    if let Some(rep) = t.add(run_suite_filtered(e, Suite::Even, &cfg, all)) {
        if rep.cases < 1000 {
            t.problems.push(format!("n=2 r=5 ran only {} cases", rep.cases));
        }
    }
    t
}

fn odd_head(e: &Engine) -> Tally {
    let mut t = suites(e, Suite::OddHead, &grid(3, 3), all);
    for n in 1..=3 {
        let cfg = Config {
            sample: Some(2000),
            seed: 11,
            ..Config::new(n, 4)
        };
        t.add(run_suite_filtered(e, Suite::OddHead, &cfg, all));
    }
    t
}

fn odd_tail(e: &Engine) -> Tally {
    suites(e, Suite::OddTail, &grid(3, 3), all)
}

fn special(e: &Engine) -> Tally {
    suites(e, Suite::Special, &grid(3, 4), all)
}

fn appendix(e: &Engine) -> Tally {
    suites(e, Suite::Appendix, &grid(3, 4), all)
}

fn q_one(e: &Engine) -> Tally {
    suites(e, Suite::Sdp, &grid(3, 4), is_q1_check)
}

fn run_bin(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    (out.status.code(), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn report_problems(v: &Value) -> Vec<String> {
    let mut p = Vec::new();
    for key in ["suite", "n", "r", "cases", "failures", "sampled", "total", "seed", "elapsed_ms"] {
        if v.get(key).is_none() {
            p.push(format!("report lacks {key:?}"));
        }
    }
    if !v["cases"].is_u64() || !v["elapsed_ms"].is_u64() || !v["failures"].is_array() {
        p.push("report fields have the wrong type".into());
    }
    p
}

fn strip_time(v: &mut Value) {
    if let Some(o) = v.as_object_mut() {
        o.remove("elapsed_ms");
        if let Some(Value::Array(xs)) = o.get_mut("suites") {
            xs.iter_mut().for_each(strip_time);
        }
    }
}

fn cli(_: &Engine) -> Tally {
    let mut t = Tally::new();
    let dir = tempfile::tempdir().expect("temp dir");
    let mut reports = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.path().join(name);
        let (code, _) = run_bin(&["verify", "--suite", "all", "--n", "2", "--r", "3", "--out", path.to_str().unwrap()]);
        if code != Some(0) {
            t.problems.push(format!("verify all exited with {code:?}"));
        }
        let text = std::fs::read_to_string(&path).unwrap_or_default();
        match serde_json::from_str::<Value>(&text) {
            Ok(v) => reports.push(v),
            Err(e) => t.problems.push(format!("report is not JSON: {e}")),
        }
    }
    if let [a, b] = &mut reports[..] {
        t.problems.extend(report_problems(a));
        if a["suite"] != "all" || a["failures"] != Value::Array(vec![]) {
            t.problems.push("aggregate report is not a clean `all` run".into());
        }
        match a["suites"].as_array() {
            Some(xs) if xs.len() == Suite::CONCRETE.len() => {
                for x in xs {
                    t.problems.extend(report_problems(x));
                }
            }
            _ => t.problems.push("aggregate report lacks one entry per suite".into()),
        }
        t.cases = a["cases"].as_u64().unwrap_or(0) as usize;
        strip_time(a);
        strip_time(b);
        if a != b {
            t.problems.push("two runs differ beyond elapsed_ms".into());
        }
    }

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 2, \"a0\": [[1").unwrap();
    let good = dir.path().join("good.json");
    std::fs::write(&good, r#"{"n":2,"a0":[[1,0],[0,1]],"a1":[[0,0],[0,0]]}"#).unwrap();
    let missing = dir.path().join("missing.json");
    let malformed: [&[&str]; 5] = [
        &["query", bad.to_str().unwrap(), good.to_str().unwrap()],
        &["query", good.to_str().unwrap(), missing.to_str().unwrap()],
        &["verify", "--suite", "all", "--n", "0", "--r", "3"],
        &["verify", "--suite", "nope", "--n", "2", "--r", "3"],
        &["verify", "--suite", "even", "--n", "2"],
    ];
    for args in malformed {
        let (code, _) = run_bin(args);
        if code != Some(2) {
            t.problems.push(format!("{args:?} exited with {code:?}, wanted 2"));
        }
    }
    t
}

type Criterion = (&'static str, fn(&Engine) -> Tally);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("relations, r <= 5", relations),
        ("B/B' transition and basis independence", basis),
        ("d_A words, lengths and worked example, n <= 3, r <= 5", d_a),
        ("SDP commutation iff vanishing corner, n <= 3, r <= 4", sdp),
        ("Hecke-Clifford lemmas, n <= 3, r <= 4", lemmas),
        ("even generators vs oracle, n <= 3, r <= 4 and sampled n = 2, r = 5", even),
        ("odd heads vs oracle, r <= 3 and sampled r = 4", odd_head),
        ("odd tails within bounds, n <= 3, r <= 3", odd_tail),
        ("adjacent odd identities, n <= 3, r <= 4", special),
        ("lowering identities, n <= 3, r <= 4", appendix),
        ("q = 1 degeneration, n <= 3, r <= 4", q_one),
        ("CLI contract", cli),
    ];
    let engine = Engine::new();
    let mut ok = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let t = f(&engine);
        let secs = start.elapsed().as_secs_f64();
        let pass = t.problems.is_empty() && t.cases > 0;
        ok &= pass;
        println!(
            "{} {:>2} {name}: {} cases, {:.1} s",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            t.cases,
            secs
        );
        for p in &t.problems {
            println!("     {p}");
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
