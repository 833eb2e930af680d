//! Verification suites comparing the closed formulas and identities with
//! direct computation in `H^c_r`.
//!
//! A suite enumerates cases for a fixed `(n, r)`, optionally samples them
//! with a seeded generator, checks them in parallel and collects failures
//! in enumeration order, so reports only depend on the configuration.

mod hecke;
mod products;
mod structure;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hecke_clifford::HCElem;
use crate::qschur::{Engine, PhiVector};

/// Default bound on the number of cases run exhaustively.
pub const DEFAULT_CEILING: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    HeckeRelations,
    HeckeLemmas,
    Sdp,
    Basis,
    Even,
    OddHead,
    OddTail,
    Special,
    Appendix,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const CONCRETE: [Suite; 9] = [
        Suite::HeckeRelations,
        Suite::HeckeLemmas,
        Suite::Sdp,
        Suite::Basis,
        Suite::Even,
        Suite::OddHead,
        Suite::OddTail,
        Suite::Special,
        Suite::Appendix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HeckeRelations => "hecke-relations",
            Suite::HeckeLemmas => "hecke-lemmas",
            Suite::Sdp => "sdp",
            Suite::Basis => "basis",
            Suite::Even => "even",
            Suite::OddHead => "odd-head",
            Suite::OddTail => "odd-tail",
            Suite::Special => "special",
            Suite::Appendix => "appendix",
            Suite::All => "all",
        }
    }

    /// The suites this one stands for.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::CONCRETE.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub n: usize,
    pub r: usize,
    /// Run a uniform sample of this many cases instead of all of them.
    pub sample: Option<usize>,
    pub seed: u64,
    /// Above this many cases a suite samples even without `sample`.
    pub ceiling: usize,
}

impl Config {
    pub fn new(n: usize, r: usize) -> Self {
        Config {
            n,
            r,
            sample: None,
            seed: 0,
            ceiling: DEFAULT_CEILING,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.r == 0 {
            return Err(Error::Domain("n and r must be at least 1".into()));
        }
        if self.r > 8 {
            return Err(Error::Domain(format!("r = {} is out of range (at most 8)", self.r)));
        }
        if self.sample == Some(0) || self.ceiling == 0 {
            return Err(Error::Domain("sample size must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub input: Value,
    pub expected: Value,
    pub got: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub r: usize,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Whether only a sample of `total` cases was run.
    pub sampled: bool,
    pub total: usize,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One human-readable line.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let sampled = if self.sampled {
            format!(" (sampled from {}, seed {})", self.total, self.seed)
        } else {
            String::new()
        };
        format!(
            "{status} {} n={} r={}: {} cases, {} failures{sampled}, {} ms",
            self.suite,
            self.n,
            self.r,
            self.cases,
            self.failures.len(),
            self.elapsed_ms
        )
    }
}

/// Result of a single case.
pub(crate) enum Outcome {
    Pass,
    Fail { expected: Value, got: Value },
}

impl Outcome {
    pub(crate) fn check(ok: bool, expected: impl FnOnce() -> Value, got: impl FnOnce() -> Value) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail {
                expected: expected(),
                got: got(),
            }
        }
    }

    pub(crate) fn elems(got: &HCElem, expected: &HCElem) -> Outcome {
        Outcome::check(got == expected, || elem_json(expected), || elem_json(got))
    }

    pub(crate) fn phis(got: &PhiVector, expected: &PhiVector) -> Outcome {
        Outcome::check(got == expected, || expected.to_json(), || got.to_json())
    }

    pub(crate) fn flag(ok: bool, expected: impl Into<Value>, got: impl Into<Value>) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail {
                expected: expected.into(),
                got: got.into(),
            }
        }
    }

    pub(crate) fn error(e: &Error) -> Outcome {
        Outcome::Fail {
            expected: Value::Null,
            got: json!({ "error": e.to_string() }),
        }
    }

    /// The first failing outcome, or a pass.
    pub(crate) fn all(items: impl IntoIterator<Item = Outcome>) -> Outcome {
        for o in items {
            if let Outcome::Fail { .. } = o {
                return o;
            }
        }
        Outcome::Pass
    }
}

impl From<Result<Outcome>> for Outcome {
    fn from(r: Result<Outcome>) -> Self {
        r.unwrap_or_else(|e| Outcome::error(&e))
    }
}

pub(crate) fn elem_json(e: &HCElem) -> Value {
    Value::Array(e.dump().lines().map(|l| Value::String(l.to_string())).collect())
}

type CheckFn<'a> = Box<dyn Fn(&Engine) -> Outcome + Send + Sync + 'a>;

/// One enumerated case: its description and a deferred check.
pub(crate) struct Case<'a> {
    input: Value,
    run: CheckFn<'a>,
}

impl<'a> Case<'a> {
    pub(crate) fn new(input: Value, run: impl Fn(&Engine) -> Outcome + Send + Sync + 'a) -> Self {
        Case {
            input,
            run: Box::new(run),
        }
    }
}

fn cases_for(suite: Suite, cfg: &Config) -> Vec<Case<'static>> {
    match suite {
        Suite::HeckeRelations => hecke::relations(cfg),
        Suite::HeckeLemmas => hecke::lemmas(cfg),
        Suite::Sdp => structure::sdp(cfg),
        Suite::Basis => structure::basis(cfg),
        Suite::Even => products::even(cfg),
        Suite::OddHead => products::odd_head(cfg),
        Suite::OddTail => products::odd_tail(cfg),
        Suite::Special => products::special(cfg),
        Suite::Appendix => products::appendix(cfg),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

/// Run one concrete suite with a fresh engine.
pub fn run_suite(suite: Suite, cfg: &Config) -> Result<SuiteReport> {
    run_suite_with(&Engine::new(), suite, cfg)
}

/// Run one concrete suite, reusing the caches of `engine`.
pub fn run_suite_with(engine: &Engine, suite: Suite, cfg: &Config) -> Result<SuiteReport> {
    run_suite_filtered(engine, suite, cfg, |_| true)
}

/// Run the cases of `suite` whose input description satisfies `keep`.
/// Sampling applies after filtering.
pub fn run_suite_filtered(
    engine: &Engine,
    suite: Suite,
    cfg: &Config,
    keep: impl Fn(&Value) -> bool,
) -> Result<SuiteReport> {
    cfg.validate()?;
    if suite == Suite::All {
        return Err(Error::Domain("`all` is not a single suite".into()));
    }
    let start = Instant::now();
    let mut cases = cases_for(suite, cfg);
    cases.retain(|c| keep(&c.input));
    let total = cases.len();
    let limit = cfg.sample.unwrap_or(cfg.ceiling).min(cfg.ceiling);
    let sampled = total > limit;
    if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut keep = index::sample(&mut rng, total, limit).into_vec();
        keep.sort_unstable();
        let mut it = keep.into_iter().peekable();
        let mut i = 0;
        cases.retain(|_| {
            let hit = it.peek() == Some(&i);
            if hit {
                it.next();
            }
            i += 1;
            hit
        });
    }
    let failures: Vec<Failure> = cases
        .par_iter()
        .filter_map(|c| match (c.run)(engine) {
            Outcome::Pass => None,
            Outcome::Fail { expected, got } => Some(Failure {
                input: c.input.clone(),
                expected,
                got,
            }),
        })
        .collect();
    Ok(SuiteReport {
        suite,
        n: cfg.n,
        r: cfg.r,
        cases: cases.len(),
        failures,
        sampled,
        total,
        seed: cfg.seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Run `suite` (or every suite for [`Suite::All`]) sharing one engine.
pub fn run(suite: Suite, cfg: &Config) -> Result<Vec<SuiteReport>> {
    let engine = Engine::new();
    suite.expand().into_iter().map(|s| run_suite_with(&engine, s, cfg)).collect()
}
