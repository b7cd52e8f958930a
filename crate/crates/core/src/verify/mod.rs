//! Named verification suites and their reports.

mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

pub use suites::run_suite;

pub const DEFAULT_K_BOUND: u64 = 800;
pub const DEFAULT_W_BOUND: u64 = 400;
pub const DEFAULT_HORIZON: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Kernel,
    ClosedForms,
    Mex,
    Blocking,
    Discrepancy,
    Redundancy,
    Morphic,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "kernel",
        "closed-forms",
        "mex",
        "blocking",
        "discrepancy",
        "redundancy",
        "morphic",
        "all",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Kernel => "kernel",
            Suite::ClosedForms => "closed-forms",
            Suite::Mex => "mex",
            Suite::Blocking => "blocking",
            Suite::Discrepancy => "discrepancy",
            Suite::Redundancy => "redundancy",
            Suite::Morphic => "morphic",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}; expected one of {names}", names = Suite::NAMES.join(", "))]
    UnknownSuite(String),
    #[error("suite {suite} does not cover {what}")]
    Unsupported { suite: &'static str, what: String },
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let all = [
            Suite::Kernel,
            Suite::ClosedForms,
            Suite::Mex,
            Suite::Blocking,
            Suite::Discrepancy,
            Suite::Redundancy,
            Suite::Morphic,
            Suite::All,
        ];
        all.into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// Overrides for a suite run; `None` means the suite's default.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub ell: Option<u32>,
    pub k: Option<u32>,
    pub bound: Option<u64>,
    pub horizon: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub spec: String,
    pub bound: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl CheckResult {
    /// Runs `check` and records its outcome and wall time.
    pub fn timed(
        name: impl Into<String>,
        spec: impl Into<String>,
        bound: u64,
        check: impl FnOnce() -> Result<(), String>,
    ) -> Self {
        let start = Instant::now();
        let outcome = check();
        CheckResult {
            name: name.into(),
            spec: spec.into(),
            bound,
            passed: outcome.is_ok(),
            counterexample: outcome.err(),
            elapsed: start.elapsed(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    items: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(mut items: Vec<CheckResult>) -> Self {
        items.sort_by(|a, b| a.name.cmp(&b.name));
        VerificationReport { items }
    }

    pub fn items(&self) -> &[CheckResult] {
        &self.items
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.items.iter().filter(|i| !i.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .items
            .iter()
            .map(|i| i.name.chars().count())
            .max()
            .unwrap_or(0);
        for item in &self.items {
            writeln!(
                f,
                "{}  {:<width$}  {:<4} B={:<7} {:>8.3}s",
                if item.passed { "PASS" } else { "FAIL" },
                item.name,
                item.spec,
                item.bound,
                item.elapsed.as_secs_f64(),
            )?;
            if let Some(c) = &item.counterexample {
                writeln!(f, "      {c}")?;
            }
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.items.len(), failed)
    }
}
