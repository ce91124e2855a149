//! Structured results of identity sweeps.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// One failed case: its inputs plus both sides of the identity, as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFailure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

impl CaseFailure {
    pub fn new(case: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Self {
            case: case.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub n: usize,
    pub cases: usize,
    pub failures: Vec<CaseFailure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary; timing is left out so the text is reproducible.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: n={} cases={} failures={} {}",
            self.check,
            self.n,
            self.cases,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        );
        for f in &self.failures {
            out.push_str(&format!(
                "\n  case {}\n    expected: {}\n    actual:   {}",
                f.case, f.expected, f.actual
            ));
        }
        out
    }
}

/// Runs `check` over `cases` on the current rayon pool. Failures come back in
/// the order of `cases`, whatever order the workers finish in.
pub fn run_sweep<T, F>(name: &str, n: usize, cases: Vec<T>, check: F) -> VerificationReport
where
    T: Sync,
    F: Fn(&T) -> Vec<CaseFailure> + Sync,
{
    let start = Instant::now();
    let failures: Vec<CaseFailure> = cases.par_iter().flat_map_iter(&check).collect();
    VerificationReport {
        check: name.to_string(),
        n,
        cases: cases.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}
