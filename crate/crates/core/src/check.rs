//! Outcomes of invariant checks.

use alloc::string::String;
use alloc::vec::Vec;

/// One verified identity: a label, whether it held, and an optional
/// description of the first counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub label: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn pass(label: impl Into<String>) -> Self {
        Self { label: label.into(), passed: true, counterexample: None }
    }

    pub fn fail(label: impl Into<String>, counterexample: impl Into<String>) -> Self {
        Self { label: label.into(), passed: false, counterexample: Some(counterexample.into()) }
    }

    pub fn from_bool(label: impl Into<String>, ok: bool, counterexample: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(label)
        } else {
            Self::fail(label, counterexample())
        }
    }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

/// The failing entries of a report.
pub fn failures(results: &[CheckResult]) -> Vec<&CheckResult> {
    results.iter().filter(|r| !r.passed).collect()
}
