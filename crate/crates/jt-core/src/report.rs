//! Verification-report types shared by the CLI and the batch audits.
//!
//! Every numeric claim carries the tolerance it was checked against, so the
//! emitted JSON is self-describing.

use serde::Serialize;

/// One named check with its measured defect and tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub parameters: String,
    pub defect: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, parameters: impl Into<String>, defect: f64, tolerance: f64) -> Self {
        CheckResult {
            check: check.into(),
            parameters: parameters.into(),
            defect,
            tolerance,
            pass: defect <= tolerance,
        }
    }

    /// A boolean check (defect 0 or 1 against tolerance 0.5).
    pub fn boolean(check: impl Into<String>, parameters: impl Into<String>, ok: bool) -> Self {
        CheckResult {
            check: check.into(),
            parameters: parameters.into(),
            defect: if ok { 0.0 } else { 1.0 },
            tolerance: 0.5,
            pass: ok,
        }
    }
}

/// A batch of check results with a provenance block.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: Option<u64>,
    pub checks: Vec<CheckResult>,
    pub all_pass: bool,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: Option<u64>, checks: Vec<CheckResult>) -> Self {
        let all_pass = checks.iter().all(|c| c.pass);
        Report {
            tool: "jt".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            seed,
            checks,
            all_pass,
        }
    }
}
