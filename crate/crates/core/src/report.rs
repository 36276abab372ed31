//! Machine-readable verification reports.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::verdict::Verdict;

pub const REPORT_VERSION: u32 = 1;

/// One named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Tuples or items examined.
    pub samples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub duration_ms: u64,
}

/// Everything a command verified. Apart from `duration_ms` the JSON form is
/// a function of the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub report_version: u32,
    pub command: String,
    pub seed: u64,
    pub verdicts: Vec<ReportEntry>,
    /// Command output such as enumerated subgroups or a constructed brace.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report { report_version: REPORT_VERSION, command: command.into(), seed, verdicts: Vec::new(), data: None }
    }

    pub fn push(&mut self, check: impl Into<String>, v: Verdict, elapsed: Duration) {
        self.verdicts.push(ReportEntry {
            check: check.into(),
            pass: v.pass,
            witness: v.witness,
            samples: v.checked,
            seed: v.seed,
            duration_ms: elapsed.as_millis() as u64,
        });
    }

    /// Run `f`, time it and record the verdict.
    pub fn run(&mut self, check: impl Into<String>, f: impl FnOnce() -> Verdict) -> bool {
        let start = Instant::now();
        let v = f();
        let pass = v.pass;
        self.push(check, v, start.elapsed());
        pass
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|e| e.pass)
    }

    /// Copy with every duration zeroed, for comparing runs.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for e in &mut r.verdicts {
            e.duration_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.verdicts {
            let status = if e.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} ({} checked, {} ms)", e.check, e.samples, e.duration_ms));
            if let Some(w) = &e.witness {
                out.push_str(&format!(": {w}"));
            }
            out.push('\n');
        }
        out
    }
}
