//! Machine-readable verification reports.
//!
//! A report is one claim's worth of checked instances. Each record carries
//! the instance's input, the expected outcome, and the observed outcome as
//! plain strings; a record passes when the two strings are equal, and the
//! report passes when every record does.

use std::time::Instant;

use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Record {
    pub input: String,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Record {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub claim: String,
    pub verdict: String,
    pub records: Vec<Record>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.passed())
    }
}

/// Accumulates records for one claim and stamps the verdict and elapsed
/// time when finished.
pub struct ReportBuilder {
    claim: String,
    records: Vec<Record>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(claim: &str) -> ReportBuilder {
        ReportBuilder {
            claim: claim.to_owned(),
            records: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn record(
        &mut self,
        input: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        witness: Option<String>,
    ) {
        self.records.push(Record {
            input: input.into(),
            expected: expected.into(),
            actual: actual.into(),
            witness,
        });
    }

    pub fn finish(self) -> Report {
        let verdict = if self.records.iter().all(Record::passed) {
            "pass"
        } else {
            "fail"
        };
        Report {
            claim: self.claim,
            verdict: verdict.to_owned(),
            records: self.records,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}
