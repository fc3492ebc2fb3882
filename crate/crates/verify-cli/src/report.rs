use std::fmt::Display;
use std::time::Duration;

use serde::{Deserialize, Serialize};

/// One checked case: the suite passes iff every case has `got == expected`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub key: String,
    pub expected: String,
    pub got: String,
}

impl Case {
    pub fn new(key: impl Into<String>, expected: impl Display, got: impl Display) -> Self {
        Case { key: key.into(), expected: expected.to_string(), got: got.to_string() }
    }

    /// A case whose computation may fail; errors are recorded as the result.
    pub fn from_result<T: Display, E: Display>(key: impl Into<String>, expected: impl Display, got: Result<T, E>) -> Self {
        match got {
            Ok(v) => Self::new(key, expected, v),
            Err(e) => Self::new(key, expected, format!("error: {e}")),
        }
    }

    pub fn passes(&self) -> bool {
        self.expected == self.got
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite_id: String,
    pub statement: String,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    /// Not serialized, so that reports are byte-stable.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl PartialEq for SuiteReport {
    fn eq(&self, other: &Self) -> bool {
        (&self.suite_id, &self.statement, self.cases_run, &self.failures)
            == (&other.suite_id, &other.statement, other.cases_run, &other.failures)
    }
}

impl SuiteReport {
    pub fn from_cases(suite_id: &str, statement: &str, cases: Vec<Case>, wall_time: Duration) -> Self {
        let cases_run = cases.len();
        let failures = cases
            .into_iter()
            .filter(|c| !c.passes())
            .map(|c| Failure { case: c.key, expected: c.expected, got: c.got })
            .collect();
        SuiteReport { suite_id: suite_id.into(), statement: statement.into(), cases_run, failures, wall_time }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub const TSV_HEADER: &str = "suite\tstatus\tcases_run\tfailures\tstatement";

fn tsv_field(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

/// One line per suite, followed by one `#`-prefixed line per failed case.
pub fn render_tsv(reports: &[SuiteReport]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!("{}\t{status}\t{}\t{}\t{}\n", r.suite_id, r.cases_run, r.failures.len(), tsv_field(&r.statement)));
        for f in &r.failures {
            out.push_str(&format!("#\t{}\t{}\texpected={}\tgot={}\n", r.suite_id, tsv_field(&f.case), tsv_field(&f.expected), tsv_field(&f.got)));
        }
    }
    out
}

/// One JSON object per line.
pub fn render_json(reports: &[SuiteReport]) -> String {
    reports.iter().map(|r| r.to_json() + "\n").collect()
}
