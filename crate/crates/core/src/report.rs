//! Machine-readable verification results.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded value, not an assertion.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub assertion_id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub detail: String,
}

impl CheckResult {
    pub fn check(id: impl Into<String>, anchor: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            assertion_id: id.into(),
            paper_anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn info(id: impl Into<String>, anchor: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            assertion_id: id.into(),
            paper_anchor: anchor.into(),
            status: Status::Info,
            detail: detail.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Collects the failing cases of one identity into a single result.
pub struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    pub fn new() -> Self {
        Tally {
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(case());
        }
    }

    pub fn finish(self, id: impl Into<String>, anchor: impl Into<String>) -> CheckResult {
        let detail = if self.failures.is_empty() {
            format!("{} cases hold", self.checked)
        } else {
            let shown: Vec<_> = self.failures.iter().take(5).cloned().collect();
            format!(
                "{} of {} cases fail; first: {}",
                self.failures.len(),
                self.checked,
                shown.join("; ")
            )
        };
        CheckResult::check(id, anchor, self.failures.is_empty(), detail)
    }
}

impl Default for Tally {
    fn default() -> Self {
        Self::new()
    }
}
