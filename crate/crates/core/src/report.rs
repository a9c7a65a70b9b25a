//! Pass/fail records shared by every verification.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        let mut detail = detail.into();
        if !passed && detail.is_empty() {
            detail = "failed".into();
        }
        CheckReport {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail,
            elapsed_ms: 0,
        }
    }

    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, true, detail)
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, false, detail)
    }

    /// Runs `f` and stamps the wall-clock time on its report.
    pub fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
        let t = Instant::now();
        let mut r = f();
        r.elapsed_ms = t.elapsed().as_millis() as u64;
        r
    }

    pub fn timed_result<E>(f: impl FnOnce() -> Result<CheckReport, E>) -> Result<CheckReport, E> {
        let t = Instant::now();
        let mut r = f()?;
        r.elapsed_ms = t.elapsed().as_millis() as u64;
        Ok(r)
    }

    /// Folds several sub-checks into one record that passes iff all do.
    pub fn combine(name: impl Into<String>, parts: &[CheckReport]) -> CheckReport {
        let passed = parts.iter().all(CheckReport::passed);
        let detail = parts
            .iter()
            .map(|p| format!("{}={}", p.name, if p.passed() { "ok" } else { &p.detail }))
            .collect::<Vec<_>>()
            .join("; ");
        let mut r = CheckReport::new(name, passed, detail);
        r.elapsed_ms = parts.iter().map(|p| p.elapsed_ms).sum();
        r
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CHECK {} {} {}", self.name, self.status, self.detail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_always_has_detail() {
        let r = CheckReport::fail("x", "");
        assert!(!r.detail.is_empty());
        assert_eq!(r.to_string(), "CHECK x FAIL failed");
    }

    #[test]
    fn json_round_trip() {
        let r = CheckReport::pass("span_p163", "order=400");
        let back: CheckReport = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_json_line().contains("\"status\":\"PASS\""));
    }
}
