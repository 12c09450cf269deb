use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Verdict of one assertion. `ExpectedFail` marks a condition that is known
/// to fail for structural reasons and does not affect the exit code;
/// `Exploratory` marks a recorded value with nothing asserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Status {
    #[serde(rename = "EXPLORATORY")]
    Exploratory,
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "EXPECTED-FAIL")]
    ExpectedFail,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// The worse of the two.
    pub fn and(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Exploratory => "EXPLORATORY",
            Status::Pass => "PASS",
            Status::ExpectedFail => "EXPECTED-FAIL",
            Status::Fail => "FAIL",
        }
    }

    pub fn worst<I: IntoIterator<Item = Status>>(it: I) -> Status {
        it.into_iter().fold(Status::Exploratory, Status::and)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Item {
    pub fn new(name: impl Into<String>, ok: bool) -> Self {
        Self {
            name: name.into(),
            status: Status::of(ok),
            note: None,
        }
    }

    pub fn expected(name: impl Into<String>, note: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::ExpectedFail,
            note: Some(note.into()),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Summary {
    pub tasks: usize,
    pub passed: usize,
    pub expected_failures: usize,
    pub failed: usize,
    pub exploratory: usize,
    pub inconsistent: usize,
}

impl Summary {
    pub fn tally(statuses: impl IntoIterator<Item = Status>) -> Self {
        let mut s = Summary::default();
        for st in statuses {
            s.tasks += 1;
            match st {
                Status::Pass => s.passed += 1,
                Status::ExpectedFail => s.expected_failures += 1,
                Status::Fail => s.failed += 1,
                Status::Exploratory => s.exploratory += 1,
            }
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

/// Everything except `timing` is a function of the configuration alone.
#[derive(Debug, Serialize)]
pub struct Report<C, T> {
    pub schema_version: u32,
    pub command: &'static str,
    pub config: C,
    pub results: Vec<T>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub findings: Option<serde_json::Value>,
    pub status: Status,
    pub timing: Timing,
}

pub fn write_report<R: Serialize>(report: &R, out: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io("stdout".into(), e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_order() {
        assert_eq!(Status::Pass.and(Status::ExpectedFail), Status::ExpectedFail);
        assert_eq!(Status::ExpectedFail.and(Status::Fail), Status::Fail);
        assert_eq!(Status::Exploratory.and(Status::Pass), Status::Pass);
        assert_eq!(Status::worst([]), Status::Exploratory);
        assert_eq!(serde_json::to_string(&Status::ExpectedFail).unwrap(), "\"EXPECTED-FAIL\"");
    }

    #[test]
    fn tally_counts() {
        let s = Summary::tally([Status::Pass, Status::Fail, Status::Pass, Status::ExpectedFail]);
        assert_eq!((s.tasks, s.passed, s.failed, s.expected_failures), (4, 2, 1, 1));
    }
}
