use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded for reference; never counts as a failure.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

/// The outcome of one identity at one parameter setting.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub identity: String,
    pub params: Map<String, Value>,
    pub status: Status,
    /// The lexicographically first counterexample, present whenever the
    /// status is `fail`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub millis: u64,
}

impl CheckResult {
    /// Runs `check`, which returns a witness on failure, and times it.
    pub fn run(
        identity: &str,
        params: Value,
        check: impl FnOnce() -> Option<String>,
    ) -> CheckResult {
        let start = Instant::now();
        let witness = check();
        let status = if witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        CheckResult {
            identity: identity.to_string(),
            params: into_map(params),
            status,
            witness,
            note: None,
            millis: start.elapsed().as_millis() as u64,
        }
    }

    pub fn info(identity: &str, params: Value, witness: Option<String>, note: &str) -> CheckResult {
        CheckResult {
            identity: identity.to_string(),
            params: into_map(params),
            status: Status::Info,
            witness,
            note: Some(note.to_string()),
            millis: 0,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> CheckResult {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

fn into_map(params: Value) -> Map<String, Value> {
    match params {
        Value::Object(map) => map,
        Value::Null => Map::new(),
        other => {
            let mut map = Map::new();
            map.insert("value".into(), other);
            map
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new() -> VerificationReport {
        VerificationReport::default()
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, identity: &str) -> impl Iterator<Item = &CheckResult> {
        let identity = identity.to_string();
        self.checks.iter().filter(move |c| c.identity == identity)
    }

    /// A JSON array with one object per check. Timings are left out unless
    /// asked for, so that repeated runs serialize identically.
    pub fn to_json(&self, include_timing: bool) -> Value {
        Value::Array(
            self.checks
                .iter()
                .map(|c| {
                    let mut value = serde_json::to_value(c).expect("check serializes");
                    if include_timing {
                        if let Value::Object(map) = &mut value {
                            map.insert("millis".into(), c.millis.into());
                        }
                    }
                    value
                })
                .collect(),
        )
    }
}

/// The first item (in iteration order) for which `test` yields a witness.
pub(crate) fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    test: impl FnMut(T) -> Option<String>,
) -> Option<String> {
    items.into_iter().find_map(test)
}
