use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// One named check with its verdict and machine-readable details.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub summary: String,
    pub details: Value,
}

/// Results of a CLI run. `passed` holds iff every entry passed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub command: String,
    pub passed: bool,
    pub checks: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(command: impl Into<String>) -> Self {
        CheckReport {
            command: command.into(),
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, summary: impl Into<String>, details: impl Serialize) {
        self.passed &= passed;
        self.checks.push(CheckEntry {
            name: name.into(),
            passed,
            summary: summary.into(),
            details: serde_json::to_value(details).unwrap_or(Value::Null),
        });
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.summary
            );
        }
        let _ = writeln!(out, "overall: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }
}
