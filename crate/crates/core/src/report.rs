//! Pass/fail records for the exact verification routines.

use alloc::string::String;
use alloc::vec::Vec;

/// One named exact check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Ordered checks plus named values worth printing (volumes, signatures).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub values: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Report::default()
        }
    }

    pub fn value(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.values.push((key.into(), value.into()));
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Appends another report's checks and values, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for (k, v) in other.values {
            self.values.push((alloc::format!("{prefix}{k}"), v));
        }
        for mut c in other.checks {
            c.name = alloc::format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }
}
