//! Outcome of a named verification at one genus.

use std::collections::BTreeMap;
use std::fmt::Display;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub claim: String,
    pub g: usize,
    pub checks: Vec<Check>,
    /// Exact values backing the checks, keyed by name.
    pub witness: BTreeMap<String, String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(claim: &str, g: usize) -> Self {
        Report {
            claim: claim.to_string(),
            g,
            checks: Vec::new(),
            witness: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> bool {
        self.checks.push(Check { name: name.into(), passed });
        passed
    }

    pub fn witness(&mut self, key: impl Into<String>, value: impl Display) {
        self.witness.insert(key.into(), value.to_string());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}
