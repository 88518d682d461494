use std::fmt;

use coeff_core::{Key, Vector};
use serde_json::{json, Value};

/// One failed identity: which relation, where, and the nonzero difference
/// of its two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: String,
    pub location: String,
    pub discrepancy: String,
}

/// Outcome of a checker: how many identities were evaluated and which failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one identity check; a nonzero `discrepancy` is a violation.
    pub fn check<K: Key>(&mut self, relation: &str, location: impl FnOnce() -> String, discrepancy: &Vector<K>) {
        self.checks += 1;
        if !discrepancy.is_zero() {
            self.violations.push(Violation {
                relation: relation.to_string(),
                location: location(),
                discrepancy: discrepancy.to_string(),
            });
        }
    }

    /// Records a failure that has no vector witness.
    pub fn fail(&mut self, relation: &str, location: String, message: String) {
        self.checks += 1;
        self.violations.push(Violation { relation: relation.to_string(), location, discrepancy: message });
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.ok(),
            "checks": self.checks,
            "violations": self.violations.iter().map(|v| json!({
                "relation": v.relation,
                "location": v.location,
                "discrepancy": v.discrepancy,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checks, {} violations", self.checks, self.violations.len())?;
        for v in self.violations.iter().take(5) {
            write!(f, "\n  {} at {}: {}", v.relation, v.location, v.discrepancy)?;
        }
        Ok(())
    }
}
