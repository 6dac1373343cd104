//! Itemized results of relation suites.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("relation {family} fails at {instance}")]
pub struct RelationFailure {
    pub family: String,
    pub instance: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RelationFamily {
    pub name: String,
    pub instances: usize,
    pub passed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl RelationFamily {
    pub fn ok(&self) -> bool {
        self.passed == self.instances
    }
}

/// One line per relation family with instance counts.
#[derive(Debug, Clone, Serialize, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub suite: String,
    pub families: Vec<RelationFamily>,
}

impl RelationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            families: Vec::new(),
        }
    }

    /// Records a family from `(instance label, holds)` results, keeping order.
    pub fn record(&mut self, name: impl Into<String>, results: Vec<(String, bool)>) {
        let instances = results.len();
        let passed = results.iter().filter(|(_, ok)| *ok).count();
        let first_failure = results.into_iter().find(|(_, ok)| !ok).map(|(s, _)| s);
        self.families.push(RelationFamily {
            name: name.into(),
            instances,
            passed,
            first_failure,
        });
    }

    pub fn merge(&mut self, other: RelationReport) {
        self.families.extend(other.families);
    }

    pub fn all_passed(&self) -> bool {
        self.families.iter().all(RelationFamily::ok)
    }

    pub fn total_instances(&self) -> usize {
        self.families.iter().map(|f| f.instances).sum()
    }

    pub fn family(&self, name: &str) -> Option<&RelationFamily> {
        self.families.iter().find(|f| f.name == name)
    }

    /// The first failing instance, if any.
    pub fn first_failure(&self) -> Option<RelationFailure> {
        self.families.iter().find(|f| !f.ok()).map(|f| RelationFailure {
            family: f.name.clone(),
            instance: f.first_failure.clone().unwrap_or_default(),
        })
    }

    pub fn ensure_passed(&self) -> Result<(), RelationFailure> {
        match self.first_failure() {
            Some(fail) => Err(fail),
            None => Ok(()),
        }
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.suite)?;
        for fam in &self.families {
            let status = if fam.ok() { "ok" } else { "FAIL" };
            write!(
                f,
                "  {:<28} {:>5}/{:<5} {}",
                fam.name, fam.passed, fam.instances, status
            )?;
            if let Some(inst) = &fam.first_failure {
                write!(f, "  first failure: {inst}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
