//! Verification reports: named checks with pass/fail/warn status, grouped in suites.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Warn,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Suite {
    pub name: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Suite {
    pub fn new(name: impl Into<String>) -> Self {
        Suite { name: name.into(), checks: Vec::new(), elapsed_ms: None }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Pass, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Fail, witness: Some(witness.into()) });
    }

    pub fn warn(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Warn, witness: Some(witness.into()) });
    }

    /// Records a pass, or a failure carrying the first witness.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn extend(&mut self, other: Suite) {
        self.checks.extend(other.checks);
    }

    /// Appends the checks of `other`, each name prefixed by `prefix: `.
    pub fn extend_prefixed(&mut self, other: Suite, prefix: &str) {
        self.checks.extend(other.checks.into_iter().map(|c| Check { name: format!("{}: {}", prefix, c.name), ..c }));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Canonical order: by check name, stable for equal names.
    pub fn sorted(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {}/{}\n", c.status.label(), self.name, c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("    {}\n", w));
            }
        }
        out
    }
}
