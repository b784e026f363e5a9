//! Pass/fail reports with machine-readable witnesses.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: Value) {
        self.checks.push(Check { name: name.into(), pass: false, witness: Some(witness) });
    }

    /// Records a check; the witness is only kept on failure.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> Value) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness());
        }
    }

    pub fn info(&mut self, name: impl Into<String>, value: Value) {
        self.checks.push(Check { name: name.into(), pass: true, witness: Some(value) });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = if prefix.is_empty() { c.name } else { format!("{prefix}.{}", c.name) };
            self.checks.push(c);
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({"title": self.title, "passed": self.passed(), "checks": self.checks})
    }
}
