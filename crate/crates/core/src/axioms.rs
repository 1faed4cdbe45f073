use serde::{Deserialize, Serialize};

/// One exact pass/fail verdict, with the first counterexample on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> Self {
        AxiomReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(AxiomCheck { name: name.into(), passed: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(AxiomCheck { name: name.into(), passed: false, witness: Some(witness.into()) });
    }

    /// Records `name` as passed when `witness` is `None`.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for mut c in other.checks {
            c.name = format!("{}: {}", other.subject, c.name);
            self.checks.push(c);
        }
    }
}
