use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomEntry {
    pub axiom: &'static str,
    pub status: Status,
    /// Number of instances examined (tuples for exhaustive checks, samples otherwise).
    pub checked: u64,
    /// Lexicographically least failing tuple, or an informative example on success.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Pass/fail per axiom with witnesses.
#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct AxiomReport {
    pub exhaustive: bool,
    pub entries: Vec<AxiomEntry>,
}

pub const CONTACT_AXIOMS: [&str; 4] = ["C1", "C2", "C3", "C4"];
pub const NORMALITY_AXIOMS: [&str; 5] = ["I1", "I2", "I3", "I4", "I5"];
pub const BOUNDED_AXIOMS: [&str; 3] = ["BC1", "BC2", "BC3"];

impl AxiomReport {
    pub fn push(&mut self, axiom: &'static str, checked: u64, failure: Option<Value>) {
        self.entries.push(AxiomEntry {
            axiom,
            status: if failure.is_some() { Status::Fail } else { Status::Pass },
            checked,
            witness: failure,
            note: None,
        });
    }

    pub fn skip(&mut self, axiom: &'static str, note: impl Into<String>) {
        self.entries.push(AxiomEntry { axiom, status: Status::Skipped, checked: 0, witness: None, note: Some(note.into()) });
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn status(&self, axiom: &str) -> Option<Status> {
        self.get(axiom).map(|e| e.status)
    }

    pub fn passes(&self, axiom: &str) -> bool {
        self.status(axiom) == Some(Status::Pass)
    }

    pub fn all_pass(&self, axioms: &[&str]) -> bool {
        axioms.iter().all(|a| self.passes(a))
    }

    pub fn is_contact_algebra(&self) -> bool {
        self.all_pass(&CONTACT_AXIOMS)
    }

    pub fn is_normal(&self) -> bool {
        self.is_contact_algebra() && self.passes("I5")
    }

    pub fn is_local_contact_algebra(&self) -> bool {
        self.is_contact_algebra() && self.all_pass(&BOUNDED_AXIOMS)
    }

    pub fn failures(&self) -> Vec<&AxiomEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail).collect()
    }
}
