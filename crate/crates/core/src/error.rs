use serde_json::Value;
use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed or out-of-range input (exit code 2 at the CLI).
    #[error("input error: {0}")]
    Input(String),
    /// A documented precondition does not hold for the given instance.
    #[error("hypothesis `{predicate}` failed: {detail}")]
    Hypothesis { predicate: String, detail: String },
    /// The request is meaningful but outside what this representation can express.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An internal consistency check failed; this is a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    /// A property that must hold for every valid instance was refuted.
    #[error("theorem violation in `{check}`: {witness}")]
    TheoremViolation { check: String, witness: Value },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn hypothesis(predicate: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Hypothesis { predicate: predicate.into(), detail: detail.into() }
    }

    pub fn violation(check: impl Into<String>, witness: Value) -> Self {
        Error::TheoremViolation { check: check.into(), witness }
    }

    /// CLI exit status associated with the error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TheoremViolation { .. } | Error::Invariant(_) => 1,
            _ => 2,
        }
    }
}
