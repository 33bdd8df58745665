use thiserror::Error;

/// Failures of the harness itself, as opposed to the mathematics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("{origin}:{line}: {message}")]
    Parse {
        origin: String,
        line: usize,
        message: String,
    },

    #[error("{origin}: {source}")]
    Validation {
        origin: String,
        source: toric_cy4::Error,
    },

    #[error("{origin}: {source}")]
    Computation {
        origin: String,
        source: toric_cy4::Error,
    },

    #[error("reference table: {0}")]
    Reference(String),

    #[error("id {0} is not in the reference table")]
    UnknownId(String),
}

impl HarnessError {
    /// Process exit code for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::UnknownId(_) => 2,
            _ => 1,
        }
    }
}
