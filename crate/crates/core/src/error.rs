//! Error taxonomy shared by the library and its front ends.
//!
//! `Malformed*` variants mean the input could not even be read (a CLI maps
//! them to exit code 2); everything else is a domain error on well-formed
//! input (exit code 1).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("malformed rational literal {0:?}; expected \"p\" or \"p/q\" with q != 0")]
    MalformedRational(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl CoreError {
    /// True when the error describes unreadable input rather than a domain
    /// failure on valid input.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            CoreError::MalformedRational(_) | CoreError::MalformedInput(_)
        )
    }
}
