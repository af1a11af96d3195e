//! Error type shared by every module.

use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The argument sits on or next to a pole of the requested function.
    #[error("pole: {what} (distance to pole {distance:e})")]
    Pole { what: String, distance: f64 },
    /// The request lies outside the region where accuracy is guaranteed.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
    /// An L-value that must be bounded away from zero came out tiny.
    #[error("near zero of L on the 1-line: |L| = {0:e}")]
    NearZero(f64),
    /// An iterative scheme did not reach its target.
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

impl Error {
    /// Process exit code associated with this error: 2 for validation, 3 for numerics.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 2,
            _ => 3,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

/// Library result alias.
pub type Result<T> = std::result::Result<T, Error>;
