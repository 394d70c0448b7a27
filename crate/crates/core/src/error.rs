use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} is outside the domain: {reason}")]
    Domain { what: String, reason: String },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    /// Raised when an assembled coefficient matrix is not unitriangular
    /// under the requested order. Indicates a bug or a bad order override.
    #[error("coefficient matrix is not unitriangular: {0}")]
    NotUnitriangular(String),

    #[error("invariant is not in the span of the basis ({} offending coordinates shown)", .violations.len())]
    NotInSpan { violations: Vec<String> },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("linear system is rank deficient")]
    RankDeficient,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
