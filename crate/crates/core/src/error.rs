use thiserror::Error;

/// Errors raised by the library and surfaced by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("variable cutoff mismatch: k = {left} vs k = {right}")]
    CutoffMismatch { left: usize, right: usize },

    #[error("parse error in {input:?} at position {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("degree {degree} exceeds the limit {limit} for {what}")]
    DegreeGuard {
        what: &'static str,
        degree: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::Invalid(message.into())
    }
}
