use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants are grouped by what went wrong: malformed input text, a violated
/// precondition of an operation, a computation that needs a larger scalar
/// field, or an internal invariant (a certificate that failed to verify).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("matrix is not invertible over the polynomial ring: det = {0}")]
    NotInvertible(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("outside the classified scope: {0}")]
    OutOfScope(String),

    #[error("the configured field is too small: {0}")]
    FieldExtensionRequired(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
