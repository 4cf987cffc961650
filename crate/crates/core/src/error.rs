use thiserror::Error;

/// Errors raised by the algebra and certification routines.
///
/// Verification failures are never errors: they are reported as verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic context mismatch: order {left} vs order {right}")]
    ContextMismatch { left: u64, right: u64 },
    #[error("value not representable as a finite double: {0}")]
    Overflow(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("instance invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
