use thiserror::Error;

/// Errors raised by algebra construction and the numeric routines built on it.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Caller supplied operands that do not fit together (mismatched algebras,
    /// non-idempotent input where a proposition is required, and so on).
    #[error("usage error: {0}")]
    Usage(String),

    /// A value outside the admissible range for an algebra constructor.
    #[error("domain error: {0}")]
    Domain(String),

    /// Syntax error in an algebra spec string, with the byte offset of the
    /// offending character.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A numeric routine failed to reach its tolerance.
    #[error("numeric failure: {message} (residual {residual:e})")]
    Numeric { message: String, residual: f64 },

    /// The requested tensor model cannot exist for this algebra.
    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("cannot condition on a proposition of probability {probability:e}")]
    Conditioning { probability: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>, residual: f64) -> Self {
        Error::Numeric {
            message: msg.into(),
            residual,
        }
    }
}
