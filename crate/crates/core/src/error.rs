use thiserror::Error;

/// Errors raised by the core computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Classes or matrices of incompatible size.
    #[error("shape error: {0}")]
    Shape(String),
    /// The declared data contradicts an identity; `check` names the identity.
    #[error("inconsistent scenario ({check}): {detail}")]
    Inconsistent { check: String, detail: String },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn inconsistent(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Inconsistent {
            check: check.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
