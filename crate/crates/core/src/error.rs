use thiserror::Error;

use crate::Weight;

/// Errors raised by the library.
///
/// The variants are grouped so that a front end can map them onto distinct
/// exit statuses: configuration problems, inputs that fail a mathematical
/// admissibility check, and violated internal invariants.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent configuration, located by a path into the input.
    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    /// An input that parses but is not admissible (stability function, window, model).
    #[error("validation failed: {0}")]
    Validation(String),

    /// A precondition of an operation does not hold for the given arguments.
    #[error("domain error: {0}")]
    Domain(String),

    /// A pointwise precondition failed at a specific weight.
    #[error("domain error at weight {weight}: {message}")]
    AtWeight { weight: Weight, message: String },

    /// A result that the underlying theory guarantees was not obtained.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }

    /// Process exit status associated with this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } => 2,
            Error::Validation(_) | Error::Domain(_) | Error::AtWeight { .. } => 3,
            Error::Invariant(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
