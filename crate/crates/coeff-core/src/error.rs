use thiserror::Error;

/// Errors surfaced to callers. Violated internal invariants panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input; `pointer` is a JSON pointer or a
    /// short path naming the offending location.
    #[error("input error at {pointer}: {message}")]
    Input { pointer: String, message: String },
    #[error("unknown basis key {0}")]
    UnknownKey(String),
    #[error("module mismatch: {0}")]
    ModuleMismatch(String),
    #[error("unsupported coefficients: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn input(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input { pointer: pointer.into(), message: message.into() }
    }
}
