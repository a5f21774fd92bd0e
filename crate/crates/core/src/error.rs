use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad input from a caller: wrong variable count, invalid site, unsupported rank.
    #[error("usage: {0}")]
    Usage(String),
    /// A computation that must be exact was not (non-exact division, non-integer vector).
    #[error("integrity: {0}")]
    Integrity(String),
    /// The worklist solver ran out of solvable equations.
    #[error("solver stuck with {} unknown entries: {}", .0.len(), .0.join(" "))]
    Stuck(Vec<String>),
    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn integrity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Integrity(msg.into()))
}
