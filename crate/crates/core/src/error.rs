use thiserror::Error;

/// Failure kinds shared by every module of the crate.
///
/// The variants line up with the CLI exit codes: domain and usage errors are
/// caller mistakes, guard errors protect exponential-cost oracles, integrity
/// errors mean a computed value contradicts a known invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("guard violation: {0}")]
    Guard(String),
    #[error("integrity error: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
