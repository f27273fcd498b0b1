use thiserror::Error;

/// Errors raised by the cycle-space routines.
///
/// `Input` covers malformed or inconsistent arguments (length mismatches,
/// non-involutive permutations, bad generator names). `Domain` covers
/// well-formed arguments that violate an operation's precondition, such as
/// decomposing an edge set that is not a 1-cycle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
