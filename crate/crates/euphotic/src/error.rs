use thiserror::Error;

/// Library-wide error type.
///
/// `Input` marks bad arguments, `Capability` marks requests that exceed a
/// hard enumeration cap (full Weyl groups of E7/E8, oversized censuses),
/// and `Invariant` marks internal cross-check failures that indicate a bug.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("capability error: {0}")]
    Capability(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn capability_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capability(msg.into()))
}
