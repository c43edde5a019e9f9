use thiserror::Error;

/// Errors raised by the library.
///
/// `Input` covers malformed or out-of-range arguments supplied by a caller.
/// `Structure` signals that an internal structural guarantee failed to hold,
/// which on validated input indicates a bug rather than a user mistake.
/// `Refused` is returned when a size guard is exceeded.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("structural violation: {0}")]
    Structure(String),
    #[error("refused: {0}")]
    Refused(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn structure<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Structure(msg.into()))
}
