//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by ordering generation, synthesis, simulation, and file
/// parsing.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated (bad width, wrong basis
    /// tag, out-of-range bit position, order not a permutation, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The circuit does not have the single-target shape the cancellation
    /// pass supports.
    #[error("unsupported circuit shape: {0}")]
    UnsupportedShape(String),

    /// A size guard was exceeded (dense matrices above 10 bits, state
    /// vectors above 24 bits).
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A text file did not conform to its format.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
