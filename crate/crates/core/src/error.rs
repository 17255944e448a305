use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Parameters or a construction precondition do not hold; the message names the condition.
    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// An enumeration would visit more objects than the configured cap allows.
    #[error("enumeration of {count} {what} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        count: u128,
        cap: u128,
    },

    #[error("unsupported finite field order {0}")]
    UnsupportedOrder(usize),

    /// Structurally invalid input (bad code file, bad request string).
    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
