use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps `Usage` and `Config` to exit status 2 and `Resource` to 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested root system does not exist.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// An argument violates an operation's precondition.
    #[error("usage error: {0}")]
    Usage(String),
    /// An enumeration would exceed its configured cap.
    #[error("resource limit: {what} has {needed} elements, cap is {cap}")]
    Resource {
        what: &'static str,
        needed: u64,
        cap: u64,
    },
    /// Two routes that must agree did not.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
