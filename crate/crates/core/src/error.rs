//! Error types shared by every module in the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the input domain was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A root could not be lifted (the derivative vanishes at the root).
    #[error("lift error: {0}")]
    Lift(String),

    /// An enumeration would exceed the candidate budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// A structural assumption the counting argument relies on failed.
    /// This must abort the computation loudly, never be corrected silently.
    #[error("integrity error: {0}")]
    Integrity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn lift(msg: impl Into<String>) -> Self {
        Error::Lift(msg.into())
    }

    pub(crate) fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
