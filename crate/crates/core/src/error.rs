use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A digit string that `encode` can never produce in the given base.
    #[error("invalid expansion at digit position {position}: {reason}")]
    InvalidExpansion { position: usize, reason: String },

    /// Input the library knows about but deliberately does not handle.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid_expansion(position: usize, reason: impl Into<String>) -> Self {
        Error::InvalidExpansion {
            position,
            reason: reason.into(),
        }
    }
}
