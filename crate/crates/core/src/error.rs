use thiserror::Error;

/// Errors produced by the geometric kernels and the walk synthesis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A construction broke one of its own guarantees. Carries a diagnostic.
    #[error("internal error: {0}")]
    Internal(String),
    /// Exact lattice arithmetic left the representable range.
    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
