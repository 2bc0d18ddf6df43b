use thiserror::Error;

/// Errors shared across the sequence, tiling and identity modules.
#[derive(Debug, Error)]
pub enum Error {
    /// An index or generation exceeds its documented cap.
    #[error("{what} {value} exceeds the cap of {cap}")]
    Capacity {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    /// A precondition on the arguments was violated.
    #[error("{0}")]
    Domain(String),

    /// Lookup of an identity by id failed.
    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
