use thiserror::Error;

/// Errors produced by graph operations, searches and certificate handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} is {size}, the supported limit is {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("principal submatrix on {0:?} is singular")]
    Singular(Vec<usize>),

    #[error("malformed {0}")]
    Malformed(String),

    #[error("script step {index}: {msg}")]
    Script { index: usize, msg: String },

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn capacity(what: &'static str, size: usize, limit: usize) -> Self {
        Error::Capacity { what, size, limit }
    }

    pub(crate) fn check_capacity(what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Self::capacity(what, size, limit))
        } else {
            Ok(())
        }
    }
}
