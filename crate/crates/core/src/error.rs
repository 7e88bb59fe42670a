use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    /// An unsupported (r,s) combination or algorithm/order mismatch.
    #[error("configuration error: {0}")]
    Config(String),

    /// A structure produced by one of the decomposition algorithms violates
    /// its own invariants. Always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}
