use thiserror::Error;

use crate::io::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in Clifford algebras with different generator counts.
    #[error("dimension mismatch: expected m = {expected}, found m = {found}")]
    Dimension { expected: u32, found: u32 },

    /// A generator index or bitmask does not fit the declared algebra.
    #[error("invalid blade: {0}")]
    InvalidBlade(String),

    /// A size bound was exceeded. `limit` is the largest accepted value.
    #[error("resource guard exceeded for {what}: requested {requested}, limit {limit}")]
    Guard {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn guard(what: &'static str, requested: impl Into<u64>, limit: impl Into<u64>) -> Self {
        Error::Guard {
            what,
            requested: requested.into(),
            limit: limit.into(),
        }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}
