//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Mismatched sizes between combinatorial inputs (partitions, cycle
    /// types, compositions).
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// An operation received an argument outside its domain (wrong ambient
    /// group, invalid irreducible index, character domain violation, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A descriptor string could not be parsed.
    #[error("descriptor parse error: {msg}\n{grammar}", grammar = crate::groups::descriptor::GRAMMAR_HELP)]
    DescriptorParse { msg: String },

    /// A configured resource budget was exceeded. Never silently truncated.
    #[error("resource budget exceeded: {what} requires more than the configured bound {bound}")]
    Budget { what: String, bound: u64 },

    /// An internal consistency contract failed (e.g. a character row that no
    /// label matches). Signals a bug, not bad input.
    #[error("consistency error: {0}")]
    Consistency(String),

    /// Cross-validation between the fast path and the oracle disagreed.
    #[error("verification failure: {0}")]
    Verification(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 1 verification failure, 2 usage error,
    /// 3 resource budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) => 1,
            Error::SizeMismatch(_)
            | Error::InvalidArgument(_)
            | Error::DescriptorParse { .. } => 2,
            Error::Budget { .. } => 3,
            _ => 1,
        }
    }
}
