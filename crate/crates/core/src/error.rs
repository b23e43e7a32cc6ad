use thiserror::Error;

/// Errors raised while building rings or analysing them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ring axiom violated ({law}) at {witness}")]
    Axiom { law: &'static str, witness: String },

    #[error("modulus is not monic: {0}")]
    NonMonic(String),

    #[error("ring size {size} exceeds the configured maximum {max}")]
    SizeOverflow { size: u128, max: usize },

    #[error("malformed table file: {0}")]
    Table(String),

    #[error("i/o error on {path}: {msg}")]
    Io { path: String, msg: String },

    /// A precondition on an element was not met (e.g. a unit where a
    /// non-unit is required).
    #[error("{0}")]
    Domain(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("mismatched context: {0}")]
    Mismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal consistency check failed. These indicate either a bug or a
    /// mathematical surprise and are never silently repaired.
    #[error("diagnostic: {0}")]
    Diagnostic(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
