use thiserror::Error;

/// Errors raised by the algebraic operations and parsers of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid label {0:?}")]
    InvalidLabel(String),

    #[error("ground mismatch: {left} vs {right}")]
    GroundMismatch { left: String, right: String },

    #[error("{subset} is not a subset of {ground}")]
    NotSubset { subset: String, ground: String },

    #[error("non-disjoint supports: {0}")]
    Overlap(String),

    #[error("not a disjoint cover of {ground}: {detail}")]
    NotACover { ground: String, detail: String },

    #[error("canonicalization bound exceeded: {size} vertices > bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid decoration: {0}")]
    InvalidDecoration(String),

    #[error("operation requires the {expected} preset")]
    WrongPreset { expected: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}
