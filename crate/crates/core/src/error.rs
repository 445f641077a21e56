use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("duplicate point {0}")]
    DuplicatePoint(String),

    #[error("transformation class mismatch: {left} vs {right}")]
    ClassMismatch { left: String, right: String },

    #[error("invalid parameter vector for class {class}: {reason}")]
    InvalidParameters { class: String, reason: String },

    #[error("unknown transformation class '{0}' (expected 2T, 2TR or 2STR)")]
    UnknownClass(String),

    #[error("basis size {beta} is invalid for a dataset of {points} points")]
    BasisSize { beta: usize, points: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
