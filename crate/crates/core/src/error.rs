use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dimensions of points, keys or values do not match the object.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Wrong number of arguments or multi-index norm.
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    /// An enumeration or tensor guard was exceeded.
    #[error("bounds exceeded: {0}")]
    Bounds(String),

    /// A precondition on the input object does not hold (e.g. symmetry).
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
