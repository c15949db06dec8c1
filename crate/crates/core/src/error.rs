use thiserror::Error;

use crate::face::Face;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed faces, unknown vertices, bad parameters.
    #[error("input error: {0}")]
    Input(String),

    /// A collapse or anticollapse step whose precondition does not hold.
    #[error("step ({free}, {coface}) rejected: {reason}")]
    Step {
        free: Face,
        coface: Face,
        reason: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {0}")]
    Size(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("certificate: {0}")]
    Certificate(String),

    #[error("search budget exhausted: {0}")]
    Budget(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
