use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input. `line` is 1-based when the input came from a file and
    /// the 0-based edge index when it came from an edge list.
    #[error("input error at line {line}: {message}")]
    Input { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph with {n} vertices (edge {index})")]
    VertexOutOfRange {
        index: usize,
        vertex: VertexId,
        n: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A structural property that the algorithms rely on did not hold. This
    /// always indicates a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("fast and reference results diverge: {0}")]
    Divergence(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn input(line: usize, msg: impl Into<String>) -> Self {
        Error::Input {
            line,
            message: msg.into(),
        }
    }

    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input { .. }
            | Error::VertexOutOfRange { .. }
            | Error::Precondition(_)
            | Error::InvalidParameter(_)
            | Error::Io(_) => 1,
            Error::Invariant(_) => 2,
            Error::Divergence(_) => 3,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Error::input(3, "bad").exit_code(), 1);
        assert_eq!(Error::Precondition("p".into()).exit_code(), 1);
        assert_eq!(Error::invariant("i").exit_code(), 2);
        assert_eq!(Error::Divergence("d".into()).exit_code(), 3);
        assert_eq!(Error::input(3, "bad").to_string(), "input error at line 3: bad");
    }
}
