use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Where in a serialized portrait a parse error was detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// 1-based line of a text document.
    Line(usize),
    /// Byte offset into a binary document.
    Offset(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(n) => write!(f, "line {n}"),
            Location::Offset(n) => write!(f, "byte offset {n}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {got} is too small (need at least {min})")]
    Dimension { got: u64, min: u64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u64, right: u64 },

    #[error("{what} {value} out of range {lo}..={hi}")]
    Range {
        what: &'static str,
        value: u64,
        lo: u64,
        hi: u64,
    },

    #[error("invalid index set: {0}")]
    IndexSet(String),

    #[error("index set does not sum to a vertex: coordinate {coordinate} sums to {sum}")]
    NotAVertex { coordinate: u64, sum: i64 },

    #[error("invalid portrait: row {row}, coordinate {coordinate} sums to {sum}")]
    InvalidPortrait { row: u64, coordinate: u64, sum: i64 },

    #[error("format error: {0}")]
    Format(String),

    #[error("stream protocol error: expected {expected} sign events, got {got}")]
    Protocol { expected: u64, got: u64 },

    #[error("parse error at {location}: {message}")]
    Parse { location: Location, message: String },

    #[error("oracle consistency failure: {0}")]
    Oracle(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: Location, message: impl Into<String>) -> Self {
        Error::Parse {
            location,
            message: message.into(),
        }
    }
}
