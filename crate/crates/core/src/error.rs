use thiserror::Error;

use crate::ncsym::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("basis mismatch: {left} vs {right} (convert first)")]
    BasisMismatch { left: Basis, right: Basis },

    #[error("operation `{op}` is not defined in the {basis} basis")]
    WrongBasis { op: &'static str, basis: Basis },

    #[error("{what} exceeds the configured limit ({requested} > {limit})")]
    GuardExceeded {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("index {index} out of range (expected {range})")]
    IndexOutOfRange { index: usize, range: String },

    #[error("no edge with id {0}")]
    InvalidEdge(usize),

    #[error("not below: {0}")]
    NotComparable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
