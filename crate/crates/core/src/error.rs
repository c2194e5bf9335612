use thiserror::Error;

use crate::code::CodeViolation;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} qubits, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("{n} qubits requested; at most {max} are supported")]
    TooManyQubits { n: usize, max: usize },

    #[error("alphabet size q = {0} is not supported (only q = 2)")]
    UnsupportedAlphabet(u32),

    #[error("{what}: size {size} exceeds the configured cap {cap}")]
    Capacity {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid code: {0}")]
    InvalidCode(CodeViolation),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown catalog code '{name}' (valid names: {})", valid.join(", "))]
    UnknownCode { name: String, valid: Vec<String> },

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<CodeViolation> for Error {
    fn from(v: CodeViolation) -> Self {
        Error::InvalidCode(v)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
