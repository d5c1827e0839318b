use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator {letter} out of range for B_{n} (need 1 <= |g| <= {})", n - 1)]
    GeneratorRange { letter: i32, n: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource guard tripped: {what} needs {requested}, cap is {cap}")]
    ResourceGuard {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error("matrix is not invertible over the Laurent ring: {0}")]
    NotInvertible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
