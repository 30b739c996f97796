//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed mesh file; carries the line (text formats) or byte offset
    /// (binary formats) where parsing stopped.
    #[error("parse error at {location}: {msg}")]
    Parse { location: String, msg: String },

    /// Mesh violates a structural invariant (bad index, NaN coordinate,
    /// zero area, isolated vertex).
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    /// A caller-supplied parameter is out of its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// Sparse factorization or Lanczos iteration failed.
    #[error("eigensolver: {0}")]
    Eigensolver(String),

    /// Tensor shapes are incompatible for the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Binary container is damaged (bad magic, truncated, CRC mismatch).
    #[error("corrupt file: {0}")]
    Corrupt(String),

    /// Training produced a non-finite loss or another numerical failure.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(location: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            msg: msg.into(),
        }
    }

    /// Process exit code for the CLI: 1 usage, 2 data, 3 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParam(_) | Error::Config(_) => 1,
            Error::Parse { .. } | Error::InvalidMesh(_) | Error::Corrupt(_) | Error::Io(_) => 2,
            Error::Eigensolver(_) | Error::ShapeMismatch(_) | Error::Numerical(_) => 3,
        }
    }
}
