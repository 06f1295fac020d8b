use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration the library deliberately does not handle.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A numerical routine failed to converge or produced a degenerate result.
    #[error("numerical failure: {0}")]
    Numeric(String),

    /// Per-voxel failure (singular error matrix, zero residual norm, ...).
    #[error("voxel {voxel}: {what}")]
    Voxel { voxel: usize, what: String },

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
    pub fn voxel(voxel: usize, what: impl Into<String>) -> Self {
        Error::Voxel {
            voxel,
            what: what.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
