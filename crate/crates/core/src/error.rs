use thiserror::Error;

/// Errors shared across the reconstruction toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite values in {0}")]
    NonFinite(&'static str),

    /// The autocalibration region is too small (or empty) for the requested
    /// kernel geometry; the mask's ACS block must grow.
    #[error("insufficient ACS region: {0}")]
    InsufficientAcs(String),

    #[error("empty training dataset")]
    EmptyDataset,

    #[error("file format error: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
