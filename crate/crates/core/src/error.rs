//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Tensor or layer shapes do not line up.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Non-finite value observed at a layer boundary.
    #[error("numeric error in `{layer}`: non-finite value")]
    NonFinite { layer: String },

    /// Invalid configuration value or combination.
    #[error("config error: {0}")]
    Config(String),

    /// Malformed dataset / checkpoint file.
    #[error("format error at byte {offset}: {msg}")]
    Format { offset: u64, msg: String },

    /// Operation called in the wrong state (e.g. backward without a tape).
    #[error("state error: {0}")]
    State(String),

    /// Metric undefined for the given inputs (e.g. zero-norm reference).
    #[error("metric error: {0}")]
    Metric(String),

    /// Contract violation on an operation input (e.g. non-binary spikes).
    #[error("contract error: {0}")]
    Contract(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn format(offset: u64, msg: impl Into<String>) -> Self {
        Error::Format {
            offset,
            msg: msg.into(),
        }
    }
}
