use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("element count overflow for shape {0:?}")]
    ShapeOverflow([usize; 4]),

    #[error("invalid axis {axis} for a rank-4 tensor")]
    InvalidAxis { axis: usize },

    #[error("non-finite value at flat index {index}")]
    NonFinite { index: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("graph node {node} ({label}): {msg}")]
    Graph {
        node: usize,
        label: String,
        msg: String,
    },

    #[error("NaN detected in output of node {node} ({label})")]
    NanAtNode { node: usize, label: String },

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("training aborted: {0}")]
    Train(String),

    #[error("quantization error: {0}")]
    Quant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
