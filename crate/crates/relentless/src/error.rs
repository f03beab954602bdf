use thiserror::Error;

/// Errors surfaced by parameter validation, channel construction, the
/// analytic models and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("infeasible loss channel: {0}")]
    InfeasibleChannel(String),

    #[error("malformed channel spec '{spec}': {reason}")]
    ChannelSpec { spec: String, reason: String },

    #[error("protocol error: {0}")]
    Protocol(String),

    #[error("model domain error: {0}")]
    ModelDomain(String),

    #[error("fit requires at least {needed} distinct loss rates, got {got}")]
    InsufficientPoints { needed: usize, got: usize },

    #[error("key mismatch between rows and predictions: {0}")]
    KeyMismatch(String),

    #[error("malformed CSV input: {0}")]
    Csv(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
