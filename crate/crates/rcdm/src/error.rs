//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by schedule construction, the filter math, the neural
/// machinery, the sampling engine, and the CLI surface.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("step index {t} out of range 1..={t_max}")]
    StepOutOfRange { t: usize, t_max: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("learning-error samples delta1/delta2 are required but not set")]
    MissingErrorSamples,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("class index {class} out of range for {num_classes} classes")]
    InvalidClass { class: usize, num_classes: usize },

    #[error("config error: {0}")]
    Config(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
