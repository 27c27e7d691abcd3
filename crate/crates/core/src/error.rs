use thiserror::Error;

/// Errors produced by ingestion, geometry, and rendering.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed row: {reason}")]
    MalformedRow { line: u64, reason: String },

    #[error("non-finite score at line {line}")]
    NonFiniteScore { line: u64 },

    #[error("line {line}: unknown label token {token:?} (expected {live:?} or {fake:?})")]
    UnknownLabel {
        line: u64,
        token: String,
        live: String,
        fake: String,
    },

    #[error("class {class:?} has zero samples")]
    EmptyClass { class: String },

    #[error("empty score vector")]
    EmptyScores,

    #[error("score at index {index} is not finite")]
    NonFiniteValue { index: usize },

    #[error("center {center} lies outside [{min}, {max}]")]
    CenterOutOfRange { center: f64, min: f64, max: f64 },

    #[error("threshold must be finite")]
    NonFiniteThreshold,

    #[error("invalid synthesis spec: {reason}")]
    InvalidSynthSpec { reason: String },

    #[error("degenerate viewport [{lo}, {hi}]")]
    DegenerateViewport { lo: f64, hi: f64 },

    #[error("invalid render spec: {reason}")]
    InvalidRenderSpec { reason: String },

    #[error("comparison panels must share a viewport")]
    MismatchedViewports,

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
