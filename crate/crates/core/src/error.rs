use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("normalization error: expected unit norm, got {0}")]
    Normalization(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("internal consistency error: {0}")]
    InternalConsistency(String),

    #[error("triality violation: {0}")]
    TrialityViolation(String),

    #[error("classification error: {0}")]
    Classification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
