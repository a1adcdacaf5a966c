use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole encountered: {0}")]
    PoleEncountered(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("outside domain: {0}")]
    OutsideDomain(String),
    #[error("undefined coefficient: {0}")]
    UndefinedCoefficient(String),
    #[error("logarithmic case: {0}")]
    LogarithmicCase(String),
    #[error("degenerate case: {0}")]
    DegenerateCase(String),
    #[error("degenerate coefficient: {0}")]
    DegenerateCoefficient(String),
    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),
    #[error("ill-conditioned fit (condition number {0:e})")]
    IllConditioned(f64),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
