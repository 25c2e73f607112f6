use thiserror::Error;

/// Errors surfaced by the toolkit. Every variant is a definite refusal: an
/// operation either returns an exact answer or one of these, never an
/// approximation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation requires a proper ideal, got the {0} ideal")]
    NotProper(&'static str),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("cone is not pointed: {0}")]
    NotPointed(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
