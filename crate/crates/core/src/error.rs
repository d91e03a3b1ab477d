use thiserror::Error;

/// Errors raised by polygon construction, descent and verification.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("polygon is not strictly convex and counterclockwise: {0}")]
    Convexity(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("expected a polygon with {expected} vertices, got {actual}")]
    WrongArity { expected: usize, actual: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("construction failed: {0}")]
    Construction(String),

    /// A lemma's guaranteed conclusion did not hold numerically. This points
    /// at a bug or a tolerance problem, never at a genuine counterexample.
    #[error("lemma check failed: {0}")]
    LemmaViolation(String),

    #[error("no feasible start found after {0} attempts")]
    BudgetExhausted(usize),

    #[error("sampler gave up after {0} attempts")]
    RetryExhausted(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
