//! Error types shared across the engine.

use thiserror::Error;

/// Everything that can go wrong while building algebras, evaluating
/// predictions, or loading configuration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A family parameter point violates the family's printed constraints.
    /// The payload names the constraint that failed, e.g. `"α≠0"`.
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    /// The Jacobi identity does not hold exactly. Unreachable for catalog
    /// families; signals a transcription bug or an invalid Custom algebra.
    #[error("Jacobi identity failure: {0}")]
    JacobiFailure(String),

    /// No printed case applies at a parameter point, or a case's predicted
    /// span has a vanishing denominator there. A reportable finding, not a
    /// crash.
    #[error("uncovered: {0}")]
    Uncovered(String),

    /// Malformed configuration file or grid description.
    #[error("config error: {0}")]
    ConfigError(String),

    /// `certify_mismatch` was asked to certify a report whose verdict is
    /// `Match`.
    #[error("not a mismatch: {0}")]
    NotAMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
