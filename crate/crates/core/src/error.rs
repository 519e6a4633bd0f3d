//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors surfaced by ring arithmetic, word construction and the checkers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Two values (or a value and an operation) belong to different rings.
    #[error("ring descriptor mismatch: expected {expected}, got {got}")]
    DescriptorMismatch { expected: String, got: String },

    /// A localization or tower constructor was given unusable data.
    #[error("invalid ring construction: {0}")]
    InvalidConstruction(String),

    /// Exact division failed where the caller required it to succeed.
    #[error("divisibility failure: {0}")]
    DivisibilityFailure(String),

    /// A fraction could not be lifted to a denominator-free element.
    #[error("lift failure: {0}")]
    LiftFailure(String),

    /// A vector pair fed to an ESD transvection is not isotropic.
    #[error("not an isotropic pair: <u,v> = {form}")]
    NotIsotropicPair { form: String },

    /// A generator, index or letter is malformed for the ambient rank.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// A rewrite step did not match the word at the requested position.
    #[error("pattern mismatch at position {pos}: {detail}")]
    PatternMismatch { pos: usize, detail: String },

    /// A relation instance violates the side conditions of its family.
    #[error("guard violated for {id}: {detail}")]
    GuardViolated { id: String, detail: String },

    /// No column witness expressing the required power of `a` was found.
    #[error("no column witness: {0}")]
    NoColumnWitness(String),

    /// The hypothesis of a local-global step fails, so the step is vacuous.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// The two localization elements of a gluing step are not comaximal.
    #[error("elements are not comaximal: {0}")]
    NotComaximal(String),

    /// An X-element was requested for data outside the realizable cases.
    #[error("unrealizable generator: {0}")]
    UnrealizableX(String),

    /// A textual ring, value, vector or word expression failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// Bad run configuration (unknown family, zero samples, rank < 3, ...).
    #[error("config error: {0}")]
    ConfigError(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn mismatch(expected: &impl std::fmt::Display, got: &impl std::fmt::Display) -> Self {
        Error::DescriptorMismatch {
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}
