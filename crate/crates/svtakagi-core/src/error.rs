//! Shared error type for the whole crate.
//!
//! Errors are split in two broad families because the CLI maps them to
//! different exit codes: `Input*` variants describe malformed or
//! inconsistent user data, while `Capability*` variants describe requests
//! that are well-formed but outside what the exact kernels support.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("polyhedron must have at least one vertex")]
    EmptyVertexSet,

    #[error("ray must be a nonzero vector")]
    ZeroRay,

    #[error("negative scale factor {factor} is not allowed")]
    NegativeScale { factor: String },

    #[error("negative slack radius {radius} is not allowed")]
    NegativeSlack { radius: String },

    #[error("cone intersection supported up to dimension 4, got {dim}")]
    DimensionLimit { dim: usize },

    #[error("exact evaluation supports alpha in {{1, 2}}, got {alpha}")]
    UnsupportedAlpha { alpha: u32 },

    #[error("alpha must be a positive integer")]
    ZeroAlpha,

    #[error("tail bound must be positive, got {bound}")]
    NonPositiveTail { bound: String },

    #[error("invalid rational literal {literal:?}")]
    BadRational { literal: String },

    #[error("rational {value} is not dyadic")]
    NotDyadic { value: String },

    #[error("error function must be nonnegative: {detail}")]
    NegativeErrorFunction { detail: String },

    #[error("tabulated function has no entry at {point}")]
    MissingTableEntry { point: String },

    #[error("tabulated function has conflicting entries at {point}")]
    DuplicateTableEntry { point: String },

    #[error("tabulated error function must vanish at 0 for the exact transform")]
    NonVanishingAtZero,

    #[error("error map violation: {detail}")]
    InvalidErrorMap { detail: String },

    #[error("polynomial degree {degree} exceeds the supported bound 4")]
    DegreeTooHigh { degree: usize },

    #[error("truncation level must be at least 1")]
    ZeroLevels,

    #[error("convexity parameter {t} outside [0, 1]")]
    ParameterRange { t: String },

    #[error("scenario error: {detail}")]
    Scenario { detail: String },

    #[error("probe requires at least one trial")]
    ZeroTrials,

    #[error("grid step must be positive, got {step}")]
    NonPositiveStep { step: String },

    #[error("empty domain grid")]
    EmptyGrid,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that signal a capability limit rather than bad input.
    pub fn is_capability(&self) -> bool {
        matches!(
            self,
            Error::DimensionLimit { .. } | Error::UnsupportedAlpha { .. }
        )
    }
}
