use thiserror::Error;

/// Errors shared across the crate. Cap-style errors (`CapExceeded`,
/// `PossiblyInfinite`, `GenerationUndecided`) signal that a configured bound
/// was hit, not that the input is invalid.
#[derive(Debug, Error)]
pub enum Error {
    #[error("relation is malformed: {0}")]
    MalformedRelation(String),
    #[error("reduced paths survive at the configured path cap ({0}); the algebra may be infinite dimensional")]
    PossiblyInfinite(usize),
    #[error("ground field too small for radical computation: need characteristic 0 or p > {needed}")]
    FieldTooSmall { needed: usize },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("object is not silting: {0}")]
    NotSilting(String),
    #[error("object is not presilting: {0}")]
    NotPresilting(String),
    #[error("summand index {index} out of range (object has {count} summands)")]
    SummandOutOfRange { index: usize, count: usize },
    #[error("order constraint violated: {0}")]
    OrderViolated(String),
    #[error("input lies in add of the silting object; nothing to move closer to")]
    UInAddT,
    #[error("torsion class is not covariantly finite: {0}")]
    NotCovariantlyFinite(String),
    #[error("generation undecided: thick-closure search capped at {0}")]
    GenerationUndecided(usize),
    #[error("symmetry test indeterminate over this field; supply a form explicitly")]
    IndeterminateSymmetry,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
