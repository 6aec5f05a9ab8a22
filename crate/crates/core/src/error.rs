use alloc::string::String;

use crate::matroid::AxiomViolation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("ground set has {size} elements, more than the {limit} supported")]
    GroundTooLarge { size: usize, limit: usize },

    #[error("exhaustive scan over {size} elements exceeds the limit of {limit}")]
    ScanLimit { size: usize, limit: usize },

    #[error("{pairs} circuit-cocircuit pairs exceed the cap of {cap}")]
    CapExceeded { pairs: u128, cap: u64 },

    #[error("circuit axioms violated: {0}")]
    Axiom(AxiomViolation),

    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),

    #[error("minor spec deletes and contracts the same elements")]
    OverlappingSpec,

    #[error("unknown matroid name `{0}`")]
    UnknownName(String),

    #[error("no Oxley minor found for intersection of size {k}")]
    ExtractionFailed { k: usize },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("no circuit/cocircuit pair of the parent restricts to the given minor pair")]
    LiftFailed,
}
