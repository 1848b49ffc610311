use thiserror::Error;

use crate::crossed::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication table is not square or has an out-of-range entry at ({row}, {col})")]
    MalformedTable { row: usize, col: usize },

    #[error("a group needs at least one element")]
    EmptyGroup,

    #[error("element 0 is not a two-sided identity: fails at element {element}")]
    NoIdentityAtZero { element: usize },

    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },

    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal: conjugating {member} by {by} leaves the subgroup")]
    NotNormal { member: usize, by: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid crossed complex: {0}")]
    InvalidComplex(ValidationReport),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(ValidationReport),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("result too large: {size} exceeds cap {cap}")]
    ResultTooLarge { size: String, cap: u64 },

    #[error("instance too large: {size} assignments exceed cap {cap}")]
    InstanceTooLarge { size: String, cap: u64 },

    #[error("homotopy target is not a morphism: {0}")]
    TargetNotMorphism(String),

    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
