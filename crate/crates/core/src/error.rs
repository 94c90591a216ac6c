use thiserror::Error;

/// Errors raised by the algebraic kernels.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("not divisible: remainder {witness}")]
    NotDivisible { witness: String },
    #[error("variable {0} outside the declared range")]
    VariableOutOfRange(String),
    #[error("unassigned variable {0}")]
    Unassigned(String),
    #[error("negative power of {0} with a non-invertible image")]
    NonInvertibleImage(String),
    #[error("unsupported root system {0}")]
    UnsupportedRank(String),
    #[error("unknown root {0}")]
    UnknownRoot(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("exact division failed in {0}")]
    ExactDivisionFailure(String),
    #[error("step-one image of {root} is not divisible by its B factor")]
    NotDivisibleByB { root: String },
    #[error("not a two-step root: {0}")]
    NotTwoStep(String),
    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),
    #[error("degree vector mismatch: {0}")]
    GradingMismatch(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
