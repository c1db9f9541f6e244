use thiserror::Error;

/// Errors surfaced by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ideal is not artinian; colength is infinite")]
    InfiniteColength,

    #[error("direction vector must be nonzero")]
    ZeroDirection,

    #[error("direction vector is not primitive")]
    NonPrimitiveDirection,

    #[error("direction vector must have both positive and negative entries")]
    NotMixedSign,

    #[error("weight rows do not define a term order: column {0} has a negative leading weight")]
    InvalidTermOrder(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("graded fiber is infinite; grading is not positive")]
    InfiniteFiber,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("face sets must have disjoint vertex supports")]
    OverlappingSupports,

    #[error("flip is not square-free: witness face {0} lies in X ∩ (F * {{b}})")]
    NotSquareFree(String),
}

pub type Result<T> = std::result::Result<T, Error>;
