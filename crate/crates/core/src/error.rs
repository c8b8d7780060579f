use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u64, u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero vector")]
    ZeroVector,
    #[error("empty state")]
    EmptyState,
    #[error("empty candidate set")]
    EmptyCandidates,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("determinant is not 1")]
    DeterminantNotOne,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
