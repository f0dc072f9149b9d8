use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the factoring cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("R is degenerate (det R = 0)")]
    DegenerateR,
    #[error("invalid candidate: {0}")]
    InvalidCandidate(String),
    #[error("integrality violation: {0}")]
    IntegralityViolation(String),
    #[error("degenerate form")]
    DegenerateForm,
    #[error("parity mismatch")]
    ParityMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not an enlargement: {0}")]
    NotAnEnlargement(String),
    #[error("block shape error: {0}")]
    BlockShapeError(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("non-integral adjoint: {0}")]
    NonIntegralAdjoint(String),
    #[error("infinite module: the boundary module is not all Z-torsion")]
    InfiniteModule,
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("lift failure: {0}")]
    LiftFailure(String),
    #[error("cancelled")]
    Cancelled,
}

pub type Result<T> = std::result::Result<T, Error>;
