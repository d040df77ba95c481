use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("generator count mismatch: {left} vs {right}")]
    GeneratorMismatch { left: usize, right: usize },
    #[error("letter {letter} out of range for {n} generators")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure constants are not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiFailure { i: usize, j: usize, k: usize },
    #[error("subspace is not closed under the bracket")]
    NotBracketClosed,
    #[error("matrix is not square")]
    NotSquare,
    #[error("realization failed verification")]
    RealizationFailed,
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
