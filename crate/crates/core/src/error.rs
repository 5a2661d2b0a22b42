use thiserror::Error;

/// Errors from the text formats (matrix files, algebra description files).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("unexpected end of input: {0}")]
    UnexpectedEof(String),
}

impl ParseError {
    pub(crate) fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax { line, column, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("zero matrix has no full-rank factorization")]
    ZeroMatrix,
    #[error("matrix has no Moore-Penrose inverse over its field")]
    NotMPInvertible,
    #[error("matrix has no group inverse (Drazin index {index})")]
    NoGroupInverse { index: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension {0} outside the supported range 1..=16")]
    UnsupportedDimension(usize),
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit vector is not a two-sided identity on basis element {0}")]
    BadUnit(usize),
    #[error("involution is not an anti-automorphism on basis pair ({0}, {1})")]
    NotAntiMultiplicative(usize, usize),
    #[error("involution does not square to the identity on basis element {0}")]
    NotInvolutive(usize),
    #[error("involution does not fix the unit")]
    UnitNotFixed,
    #[error("element has no Moore-Penrose inverse")]
    NotMPInvertible,
    #[error("element has no Drazin inverse of index <= {max_index}")]
    NotDrazin { max_index: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error("`{0}` is not a projection")]
    NotProjection(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("not applicable: {0}")]
    Inapplicable(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SourceError {
    #[error("rank {rank} exceeds matrix size {n}")]
    RankTooLarge { rank: usize, n: usize },
    #[error("no projection generated after {0} attempts")]
    GenerationFailed(usize),
    #[error("exhaustive enumeration of {0} candidates is too large")]
    TooLarge(u128),
    #[error("field `{0}` is infinite and cannot be enumerated")]
    NotEnumerable(String),
}
