use thiserror::Error;

/// Errors raised by the exact algebra and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("dimension {0} outside supported range 1..={max}", max = crate::exterior::MAX_DIM)]
    UnsupportedDimension(usize),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("expected bidegree {expected:?}, found {found}")]
    WrongBidegree {
        expected: (usize, usize),
        found: String,
    },

    #[error("form is not real (not fixed by conjugation)")]
    NotReal,

    #[error("matrix is not Hermitian at ({0}, {1})")]
    NotHermitian(usize, usize),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("matrix is not square or rows have unequal length")]
    Shape,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("{0} is out of range")]
    OutOfRange(String),

    #[error("Q(h) = 0; the primitive space is not a complement of h")]
    DegenerateAnchor,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("vectors are not proportional; the null-cone lemma was contradicted")]
    NotProportional,

    #[error("not strictly positive: {0}")]
    NotStrictlyPositive(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
