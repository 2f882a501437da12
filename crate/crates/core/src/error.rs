use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-integral entry {value} at ({row}, {col})")]
    NonIntegral {
        row: usize,
        col: usize,
        value: BigRational,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("elements belong to different orders ({left} vs {right})")]
    CaseMismatch { left: String, right: String },

    #[error("prime {p} is not admissible: {reason}")]
    InadmissiblePrime { p: u64, reason: String },

    #[error("invalid root lattice kind: {0}")]
    InvalidRootKind(String),

    #[error("discriminant {disc} is divisible by p = {p}; use the adjusted bound")]
    PrimeDividesDiscriminant { disc: BigInt, p: u64 },

    #[error("glue vector {glue} pairs non-integrally with {other}: {value}")]
    NonIntegralGlue {
        glue: usize,
        other: String,
        value: BigRational,
    },

    #[error("inconsistent cover chain at step {step}: {reason}")]
    InconsistentChain { step: usize, reason: String },

    #[error("invalid component {component} for fiber {fiber}")]
    InvalidComponent { fiber: String, component: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("unknown claim id: {0}")]
    UnknownClaim(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
