use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not an admissible prime (need an odd prime below 2^32)")]
    InvalidPrime(u64),

    #[error("characteristic {p} divides {value}")]
    BadCharacteristic { p: u64, value: u64 },

    #[error("prime {p} does not satisfy {modulus} | p - 1 (needed for roots of unity)")]
    MissingRoots { p: u64, modulus: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("parameterization does not have full rank ({rank} < {expected})")]
    RankDeficient { rank: usize, expected: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("hypersurface is singular along the subspace")]
    SingularAlongSubspace,

    #[error("subspace is not contained in the hypersurface")]
    NotContained,

    #[error("random construction failed after {attempts} attempts: {reason}")]
    RetriesExhausted { attempts: usize, reason: String },

    /// Two independent computation routes disagreed. Indicates a bug in the
    /// toolkit, never a mathematical discrepancy.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
