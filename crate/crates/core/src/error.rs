use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2 < p < 2^31")]
    InvalidPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("exponent overflow: exponents are limited to {max}")]
    ExponentOverflow { max: u32 },

    #[error("too many variables: {0} (at most {max} supported)", max = crate::ring::MAX_VARS)]
    TooManyVariables(usize),

    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("geometric precondition failed: {0}")]
    Geometry(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("window [{lo}, {hi}] is too narrow: {reason}; widen the window")]
    WidenWindow { lo: i32, hi: i32, reason: String },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("retries exhausted after {attempts} attempts: {reason}")]
    RetriesExhausted { attempts: usize, reason: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
