use thiserror::Error;

/// Errors raised by tuple construction and the numeric kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("element {index} is {value}; values must be strictly positive and finite")]
    NonPositive { index: usize, value: f64 },

    #[error("tuple is empty")]
    Empty,

    #[error("tuple lengths differ: a has {a}, b has {b}")]
    LengthMismatch { a: usize, b: usize },

    #[error("the single-tuple functional is undefined at p = 0")]
    UndefinedAtZero,

    #[error("invalid exponent {0}: finite exponents must be nonzero with |p| <= 2^30")]
    InvalidExponent(f64),

    #[error("exponent must be finite and nonzero here, got {0}")]
    FiniteExponentRequired(String),

    #[error("operation needs at least {min} elements, got {got}")]
    TooShort { min: usize, got: usize },

    #[error("instance too large for exhaustive enumeration: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("result is outside the floating-point range")]
    OutOfRange,

    #[error("stream accumulator is empty")]
    EmptyStream,

    #[error("divergence probe requires p > 0, got {0}")]
    Orientation(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
