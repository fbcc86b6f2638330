use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("binomial C({n}, {m}) requires m <= n")]
    BinomialOutOfRange { n: u64, m: u64 },

    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,

    /// Raised wherever a solve divides by `4x - 1`.
    #[error("x = 1/4 is excluded: the factor 4x - 1 vanishes")]
    SingularPoint,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two routes to the same exact quantity disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Short, stable tag used in machine-readable error lines.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NOT_PRIME",
            Error::BinomialOutOfRange { .. } => "BINOMIAL_OUT_OF_RANGE",
            Error::NonExactDivision => "NON_EXACT_DIVISION",
            Error::DivisionByZeroPolynomial => "DIVISION_BY_ZERO_POLYNOMIAL",
            Error::SingularPoint => "SINGULAR_POINT",
            Error::Parse(_) => "PARSE",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
            Error::Inconsistent(_) => "INCONSISTENT",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
