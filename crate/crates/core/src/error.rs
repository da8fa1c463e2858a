use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{numerator} is not divisible by {divisor}")]
    NotDivisible { numerator: String, divisor: String },
    #[error("unsupported divisor {0}: only multiples of x_i - x_j are handled")]
    UnsupportedDivisor(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("t-binomial [{m} choose {k}] out of range")]
    OutOfRange { m: i64, k: i64 },
    #[error("charge needs a dominant weight, got {0:?}")]
    NonDominantWeight(Vec<usize>),
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<i64>),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("series does not terminate: letter {0} has no positive degree")]
    NonTerminating(String),
    #[error("cannot convert from basis {from} to basis {to}")]
    UnsupportedConversion { from: String, to: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
