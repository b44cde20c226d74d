use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("site shift {shift} moves site {site} below 1")]
    ShiftUnderflow { site: u32, shift: i64 },
    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{component} does not lie in the Euler span; remainder has {terms} terms")]
    NonzeroRemainder { component: String, terms: usize },
    #[error("{component}(0) is nonzero")]
    ZeroValueViolation { component: String },
    #[error("B(x)B(-x) is not a scalar multiple of the identity")]
    NotScalar,
    #[error("matrix is not of truncated shape: {0}")]
    ShapeViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
