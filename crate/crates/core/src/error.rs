use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid denominator: zero")]
    InvalidDenominator,
    #[error("unsupported negative radicand {0}")]
    NegativeRadicand(String),
    #[error("cannot combine surds with radicands {0} and {1}")]
    IncompatibleRadicands(String, String),
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("degenerate roots: {0}")]
    DegenerateRoots(String),
    #[error("bisection did not converge within {0} steps")]
    NoConvergence(u32),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("reconstruction formula degenerate: {0}")]
    FormulaDegenerate(String),
    #[error("not a ratio vector")]
    NotARatioVector,
    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),
    #[error("invalid divisor: zero polynomial")]
    InvalidDivisor,
    #[error("parse error: {0}")]
    Parse(String),
}
