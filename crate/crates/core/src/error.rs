use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degenerate q-number: base equals 1")]
    DegenerateQNumber,
    #[error("pole at assignment {assignment}: denominator {denominator} vanishes")]
    Pole { assignment: String, denominator: String },
    #[error("variable {0} has no value in the assignment")]
    MissingVariable(String),
    #[error("unknown variable name {0:?}")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("leg indices out of range: {0}")]
    LegOutOfRange(String),
    #[error("matrix is singular")]
    Singular,
    #[error("argument not nilpotent within {0} powers")]
    NotNilpotent(usize),
    #[error("fractional exponent of s: {0}")]
    FractionalExponent(String),
    #[error("factorized R-matrix disagrees with the direct form at ({row}, {col})")]
    OrderingViolation { row: usize, col: usize },
    #[error("inconsistent parameter system at entry ({row}, {col}): {lhs} vs {rhs}")]
    Inconsistent {
        row: usize,
        col: usize,
        lhs: String,
        rhs: String,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
