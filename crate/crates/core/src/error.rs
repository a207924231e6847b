use thiserror::Error;

/// Errors produced by the decoder library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be positive")]
    ZeroExtension,
    #[error("field of order {characteristic}^{degree} exceeds the 2^20 element limit")]
    FieldTooLarge { characteristic: u64, degree: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("element code {code} out of range for GF({q})")]
    ElementOutOfRange { code: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
    #[error("invalid position set: {0}")]
    InvalidPositions(String),
    #[error("{p} does not divide n = {n}")]
    NotDivisor { p: usize, n: usize },
    #[error("invalid error pattern: {0}")]
    InvalidErrors(String),
    #[error("invalid decoder parameters: {0}")]
    InvalidParams(String),
    #[error("no interpolation solution; parameters infeasible for this radius")]
    NoSolution,
    #[error("pruned row {row} (position {position}) is not identically zero")]
    NonzeroPrunedRow { row: usize, position: usize },
    #[error("degree overflow: deg Q_{nu} = {degree} exceeds bound {bound}")]
    DegreeOverflow {
        nu: usize,
        degree: usize,
        bound: i64,
    },
    #[error("zero polynomial has no well-defined y-roots")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
