use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("no monic irreducible polynomial of degree {r} over F_{p}")]
    NoIrreducibleFound { p: u64, r: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("expected {expected} variables, got {got}")]
    VariableCountMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("element rank {rank} out of range for F_{q}")]
    ElementOutOfRange { rank: u64, q: u64 },
    #[error("transposition needs two distinct points")]
    EqualPoints,
    #[error("{family} does not apply to F_{q}: {reason}")]
    UnsupportedField {
        family: &'static str,
        q: u64,
        reason: String,
    },
    #[error("no non-residue of order {order} in F_{q}")]
    NoNonResidue { order: u64, q: u64 },
    #[error("polynomial has total degree {got}, expected {expected}")]
    BadDegree { expected: i64, got: i64 },
    #[error("no admissible b: {0}")]
    NoValidB(String),
    #[error("input is not a maximum-degree local permutation polynomial: {0}")]
    NotMaxLpp(String),
    #[error("workload of {needed} exceeds cap {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
