use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("{a} has no inverse modulo {m}")]
    NotInvertible { a: String, m: String },
    #[error("intermediate value does not fit the integer type")]
    Overflow,
    #[error("argument out of range: {0}")]
    Domain(String),
    #[error("the sequence with difference 1 and modulus 2 is its own sibling")]
    SelfSibling,
    #[error("the previous level has 2*diff = modulus, so its sibling level is undefined")]
    InvalidLevel,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("oracle size guard exceeded: {0}")]
    OracleTooLarge(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
