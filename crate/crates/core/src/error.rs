use thiserror::Error;

use crate::gf::Level;

/// Errors produced by field construction, code analysis and the radius engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    /// A configured size cap would be exceeded.
    #[error("size cap exceeded for {what}: needs {needed}, cap is {cap}")]
    SizeCapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("the quadratic character needs odd characteristic")]
    EvenCharacteristic,
    #[error("element does not lie in the requested subfield")]
    NotInSubfield,
    #[error("level {0:?} is not available in this field")]
    LevelUnavailable(Level),
    /// A closed form disagreed with direct computation. Always an implementation bug.
    #[error("closed form mismatch: {0}")]
    FormulaMismatch(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("the half code is defined only for odd q0")]
    HalfVariantNeedsOddQ0,
    #[error("word length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not found: {0}")]
    NotFound(String),
    #[error("covering radius of C_{s}({q0}) is undecidable under the current caps")]
    Undecidable { q0: u64, s: u32 },
    /// Two independent methods produced different answers.
    #[error("methods disagree: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
