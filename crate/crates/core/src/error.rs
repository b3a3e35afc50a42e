use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("divisor must be monic in x over F_p[t]")]
    NonMonicDivisor,

    #[error("{name} = {value} out of range, expected {expected}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        expected: String,
    },

    #[error("polynomial is not homogeneous of degree {expected}")]
    WrongDegree { expected: u32 },

    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid hom problem: {0}")]
    InvalidProblem(String),

    /// An invariant that the underlying mathematics guarantees did not hold.
    /// Either the engine has a bug or the statement it encodes is false.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(name: &'static str, value: impl Into<i64>, expected: &str) -> Error {
    Error::OutOfRange {
        name,
        value: value.into(),
        expected: expected.to_string(),
    }
}
