use thiserror::Error;

/// Domain errors: the inputs parsed fine but violate an operation's preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("not a p-adic integer: the denominator of {0} is divisible by p")]
    NotIntegral(String),
    #[error("precision or prime mismatch: ({0}, {1}) vs ({2}, {3})")]
    Mismatch(u64, u32, u64, u32),
    #[error("residue {0} is divisible by p and is not a unit at this precision")]
    NotUnit(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("sets overlap on label `{0}`")]
    Overlap(String),
    #[error("input is not an ultrametric: {0} violating triples")]
    NotUltrametric(usize),
    #[error("every sample has magnitude 0 or 1 under the first absolute value; exponent is underdetermined")]
    Underdetermined,
    #[error("the absolute value is trivial; no scalar of magnitude strictly between 0 and 1 exists")]
    TrivialAbsoluteValue,
    #[error("power {0} of an exact entry has no exact representation")]
    InexactPower(String),
    #[error("repeated key `{0}`")]
    RepeatedKey(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
}

/// Failures to read textual input (CLI exit code 2).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
