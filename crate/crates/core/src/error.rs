use thiserror::Error;

/// Broad failure class, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Input violates a structural or arithmetic precondition.
    Validation,
    /// A computed quantity that must be a positive integer was not, or two
    /// independent routes disagreed.
    Arithmetic,
    /// Text input could not be read.
    Parse,
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("graph is not well-formed: {0}")]
    MalformedGraph(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("polynomials over different fields (q = {0} and q = {1})")]
    FieldMismatch(u64, u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0}")]
    InvalidPolynomial(String),
    #[error("cannot factor zero")]
    FactorZero,

    #[error("invalid quaternion data: {0}")]
    InvalidInput(String),
    #[error("P({n}) = {value}, expected 0")]
    NotARoot { n: String, value: String },
    #[error("characteristic polynomial has degree {got}, class number is {expected}")]
    DegreeMismatch { got: usize, expected: String },
    #[error("non-integral result: {0}")]
    NonIntegral(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("Brandt matrix rejected: {0}")]
    InvalidBrandt(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            NonIntegral(_) | Inconsistent(_) => ErrorKind::Arithmetic,
            Parse { .. } => ErrorKind::Parse,
            _ => ErrorKind::Validation,
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
