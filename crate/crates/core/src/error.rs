use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("zero coefficient at line {line}, column {column}")]
    ZeroCoefficient { line: usize, column: usize },

    /// Equation indices are 0-based; messages count from 1.
    #[error("equation {} cancels to the zero polynomial", .equation + 1)]
    ZeroPolynomial { equation: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("equation {} has {terms} term(s), expected a binomial", .equation + 1)]
    NotBinomial { equation: usize, terms: usize },

    #[error("variable `{0}` occurs with a negative exponent and cannot be set to zero")]
    DroppedVariable(String),

    #[error("variable index {0} is out of range or not an incidence column")]
    UnknownVariable(usize),

    #[error("row {row} out of range ({rows} rows)")]
    RowOutOfRange { row: usize, rows: usize },

    #[error("equation {} is mixed under the selection: exactly one monomial vanishes", .equation + 1)]
    MixedEquation { equation: usize },

    #[error("toric system has {count} branches, exceeding the limit of {limit}")]
    BranchLimit { count: String, limit: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("monomial map for selection {selection:?} failed verification")]
    VerificationFailed { selection: Vec<String> },
}
