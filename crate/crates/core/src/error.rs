use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("size cap exceeded: {what} needs {requested} entries, cap is {cap} (set HCC_MATRIX_CAP to raise it)")]
    CapExceeded {
        what: &'static str,
        requested: u128,
        cap: usize,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("group mismatch: elements live in different ordered groups")]
    GroupMismatch,

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown generator `{name}` at line {line}, column {column}")]
    UnknownGenerator {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("homomorphism does not respect relator {index} (`{relator}` maps to element {image}, not the identity)")]
    IncompatibleHomomorphism {
        index: usize,
        relator: String,
        image: usize,
    },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("target group is not elementary abelian: {0}")]
    NotElementaryAbelian(String),
}
