use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("{what} needs {needed}, above the configured cap {cap}")]
    CapExceeded { what: &'static str, needed: u128, cap: u128 },
    #[error("element {0} is not in the group")]
    NotInGroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("operation needs a nontrivial group")]
    TrivialGroup,
    #[error("group of order {0} is not simple")]
    NotSimple(u128),
    #[error("no simple group of order {0} in the recognition table")]
    UnrecognizedOrder(u128),
    #[error("subgroup is not a component")]
    NotAComponent,
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("centralizer lattice exceeds {0} nodes")]
    LatticeTooLarge(usize),
    #[error("malformed result: {0}")]
    Malformed(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
