use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("element {0} is not in the group")]
    NotMember(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("index {index} exceeds the coset enumeration ceiling {limit}")]
    IndexCeiling { index: u128, limit: u128 },

    #[error("{what} needs {needed} stored elements, above the ceiling {limit}")]
    StorageCeiling {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("group is not transitive on its moved points")]
    NotTransitive,

    #[error("subgroup index {0} is not prime")]
    IndexNotPrime(u128),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("unknown class {0:?}")]
    UnknownClass(String),

    #[error("catalog line {line}: {message}")]
    Catalog { line: usize, message: String },

    #[error("order mismatch for {name}: declared {declared}, computed {computed}")]
    OrderMismatch {
        name: String,
        declared: u128,
        computed: u128,
    },

    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// True for the resource ceilings that callers may raise and retry.
    pub fn is_ceiling(&self) -> bool {
        matches!(self, Error::IndexCeiling { .. } | Error::StorageCeiling { .. })
    }
}
