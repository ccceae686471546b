use thiserror::Error;

/// Errors produced by the group-theory and linear-algebra engines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("enumeration cap exceeded: group has more than {cap} elements")]
    SizeOverflow { cap: usize },

    #[error("coset limit of {max_cosets} exceeded; enumeration inconclusive")]
    CosetLimitExceeded { max_cosets: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown generator name `{0}`")]
    UnknownGenerator(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("codomains differ; subgroups live in different groups")]
    CodomainMismatch,

    #[error("homomorphism is not well defined: {0}")]
    IllFormedHom(String),

    #[error("element lies outside the subgroup: {0}")]
    NotInSubgroup(String),

    #[error("conjugate left the subgroup; it is not normal")]
    NotNormal,

    #[error("quotient is not cyclic")]
    NotCyclic,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("computed value contradicts a proved identity: {0}")]
    IdentityViolation(String),

    #[error("unknown catalog `{0}`")]
    UnknownCatalog(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
