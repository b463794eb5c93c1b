use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("{0} is not a Coxeter word (each generator exactly once)")]
    NotCoxeterWord(String),

    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: String, limit: usize },

    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("the given positions do not form a face")]
    NotAFace,

    #[error("the given positions do not form a facet")]
    NotAFacet,

    #[error("subword complex is not spherical: Demazure product differs from the target")]
    NotSpherical,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
