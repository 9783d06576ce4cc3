use thiserror::Error;

/// Errors produced by graph construction, the matching routines, the
/// decomposition pipeline and the text front ends.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("vertex {0} is not a vertex of this graph")]
    UnknownVertex(usize),

    #[error("cannot contract an empty vertex set")]
    EmptyContraction,

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    /// An augmenting path exists, so the supplied matching is not maximum.
    #[error("matching is not maximum: an augmenting path exists")]
    NotMaximum,

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural statement that must hold for every graph failed. This
    /// always indicates a defect in the implementation, never bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("relation is not a partial order: {0}")]
    NotAPoset(String),

    #[error("graph has {vertices} vertices, oracle limit is {limit}")]
    OracleGuard { vertices: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
