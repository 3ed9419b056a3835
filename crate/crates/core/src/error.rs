use thiserror::Error;

/// Errors raised by graph edits, searches and constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("edge {edge} out of range (graph has {edge_count} edges)")]
    EdgeOutOfRange { edge: usize, edge_count: usize },

    #[error("edge set belongs to a different graph")]
    OwnerMismatch,

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("graph is not cubic: {0}")]
    NotCubic(String),

    #[error("malformed mapping: {0}")]
    MalformedMapping(String),

    #[error("mapping is not cycle-continuous: {0}")]
    NotCycleContinuous(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two independent routes disagreed. This indicates a bug, never bad input.
    #[error("internal disagreement: {0}")]
    Disagreement(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
