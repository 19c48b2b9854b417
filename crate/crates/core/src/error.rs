use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("edge {u}-{v} is a loop")]
    Loop { u: usize, v: usize },

    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("edge {edge} out of range (graph has {edge_count} edges)")]
    EdgeOutOfRange { edge: usize, edge_count: usize },

    #[error("graph is not a tree")]
    NotATree,

    #[error("edge {edge} is not incident to vertex {vertex}")]
    NotIncident { edge: usize, vertex: usize },

    #[error("sequence is not a link of the graph: {0}")]
    NotALink(String),

    #[error("{what}: {count} exceeds the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        count: usize,
        cap: usize,
    },

    #[error("s = {s} exceeds l = {ell}")]
    LengthOrder { s: usize, ell: usize },

    #[error("graph is not {ell}-minimal")]
    NotMinimal { ell: usize },

    #[error("invalid recipe: {0}")]
    Recipe(String),

    #[error("invalid partition: {0}")]
    Partition(#[from] crate::partition::PartitionViolation),

    #[error("search budget exceeded: {reason} ({candidates} candidates generated, {pruned} pruned, {roots} roots so far)")]
    Budget {
        reason: String,
        candidates: u64,
        pruned: u64,
        roots: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
