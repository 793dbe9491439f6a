use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed edge `{content}` (expected two nonnegative integers)")]
    Malformed { line: usize, content: String },

    /// `line` is the 1-based line number for parsed text, or the 1-based edge
    /// ordinal for programmatic construction.
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },

    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("vertex ids must be dense 0..{n}: vertex {vertex} never appears")]
    VertexGap { vertex: Vertex, n: usize },

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("graph is disconnected: no path from {u} to {v}")]
    Disconnected { u: Vertex, v: Vertex },

    #[error("not unicyclic: {vertices} vertices and {edges} edges")]
    NotUnicyclic { vertices: usize, edges: usize },

    #[error("not a tree: {vertices} vertices and {edges} edges")]
    NotATree { vertices: usize, edges: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{what} has size {found}, graph has {expected} vertices")]
    SizeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{solver} solver capped at n = {cap}, graph has {n} vertices")]
    CapExceeded {
        solver: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("{construction}: hypothesis violated: {hypothesis}")]
    Precondition {
        construction: &'static str,
        hypothesis: String,
    },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("instance {id}: {source}")]
    Instance { id: String, source: Box<Error> },
}

impl Error {
    pub(crate) fn at_instance(self, id: impl Into<String>) -> Self {
        Error::Instance {
            id: id.into(),
            source: Box::new(self),
        }
    }
}
