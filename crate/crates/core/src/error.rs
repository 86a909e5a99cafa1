use thiserror::Error;

use crate::digraph::{ArcId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown arc {0}")]
    UnknownArc(ArcId),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("illegal flip of arc {added} at vertex {pivot}: {reason}")]
    IllegalFlip {
        added: ArcId,
        pivot: VertexId,
        reason: String,
    },

    #[error("partial tree cannot be completed into an arborescence")]
    NoCompletion,

    #[error("the flip graph has no Hamiltonian path")]
    NoHamiltonianPath,

    #[error("{what} budget of {limit} exceeded")]
    Budget { what: &'static str, limit: usize },

    /// A step that the construction guarantees has failed. Carries the
    /// recursion trace collected so far.
    #[error("internal inconsistency: {message}")]
    Inconsistency {
        message: String,
        provenance: Vec<String>,
    },
}

impl Error {
    pub(crate) fn inconsistency(message: impl Into<String>) -> Self {
        Error::Inconsistency {
            message: message.into(),
            provenance: Vec::new(),
        }
    }
}
