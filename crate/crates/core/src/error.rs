use thiserror::Error;

use crate::coloring::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),

    #[error("not a permutation of 1..={n}: {values:?}")]
    InvalidPermutation { n: usize, values: Vec<usize> },

    #[error("malformed specification: {0}")]
    MalformedSpec(String),

    #[error("coloring covers {got} vertices, graph has {expected}")]
    CoverageMismatch { expected: usize, got: usize },

    #[error("class index {class} outside 1..={k}")]
    ClassOutOfRange { class: usize, k: usize },

    #[error("vertices {0} and {1} in an independent part are adjacent")]
    DependentPair(usize, usize),

    #[error("square of the graph restricted to the first part has an odd cycle {0:?}")]
    OddCycle(Vec<usize>),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not connected")]
    NotConnected,

    #[error("input coloring is invalid: {} violation(s)", .0.len())]
    InvalidColoring(Vec<Violation>),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}
