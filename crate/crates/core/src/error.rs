use thiserror::Error;

/// What went wrong while reading or constructing a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphDefect {
    #[error("loop edge {u}-{v}")]
    LoopEdge { u: usize, v: usize },
    #[error("parallel edge {u}-{v}")]
    ParallelEdge { u: usize, v: usize },
    #[error("vertex {v} out of range 1..={max}")]
    VertexOutOfRange { v: usize, max: usize },
    #[error("{0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A graph file failed to parse; `line` is 1-based in the original text.
    #[error("parse error at line {line}: {defect}")]
    Parse { line: usize, defect: GraphDefect },
    /// A programmatically constructed graph violated an invariant.
    #[error("invalid graph: {0}")]
    Graph(GraphDefect),
    #[error("{what} guard exceeded: {actual} > {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("numbering is not a permutation of 1..={n}")]
    InvalidNumbering { n: usize },
    #[error("edge set is not a matching: edges {e1} and {e2} share a vertex")]
    NotAMatching { e1: usize, e2: usize },
    #[error("point lies on hyperplane {index}")]
    OnHyperplane { index: usize },
    #[error("no generic point found after {attempts} draws")]
    SamplingExhausted { attempts: usize },
    #[error("strict constraint has a zero normal vector")]
    ZeroConstraint,
    #[error("hyperplane index {index} out of range for {len} hyperplanes")]
    HyperplaneIndex { index: usize, len: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot place {e} edges on {v} vertices")]
    InfeasibleEdgeCount { v: usize, e: usize },
    #[error("hyperplane normal must be nonzero with entries in {{-1,0,1}}")]
    BadNormal,
}

pub type Result<T> = std::result::Result<T, Error>;
