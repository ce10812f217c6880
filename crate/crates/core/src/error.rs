//! Error types for every fallible operation in the crate.

use thiserror::Error;

use crate::graph::{Edge, Vertex};
use crate::product::Factor;
use crate::verify::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("{edge} is not an edge of the host graph")]
    NotInHost { edge: Edge },
    #[error("expected {expected} vertex labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("invalid {family} parameters: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("repeated `p` header")]
    RepeatedHeader,
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(Vertex),
    #[error("endpoint {vertex} out of range (n = {n})")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("bad product header: {0}")]
    ProductHeader(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("factor {0:?} is disconnected")]
    DisconnectedFactor(Factor),
    #[error("factor {0:?} has no vertices")]
    EmptyFactor(Factor),
    #[error("{what} index {index} out of range (limit {limit})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },
    #[error("{0} is not an edge of factor G")]
    NotAFactorEdge(Edge),
    #[error("unsupported operation: {0}")]
    Unsupported(&'static str),
    #[error("graph does not match the declared product structure: {0}")]
    Structure(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("not a spanning tree of its host: {0}")]
    NotSpanningTree(String),
    #[error("subgraph does not reach vertex {0}")]
    Separated(Vertex),
    #[error("{0} is not an edge of the host graph")]
    NotInHost(Edge),
    #[error("tree has {found} vertices but the factor has {expected}")]
    FactorMismatch { expected: usize, found: usize },
    #[error("invalid leaf split: {0}")]
    InvalidSplit(String),
    #[error(transparent)]
    Product(#[from] ProductError),
}

#[derive(Debug, Clone, Error)]
pub enum PackError {
    #[error("factor {factor:?} packing, tree {tree}: {reason}")]
    InvalidPacking {
        factor: Factor,
        tree: usize,
        reason: String,
    },
    #[error("factor {factor:?} packing is empty")]
    EmptyPacking { factor: Factor },
    #[error("factor {factor:?} needs at least 2 vertices, has {n}")]
    FactorTooSmall { factor: Factor, n: usize },
    #[error("infeasible plan: {0}")]
    Infeasible(String),
    #[error("construction produced an invalid packing:\n{0}")]
    Construction(Box<VerificationReport>),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph is disconnected (vertex {0} unreachable from 0)")]
    Disconnected(Vertex),
    #[error("graph needs at least 2 vertices, has {0}")]
    TooSmall(usize),
    #[error("exhaustive partition search is limited to {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("internal oracle failure: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Error)]
pub enum CatalogError {
    #[error("row ({row}): {reason}")]
    InvalidRow { row: u8, reason: String },
    #[error("instance has {n} vertices, limit is {max}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Pack(#[from] PackError),
}
