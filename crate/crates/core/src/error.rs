use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::Graph6Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexIndex(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency rows not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("cannot parse family spec {0:?}")]
    Syntax(String),
    #[error("family parameter out of range: {0}")]
    OutOfRange(String),
    #[error("family graph would have {0} vertices; at most 64 are supported")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("interpolation node {0} appears twice")]
    DuplicateNode(BigInt),
    #[error("inexact division {numerator} / {denominator} during interpolation")]
    InexactDivision { numerator: BigInt, denominator: BigInt },
    #[error("no interpolation points")]
    NoPoints,
    #[error("malformed canonical encoding at byte {0}")]
    Encoding(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Interpolation(#[from] PolyError),
    #[error("values of the coefficient of x^(n-{j}) are not those of an integer polynomial")]
    InexactCoefficient { j: usize },
    #[error("coefficient of x^(n-{j}) has alpha-degree {degree} > {j}")]
    DegreeBound { j: usize, degree: usize },
    #[error("loop-weight expansion needs n <= {max}, got {n}")]
    TooManyVertices { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("polynomial is not monic in x")]
    NonMonic,
    #[error("polynomial has x-degree {0}; need 1..=64")]
    Degree(usize),
    #[error("inconsistent polynomial: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("line {line}: graph has {found} vertices, earlier records have {expected}")]
    MixedOrder {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("no graph6 records in input")]
    EmptyInput,
    #[error("cospectral family contains isomorphic graphs {0} and {1}")]
    IsomorphicDuplicates(String, String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
