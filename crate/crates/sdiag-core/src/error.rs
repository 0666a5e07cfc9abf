use thiserror::Error;

use crate::hypergraph::NodeId;
use crate::syntax::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown sort `{0}`")]
    UnknownSort(String),
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("`{0}` is not a valid identifier")]
    InvalidIdentifier(String),
    #[error("type mismatch: left coarity {left_coarity} vs right arity {right_arity}")]
    TypeMismatch { left_coarity: Word, right_arity: Word },
    #[error("term is not built from identities and symmetries only")]
    NotPermutationTerm,
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("boundary mismatch: {left} vs {right}")]
    BoundaryMismatch { left: Word, right: Word },
    #[error("graph is not monogamous at node {node}: {violation}")]
    NotMonogamous { node: NodeId, violation: String },
    #[error("graph has a directed cycle through hyperedges")]
    CyclicGraph,
    #[error("node {0} does not exist")]
    NoSuchNode(NodeId),
    #[error("hyperedge {edge} does not fit the type of `{op}`")]
    EdgeTypeMismatch { edge: usize, op: String },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}
