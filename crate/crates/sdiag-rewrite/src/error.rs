use sdiag_core::{GraphError, SyntaxError, Word};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("unknown theory `{0}`")]
    UnknownTheory(String),
    #[error("boundary mismatch: {left_dom} -> {left_cod} vs {right_dom} -> {right_cod}")]
    BoundaryMismatch {
        left_dom: Word,
        left_cod: Word,
        right_dom: Word,
        right_cod: Word,
    },
    #[error("match is stale: the host graph changed since matching")]
    StaleMatch,
    #[error("no rule named `{0}`")]
    NoSuchRule(String),
    #[error("rule `{rule}` has {available} matches, index {index} requested")]
    NoSuchMatch { rule: String, index: usize, available: usize },
    #[error("spider normal form needs Frobenius generators of one sort, found `{0}`")]
    MixedGenerators(String),
    #[error("invalid rule `{name}`: {reason}")]
    InvalidRule { name: String, reason: String },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
