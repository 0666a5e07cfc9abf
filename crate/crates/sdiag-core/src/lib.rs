//! Typed string diagrams over monoidal signatures and their open
//! hypergraph representation.
//!
//! Terms are syntax trees; [`OpenHypergraph`] quotients them by the
//! structural laws of symmetric monoidal categories, and
//! [`canon::canonical_form`] decides equality of the quotient.

pub mod canon;
pub mod error;
pub mod extract;
pub mod frob;
pub mod hypergraph;
pub mod perm;
pub mod random;
pub mod serial;
pub mod structure;
pub mod syntax;
pub mod unionfind;

pub use canon::{canonical_form, iso_check, CanonicalGraph};
pub use error::{GraphError, SyntaxError};
pub use extract::to_term;
pub use frob::{absorb, from_term_frob, to_term_frob};
pub use hypergraph::{from_term, Hyperedge, MonogamyViolation, MonogamyWitness, NodeId, OpenHypergraph};
pub use perm::{perm_to_term, perm_word_term, term_to_perm, Permutation};
pub use structure::{dual_sort, DualGen, StructGen};
pub use syntax::{
    declare_signature, id_word, op, par, par_all, seq, seq_all, sym_words, type_of, Op, OperationDecl, Signature,
    Sort, Term, TermKind, Word,
};
