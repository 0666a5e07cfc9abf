//! Equational theories of string diagrams, rewriting on open hypergraphs,
//! and a decision procedure that combines normal forms, bounded search and
//! semantic countermodels.

pub mod decide;
pub mod error;
pub mod matching;
pub mod normal;
pub mod oracle;
pub mod replay;
pub mod spider;
pub mod theory;

pub use decide::{decide_eq, decide_eq_seeded, Decision, Evidence, Verdict};
pub use error::RewriteError;
pub use matching::{apply_rewrite, find_matches, MatchSite};
pub use normal::{normal_key, normalize};
pub use oracle::{find_countermodel, graph_term, theory_models, valid_models, Countermodel};
pub use replay::{replay_derivation, replay_trace};
pub use spider::{planar_genus, spider_normal_form, Spider};
pub use theory::{
    builtin_theory, comult_word, counit_word, mult_word, unit_word, Mode, RewriteRule, Theory, THEORY_NAMES,
};
