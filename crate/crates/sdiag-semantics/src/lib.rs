//! Evaluation of string diagrams in concrete finite models: functions,
//! relations, spans, cospans, corelations, matrices and free (co)monoids.

pub mod any;
pub mod check;
pub mod corelation;
pub mod cospan;
pub mod encode;
pub mod error;
pub mod function;
pub mod matrix;
pub mod model;
pub mod relation;
pub mod span;
pub mod trace;
pub mod word;

pub use any::{AnyModel, Value, MODEL_NAMES};
pub use check::{functor_check, random_relation, supported_structure, traced_axioms, AxiomTally, FunctorReport};
pub use corelation::Corelation;
pub use cospan::FinCospan;
pub use encode::{corel_to_diagram, cospan_to_diagram, fn_to_diagram, rel_to_diagram, span_to_diagram};
pub use error::SemanticsError;
pub use function::FinFunction;
pub use matrix::{Matrix, Semiring};
pub use model::{
    eval, model_corelation, model_cospan, model_finrel_product, model_finrel_sum, model_finset_product,
    model_finset_sum, model_matrix, model_span_sum, model_words, Bindings, CorelationModel, CospanModel, FinRelProduct,
    FinRelSum, FinSetProduct, FinSetSum, MatrixModel, Model, SpanSum, TensorMode, WordModel, Q,
};
pub use relation::FinRelation;
pub use span::FinSpan;
pub use trace::{cap_word, cup_word, trace_via_compact, trace_word};
pub use word::WordMor;
