//! Runtime selection of a model by name, for the command line.

use std::fmt;

use sdiag_core::{Op, Term};

use crate::corelation::Corelation;
use crate::cospan::FinCospan;
use crate::error::SemanticsError;
use crate::function::FinFunction;
use crate::matrix::Matrix;
use crate::model::*;
use crate::relation::FinRelation;
use crate::span::FinSpan;
use crate::word::WordMor;

pub const MODEL_NAMES: [&str; 12] = [
    "finset-sum",
    "finset-product",
    "finrel-sum",
    "finrel-product",
    "span-sum",
    "cospan",
    "corelation",
    "matrix-bool",
    "matrix-nat",
    "matrix-rational",
    "word",
    "coword",
];

#[derive(Clone, Debug)]
pub enum AnyModel {
    FinSetSum(FinSetSum),
    FinSetProduct(FinSetProduct),
    FinRelSum(FinRelSum),
    FinRelProduct(FinRelProduct),
    SpanSum(SpanSum),
    Cospan(CospanModel),
    Corelation(CorelationModel),
    MatrixBool(MatrixModel<bool>),
    MatrixNat(MatrixModel<u64>),
    MatrixRational(MatrixModel<Q>),
    Word(WordModel),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Function(FinFunction),
    Relation(FinRelation),
    Span(FinSpan),
    Cospan(FinCospan),
    Corelation(Corelation),
    MatrixBool(Matrix<bool>),
    MatrixNat(Matrix<u64>),
    MatrixRational(Matrix<Q>),
    Word(WordMor),
}

macro_rules! each {
    ($self:expr, $m:ident => $body:expr) => {
        match $self {
            AnyModel::FinSetSum($m) => $body,
            AnyModel::FinSetProduct($m) => $body,
            AnyModel::FinRelSum($m) => $body,
            AnyModel::FinRelProduct($m) => $body,
            AnyModel::SpanSum($m) => $body,
            AnyModel::Cospan($m) => $body,
            AnyModel::Corelation($m) => $body,
            AnyModel::MatrixBool($m) => $body,
            AnyModel::MatrixNat($m) => $body,
            AnyModel::MatrixRational($m) => $body,
            AnyModel::Word($m) => $body,
        }
    };
}

impl AnyModel {
    /// One of [`MODEL_NAMES`]. The matrix models over bool and ℕ use the
    /// direct sum; the rational one uses the Kronecker product.
    pub fn from_name(name: &str) -> Result<AnyModel, SemanticsError> {
        Ok(match name {
            "finset-sum" => AnyModel::FinSetSum(model_finset_sum()),
            "finset-product" => AnyModel::FinSetProduct(model_finset_product()),
            "finrel-sum" => AnyModel::FinRelSum(model_finrel_sum()),
            "finrel-product" => AnyModel::FinRelProduct(model_finrel_product()),
            "span-sum" => AnyModel::SpanSum(model_span_sum()),
            "cospan" => AnyModel::Cospan(model_cospan()),
            "corelation" => AnyModel::Corelation(model_corelation()),
            "matrix-bool" => AnyModel::MatrixBool(model_matrix(TensorMode::DirectSum)),
            "matrix-nat" => AnyModel::MatrixNat(model_matrix(TensorMode::DirectSum)),
            "matrix-rational" => AnyModel::MatrixRational(model_matrix(TensorMode::Kronecker)),
            "word" => AnyModel::Word(model_words(false, false)),
            "coword" => AnyModel::Word(model_words(false, true)),
            _ => return Err(SemanticsError::UnknownModel(name.to_string())),
        })
    }

    pub fn name(&self) -> String {
        each!(self, m => m.name())
    }

    pub fn bind_size(&mut self, sort: &str, n: usize) {
        each!(self, m => m.bindings_mut().bind_size(sort, n))
    }

    pub fn supports(&self, o: &Op) -> bool {
        each!(self, m => m.supports(o))
    }

    pub fn eval(&self, t: &Term) -> Result<Value, SemanticsError> {
        Ok(match self {
            AnyModel::FinSetSum(m) => Value::Function(eval(m, t)?),
            AnyModel::FinSetProduct(m) => Value::Function(eval(m, t)?),
            AnyModel::FinRelSum(m) => Value::Relation(eval(m, t)?),
            AnyModel::FinRelProduct(m) => Value::Relation(eval(m, t)?),
            AnyModel::SpanSum(m) => Value::Span(eval(m, t)?),
            AnyModel::Cospan(m) => Value::Cospan(eval(m, t)?),
            AnyModel::Corelation(m) => Value::Corelation(eval(m, t)?),
            AnyModel::MatrixBool(m) => Value::MatrixBool(eval(m, t)?),
            AnyModel::MatrixNat(m) => Value::MatrixNat(eval(m, t)?),
            AnyModel::MatrixRational(m) => Value::MatrixRational(eval(m, t)?),
            AnyModel::Word(m) => Value::Word(eval(m, t)?),
        })
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Function(v) => v.fmt(f),
            Value::Relation(v) => v.fmt(f),
            Value::Span(v) => v.fmt(f),
            Value::Cospan(v) => v.fmt(f),
            Value::Corelation(v) => v.fmt(f),
            Value::MatrixBool(v) => v.fmt(f),
            Value::MatrixNat(v) => v.fmt(f),
            Value::MatrixRational(v) => v.fmt(f),
            Value::Word(v) => v.fmt(f),
        }
    }
}
