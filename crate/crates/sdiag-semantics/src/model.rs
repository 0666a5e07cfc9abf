//! The [`Model`] interface, compositional evaluation, and the shipped models.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use sdiag_core::{DualGen, Op, Sort, StructGen, Term, TermKind, Word};

use crate::corelation::Corelation;
use crate::cospan::FinCospan;
use crate::error::{check_dims, SemanticsError};
use crate::function::{product_swap, sum_swap, FinFunction};
use crate::matrix::{Matrix, Semiring};
use crate::relation::FinRelation;
use crate::span::FinSpan;
use crate::word::WordMor;

/// Sizes bound to sorts and morphisms bound to operation names.
#[derive(Clone, Debug)]
pub struct Bindings<M> {
    sizes: BTreeMap<String, usize>,
    ops: BTreeMap<String, M>,
}

impl<M> Default for Bindings<M> {
    fn default() -> Self {
        Bindings {
            sizes: BTreeMap::new(),
            ops: BTreeMap::new(),
        }
    }
}

impl<M> Bindings<M> {
    /// Unbound sorts have size 1; `x_op` defaults to the size of `x`.
    pub fn size(&self, s: &Sort) -> usize {
        if let Some(&n) = self.sizes.get(s.name()) {
            return n;
        }
        match s.name().strip_suffix("_op") {
            Some(base) => self.sizes.get(base).copied().unwrap_or(1),
            None => 1,
        }
    }

    pub fn bind_size(&mut self, sort: &str, n: usize) {
        self.sizes.insert(sort.to_string(), n);
    }

    pub fn bind_op(&mut self, name: &str, m: M) {
        self.ops.insert(name.to_string(), m);
    }

    pub fn op(&self, name: &str) -> Option<&M> {
        self.ops.get(name)
    }

    pub fn sizes(&self) -> &BTreeMap<String, usize> {
        &self.sizes
    }

    fn sum(&self, w: &Word) -> usize {
        w.iter().map(|s| self.size(s)).sum()
    }

    fn product(&self, w: &Word) -> usize {
        w.iter().map(|s| self.size(s)).product()
    }
}

/// A strict symmetric monoidal category with chosen interpretations of
/// generators. Carriers are finite ordinals; words are sent to sums or
/// products of sort sizes.
pub trait Model {
    type Mor: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn name(&self) -> String;
    fn bindings(&self) -> &Bindings<Self::Mor>;
    fn bindings_mut(&mut self) -> &mut Bindings<Self::Mor>;
    fn carrier(&self, w: &Word) -> usize;
    /// Carrier sizes of the (domain, codomain).
    fn boundary(&self, f: &Self::Mor) -> (usize, usize);
    fn identity(&self, w: &Word) -> Self::Mor;
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor, SemanticsError>;
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn symmetry(&self, x: &Sort, y: &Sort) -> Self::Mor;
    fn structure(&self, g: StructGen, s: &Sort) -> Option<Self::Mor>;

    fn dual(&self, _g: DualGen, _s: &Sort) -> Option<Self::Mor> {
        None
    }

    fn with_size(mut self, sort: &str, n: usize) -> Self
    where
        Self: Sized,
    {
        self.bindings_mut().bind_size(sort, n);
        self
    }

    fn with_op(mut self, name: &str, m: Self::Mor) -> Self
    where
        Self: Sized,
    {
        self.bindings_mut().bind_op(name, m);
        self
    }

    fn generator(&self, o: &Op) -> Result<Self::Mor, SemanticsError> {
        let unsupported = || SemanticsError::UnsupportedStructure {
            model: self.name(),
            structure: o.name.to_string(),
        };
        let m = if let Some(m) = self.bindings().op(&o.name) {
            m.clone()
        } else if let Some((g, s)) = StructGen::recognize(o) {
            self.structure(g, &s).ok_or_else(unsupported)?
        } else if let Some((g, s)) = DualGen::recognize(o) {
            self.dual(g, &s).ok_or_else(unsupported)?
        } else {
            return Err(SemanticsError::UnassignedGenerator(o.name.to_string()));
        };
        let (a, b) = self.boundary(&m);
        check_dims(a, self.carrier(&o.arity))?;
        check_dims(b, self.carrier(&o.coarity))?;
        Ok(m)
    }

    /// Whether `o` has an interpretation, structural or bound.
    fn supports(&self, o: &Op) -> bool {
        self.generator(o).is_ok()
    }
}

/// The structural fold: sequential composition to composition, parallel
/// composition to the monoidal product.
pub fn eval<M: Model + ?Sized>(m: &M, t: &Term) -> Result<M::Mor, SemanticsError> {
    match t.kind() {
        TermKind::Gen(o) => m.generator(o),
        TermKind::Id(w) => Ok(m.identity(w)),
        TermKind::Sym(x, y) => Ok(m.symmetry(x, y)),
        TermKind::Empty => Ok(m.identity(&Word::empty())),
        TermKind::Seq(a, b) => m.compose(&eval(m, a)?, &eval(m, b)?),
        TermKind::Par(a, b) => Ok(m.tensor(&eval(m, a)?, &eval(m, b)?)),
    }
}

fn fold(n: usize) -> FinFunction {
    FinFunction::new(n, (0..2 * n).map(|i| i % n).collect()).expect("fold")
}

fn diagonal(n: usize) -> FinFunction {
    FinFunction::new(n * n, (0..n).map(|i| i * n + i).collect()).expect("diagonal")
}

fn bang(n: usize) -> FinFunction {
    FinFunction::new(1, vec![0; n]).expect("terminal map")
}

fn initial(n: usize) -> FinFunction {
    FinFunction::new(n, Vec::new()).expect("initial map")
}

/// Finite sets and functions under disjoint sum; `mult` folds, `unit` is
/// the empty map.
#[derive(Clone, Debug, Default)]
pub struct FinSetSum {
    bindings: Bindings<FinFunction>,
}

/// Finite sets and functions under Cartesian product; `comult` is the
/// diagonal and `counit` the map to the point.
#[derive(Clone, Debug, Default)]
pub struct FinSetProduct {
    bindings: Bindings<FinFunction>,
}

/// Relations under disjoint sum, routing a single token.
#[derive(Clone, Debug, Default)]
pub struct FinRelSum {
    bindings: Bindings<FinRelation>,
}

/// Relations under Cartesian product, with the diagonal Frobenius structure
/// and the cups and caps it induces.
#[derive(Clone, Debug, Default)]
pub struct FinRelProduct {
    bindings: Bindings<FinRelation>,
}

/// Spans under disjoint sum.
#[derive(Clone, Debug, Default)]
pub struct SpanSum {
    bindings: Bindings<FinSpan>,
}

/// Cospans under disjoint sum.
#[derive(Clone, Debug, Default)]
pub struct CospanModel {
    bindings: Bindings<FinCospan>,
}

/// Corelations under disjoint sum.
#[derive(Clone, Debug, Default)]
pub struct CorelationModel {
    bindings: Bindings<Corelation>,
}

pub fn model_finset_sum() -> FinSetSum {
    FinSetSum::default()
}

pub fn model_finset_product() -> FinSetProduct {
    FinSetProduct::default()
}

pub fn model_finrel_sum() -> FinRelSum {
    FinRelSum::default()
}

pub fn model_finrel_product() -> FinRelProduct {
    FinRelProduct::default()
}

pub fn model_span_sum() -> SpanSum {
    SpanSum::default()
}

pub fn model_cospan() -> CospanModel {
    CospanModel::default()
}

pub fn model_corelation() -> CorelationModel {
    CorelationModel::default()
}

macro_rules! common {
    ($mor:ty, $name:expr) => {
        type Mor = $mor;

        fn name(&self) -> String {
            $name.to_string()
        }

        fn bindings(&self) -> &Bindings<$mor> {
            &self.bindings
        }

        fn bindings_mut(&mut self) -> &mut Bindings<$mor> {
            &mut self.bindings
        }

        fn boundary(&self, f: &$mor) -> (usize, usize) {
            (f.dom(), f.cod())
        }
    };
}

impl Model for FinSetSum {
    common!(FinFunction, "finset-sum");

    fn carrier(&self, w: &Word) -> usize {
        self.bindings.sum(w)
    }

    fn identity(&self, w: &Word) -> FinFunction {
        FinFunction::identity(self.carrier(w))
    }

    fn compose(&self, f: &FinFunction, g: &FinFunction) -> Result<FinFunction, SemanticsError> {
        f.then(g)
    }

    fn tensor(&self, f: &FinFunction, g: &FinFunction) -> FinFunction {
        f.sum(g)
    }

    fn symmetry(&self, x: &Sort, y: &Sort) -> FinFunction {
        let (a, b) = (self.bindings.size(x), self.bindings.size(y));
        FinFunction::new(a + b, sum_swap(a, b)).expect("swap")
    }

    fn structure(&self, g: StructGen, s: &Sort) -> Option<FinFunction> {
        let n = self.bindings.size(s);
        match g {
            StructGen::Mult => Some(fold(n)),
            StructGen::Unit => Some(initial(n)),
            _ => None,
        }
    }
}

impl Model for FinSetProduct {
    common!(FinFunction, "finset-product");

    fn carrier(&self, w: &Word) -> usize {
        self.bindings.product(w)
    }

    fn identity(&self, w: &Word) -> FinFunction {
        FinFunction::identity(self.carrier(w))
    }

    fn compose(&self, f: &FinFunction, g: &FinFunction) -> Result<FinFunction, SemanticsError> {
        f.then(g)
    }

    fn tensor(&self, f: &FinFunction, g: &FinFunction) -> FinFunction {
        f.product(g)
    }

    fn symmetry(&self, x: &Sort, y: &Sort) -> FinFunction {
        let (a, b) = (self.bindings.size(x), self.bindings.size(y));
        FinFunction::new(a * b, product_swap(a, b)).expect("swap")
    }

    fn structure(&self, g: StructGen, s: &Sort) -> Option<FinFunction> {
        let n = self.bindings.size(s);
        match g {
            StructGen::Comult => Some(diagonal(n)),
            StructGen::Counit => Some(bang(n)),
            _ => None,
        }
    }
}

impl Model for FinRelSum {
    common!(FinRelation, "finrel-sum");

    fn carrier(&self, w: &Word) -> usize {
        self.bindings.sum(w)
    }

    fn identity(&self, w: &Word) -> FinRelation {
        FinRelation::identity(self.carrier(w))
    }

    fn compose(&self, f: &FinRelation, g: &FinRelation) -> Result<FinRelation, SemanticsError> {
        f.then(g)
    }

    fn tensor(&self, f: &FinRelation, g: &FinRelation) -> FinRelation {
        f.sum(g)
    }

    fn symmetry(&self, x: &Sort, y: &Sort) -> FinRelation {
        let (a, b) = (self.bindings.size(x), self.bindings.size(y));
        FinRelation::graph(&FinFunction::new(a + b, sum_swap(a, b)).expect("swap"))
    }

    fn structure(&self, g: StructGen, s: &Sort) -> Option<FinRelation> {
        let n = self.bindings.size(s);
        match g {
            StructGen::Comult => Some(FinRelation::graph(&fold(n)).converse()),
            StructGen::Counit => Some(FinRelation::empty(n, 0)),
            StructGen::Mult => Some(FinRelation::graph(&fold(n))),
            StructGen::Unit => Some(FinRelation::empty(0, n)),
            StructGen::Cup | StructGen::Cap => None,
        }
    }
}

impl Model for FinRelProduct {
    common!(FinRelation, "finrel-product");

    fn carrier(&self, w: &Word) -> usize {
        self.bindings.product(w)
    }

    fn identity(&self, w: &Word) -> FinRelation {
        FinRelation::identity(self.carrier(w))
    }

    fn compose(&self, f: &FinRelation, g: &FinRelation) -> Result<FinRelation, SemanticsError> {
        f.then(g)
    }

    fn tensor(&self, f: &FinRelation, g: &FinRelation) -> FinRelation {
        f.product(g)
    }

    fn symmetry(&self, x: &Sort, y: &Sort) -> FinRelation {
        let (a, b) = (self.bindings.size(x), self.bindings.size(y));
        FinRelation::graph(&FinFunction::new(a * b, product_swap(a, b)).expect("swap"))
    }

    fn structure(&self, g: StructGen, s: &Sort) -> Option<FinRelation> {
        let n = self.bindings.size(s);
        let cap = FinRelation::graph(&diagonal(n)).converse().then(&FinRelation::graph(&bang(n))).expect("cap");
        Some(match g {
            StructGen::Comult => FinRelation::graph(&diagonal(n)),
            StructGen::Counit => FinRelation::graph(&bang(n)),
            StructGen::Mult => FinRelation::graph(&diagonal(n)).converse(),
            StructGen::Unit => FinRelation::graph(&bang(n)).converse(),
            StructGen::Cup => cap.converse(),
            StructGen::Cap => cap,
        })
    }

    fn dual(&self, g: DualGen, s: &Sort) -> Option<FinRelation> {
        let n = self.bindings.size(s);
        if self.bindings.size(&sdiag_core::dual_sort(s)) != n {
            return None;
        }
        self.structure(if g == DualGen::Cup { StructGen::Cup } else { StructGen::Cap }, s)
    }
}

impl Model for SpanSum {
    common!(FinSpan, "span-sum");

    fn carrier(&self, w: &Word) -> usize {
        self.bindings.sum(w)
    }

    fn identity(&self, w: &Word) -> FinSpan {
        FinSpan::identity(self.carrier(w))
    }

    fn compose(&self, f: &FinSpan, g: &FinSpan) -> Result<FinSpan, SemanticsError> {
        f.then(g)
    }

    fn tensor(&self, f: &FinSpan, g: &FinSpan) -> FinSpan {
        f.sum(g)
    }

    fn symmetry(&self, x: &Sort, y: &Sort) -> FinSpan {
        let (a, b) = (self.bindings.size(x), self.bindings.size(y));
        FinSpan::from_function(&FinFunction::new(a + b, sum_swap(a, b)).expect("swap"))
    }

    fn structure(&self, g: StructGen, s: &Sort) -> Option<FinSpan> {
        let n = self.bindings.size(s);
        match g {
            StructGen::Comult => Some(FinSpan::from_cofunction(&fold(n))),
            StructGen::Counit => Some(FinSpan::new(&initial(n), &initial(0)).expect("empty apex")),
            StructGen::Mult => Some(FinSpan::from_function(&fold(n))),
            StructGen::Unit => Some(FinSpan::new(&initial(0), &initial(n)).expect("empty apex")),
            StructGen::Cup | StructGen::Cap => None,
        }
    }
}

fn cospan_structure(g: StructGen, n: usize) -> FinCospan {
    match g {
        StructGen::Comult => FinCospan::from_cofunction(&fold(n)),
        StructGen::Counit => FinCospan::from_cofunction(&initial(n)),
        StructGen::Mult => FinCospan::from_function(&fold(n)),
        StructGen::Unit => FinCospan::from_function(&initial(n)),
        StructGen::Cup => FinCospan::new(&initial(n), &fold(n)).expect("apex n"),
        StructGen::Cap => FinCospan::new(&fold(n), &initial(n)).expect("apex n"),
    }
}

fn dual_struct(g: DualGen) -> StructGen {
    match g {
        DualGen::Cup => StructGen::Cup,
        DualGen::Cap => StructGen::Cap,
    }
}

impl Model for CospanModel {
    common!(FinCospan, "cospan");

    fn carrier(&self, w: &Word) -> usize {
        self.bindings.sum(w)
    }

    fn identity(&self, w: &Word) -> FinCospan {
        FinCospan::identity(self.carrier(w))
    }

    fn compose(&self, f: &FinCospan, g: &FinCospan) -> Result<FinCospan, SemanticsError> {
        f.then(g)
    }

    fn tensor(&self, f: &FinCospan, g: &FinCospan) -> FinCospan {
        f.sum(g)
    }

    fn symmetry(&self, x: &Sort, y: &Sort) -> FinCospan {
        let (a, b) = (self.bindings.size(x), self.bindings.size(y));
        FinCospan::from_function(&FinFunction::new(a + b, sum_swap(a, b)).expect("swap"))
    }

    fn structure(&self, g: StructGen, s: &Sort) -> Option<FinCospan> {
        Some(cospan_structure(g, self.bindings.size(s)))
    }

    fn dual(&self, g: DualGen, s: &Sort) -> Option<FinCospan> {
        let n = self.bindings.size(s);
        (self.bindings.size(&sdiag_core::dual_sort(s)) == n).then(|| cospan_structure(dual_struct(g), n))
    }
}

impl Model for CorelationModel {
    common!(Corelation, "corelation");

    fn carrier(&self, w: &Word) -> usize {
        self.bindings.sum(w)
    }

    fn identity(&self, w: &Word) -> Corelation {
        Corelation::identity(self.carrier(w))
    }

    fn compose(&self, f: &Corelation, g: &Corelation) -> Result<Corelation, SemanticsError> {
        f.then(g)
    }

    fn tensor(&self, f: &Corelation, g: &Corelation) -> Corelation {
        f.sum(g)
    }

    fn symmetry(&self, x: &Sort, y: &Sort) -> Corelation {
        let (a, b) = (self.bindings.size(x), self.bindings.size(y));
        Corelation::from_cospan(&FinCospan::from_function(&FinFunction::new(a + b, sum_swap(a, b)).expect("swap")))
    }

    fn structure(&self, g: StructGen, s: &Sort) -> Option<Corelation> {
        Some(Corelation::from_cospan(&cospan_structure(g, self.bindings.size(s))))
    }

    fn dual(&self, g: DualGen, s: &Sort) -> Option<Corelation> {
        let n = self.bindings.size(s);
        (self.bindings.size(&sdiag_core::dual_sort(s)) == n)
            .then(|| Corelation::from_cospan(&cospan_structure(dual_struct(g), n)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorMode {
    /// Block-diagonal sum; words go to sums of dimensions.
    DirectSum,
    /// Kronecker product; words go to products of dimensions.
    Kronecker,
}

/// Matrices over a semiring. In direct-sum mode the sorts carry the
/// biproduct (co)monoids; in Kronecker mode they carry the basis-copying
/// Frobenius structure, with `comult` scaled by `c` and `counit` by `1/c`.
#[derive(Clone, Debug)]
pub struct MatrixModel<S> {
    mode: TensorMode,
    scale: (S, S),
    bindings: Bindings<Matrix<S>>,
}

pub fn model_matrix<S: Semiring>(mode: TensorMode) -> MatrixModel<S> {
    MatrixModel {
        mode,
        scale: (S::one(), S::one()),
        bindings: Bindings::default(),
    }
}

impl<S: Semiring> MatrixModel<S> {
    pub fn mode(&self) -> TensorMode {
        self.mode
    }

    /// Rescales the Frobenius structure; `c` must be invertible.
    pub fn with_frobenius_scale(mut self, c: S) -> Result<MatrixModel<S>, SemanticsError> {
        let inv = c.inverse().ok_or_else(|| SemanticsError::UnsupportedStructure {
            model: self.name(),
            structure: format!("scale {}", c.render()),
        })?;
        self.scale = (c, inv);
        Ok(self)
    }

    /// A copy map natural in every matrix, as a Cartesian structure
    /// requires. Only the direct-sum reading has one.
    pub fn natural_copy(&self, w: &Word) -> Result<Matrix<S>, SemanticsError> {
        match self.mode {
            TensorMode::DirectSum => {
                let n = self.carrier(w);
                Ok(Matrix::from_fn(2 * n, n, |i, j| if i % n == j { S::one() } else { S::zero() }))
            }
            TensorMode::Kronecker => Err(SemanticsError::UnsupportedStructure {
                model: self.name(),
                structure: "natural copy".into(),
            }),
        }
    }

    fn kronecker_structure(&self, g: StructGen, n: usize) -> Matrix<S> {
        let (c, inv) = &self.scale;
        let diag = |i: usize, j: usize| if i == j * n + j { S::one() } else { S::zero() };
        match g {
            StructGen::Comult => Matrix::from_fn(n * n, n, diag).scale(c),
            StructGen::Counit => Matrix::from_fn(1, n, |_, _| inv.clone()),
            StructGen::Mult => Matrix::from_fn(n, n * n, |i, j| diag(j, i)),
            StructGen::Unit => Matrix::from_fn(n, 1, |_, _| S::one()),
            StructGen::Cup => Matrix::from_fn(n * n, 1, |i, _| if i % (n + 1) == 0 { S::one() } else { S::zero() }),
            StructGen::Cap => Matrix::from_fn(1, n * n, |_, j| if j % (n + 1) == 0 { S::one() } else { S::zero() }),
        }
    }
}

impl<S: Semiring + fmt::Debug> Model for MatrixModel<S>
where
    Matrix<S>: fmt::Display,
{
    type Mor = Matrix<S>;

    fn name(&self) -> String {
        match self.mode {
            TensorMode::DirectSum => "matrix-sum".into(),
            TensorMode::Kronecker => "matrix-kronecker".into(),
        }
    }

    fn bindings(&self) -> &Bindings<Matrix<S>> {
        &self.bindings
    }

    fn bindings_mut(&mut self) -> &mut Bindings<Matrix<S>> {
        &mut self.bindings
    }

    fn boundary(&self, f: &Matrix<S>) -> (usize, usize) {
        (f.cols(), f.rows())
    }

    fn carrier(&self, w: &Word) -> usize {
        match self.mode {
            TensorMode::DirectSum => self.bindings.sum(w),
            TensorMode::Kronecker => self.bindings.product(w),
        }
    }

    fn identity(&self, w: &Word) -> Matrix<S> {
        Matrix::identity(self.carrier(w))
    }

    fn compose(&self, f: &Matrix<S>, g: &Matrix<S>) -> Result<Matrix<S>, SemanticsError> {
        f.then(g)
    }

    fn tensor(&self, f: &Matrix<S>, g: &Matrix<S>) -> Matrix<S> {
        match self.mode {
            TensorMode::DirectSum => f.direct_sum(g),
            TensorMode::Kronecker => f.kronecker(g),
        }
    }

    fn symmetry(&self, x: &Sort, y: &Sort) -> Matrix<S> {
        let (a, b) = (self.bindings.size(x), self.bindings.size(y));
        match self.mode {
            TensorMode::DirectSum => Matrix::permutation(&sum_swap(a, b)),
            TensorMode::Kronecker => Matrix::permutation(&product_swap(a, b)),
        }
    }

    fn structure(&self, g: StructGen, s: &Sort) -> Option<Matrix<S>> {
        let n = self.bindings.size(s);
        match self.mode {
            TensorMode::DirectSum => {
                let copy = Matrix::from_fn(2 * n, n, |i, j| if i % n == j { S::one() } else { S::zero() });
                let add = Matrix::from_fn(n, 2 * n, |i, j| if j % n == i { S::one() } else { S::zero() });
                match g {
                    StructGen::Comult => Some(copy),
                    StructGen::Counit => Some(Matrix::zeros(0, n)),
                    StructGen::Mult => Some(add),
                    StructGen::Unit => Some(Matrix::zeros(n, 0)),
                    StructGen::Cup | StructGen::Cap => None,
                }
            }
            TensorMode::Kronecker => Some(self.kronecker_structure(g, n)),
        }
    }

    fn dual(&self, g: DualGen, s: &Sort) -> Option<Matrix<S>> {
        let n = self.bindings.size(s);
        if self.mode == TensorMode::DirectSum || self.bindings.size(&sdiag_core::dual_sort(s)) != n {
            return None;
        }
        Some(self.kronecker_structure(dual_struct(g), n))
    }
}

/// The free monoid model: each output wire is the concatenation of the
/// words on the input wires feeding it. With `mirrored`, the free comonoid
/// model; with `commutative`, concatenation order is forgotten.
#[derive(Clone, Debug, Default)]
pub struct WordModel {
    pub commutative: bool,
    pub mirrored: bool,
    bindings: Bindings<WordMor>,
}

pub fn model_words(commutative: bool, mirrored: bool) -> WordModel {
    WordModel {
        commutative,
        mirrored,
        bindings: Bindings::default(),
    }
}

impl WordModel {
    fn norm(&self, m: WordMor) -> WordMor {
        if self.commutative {
            m.sorted()
        } else {
            m
        }
    }
}

impl Model for WordModel {
    type Mor = WordMor;

    fn name(&self) -> String {
        if self.mirrored { "coword" } else { "word" }.to_string()
    }

    fn bindings(&self) -> &Bindings<WordMor> {
        &self.bindings
    }

    fn bindings_mut(&mut self) -> &mut Bindings<WordMor> {
        &mut self.bindings
    }

    fn boundary(&self, f: &WordMor) -> (usize, usize) {
        (f.dom(), f.cod())
    }

    fn carrier(&self, w: &Word) -> usize {
        w.len()
    }

    fn identity(&self, w: &Word) -> WordMor {
        WordMor::permutation(&(0..w.len()).collect::<Vec<_>>(), self.mirrored)
    }

    fn compose(&self, f: &WordMor, g: &WordMor) -> Result<WordMor, SemanticsError> {
        Ok(self.norm(f.then(g, self.mirrored)?))
    }

    fn tensor(&self, f: &WordMor, g: &WordMor) -> WordMor {
        f.sum(g, self.mirrored)
    }

    fn symmetry(&self, _x: &Sort, _y: &Sort) -> WordMor {
        WordMor::permutation(&[1, 0], self.mirrored)
    }

    fn structure(&self, g: StructGen, _s: &Sort) -> Option<WordMor> {
        match (g, self.mirrored) {
            (StructGen::Mult, false) => Some(WordMor::new(2, 1, vec![vec![0, 1]])),
            (StructGen::Unit, false) => Some(WordMor::new(0, 1, vec![vec![]])),
            (StructGen::Comult, true) => Some(WordMor::new(1, 2, vec![vec![0, 1]])),
            (StructGen::Counit, true) => Some(WordMor::new(1, 0, vec![vec![]])),
            _ => None,
        }
    }
}

/// Exact rationals, the field used for the Kronecker model.
pub type Q = Rational64;
