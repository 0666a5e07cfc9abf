use num_rational::Rational64;
use sdiag_core::{Op, Sort, StructGen, Term, Word};
use sdiag_semantics::*;

fn x() -> Sort {
    Sort::new("x").unwrap()
}

fn gen(g: StructGen) -> Term {
    Term::gen(&g.op(&x()))
}

fn id() -> Term {
    Term::id(Word::single(&x()))
}

fn sym() -> Term {
    Term::sym(&x(), &x())
}

fn s(a: &Term, b: &Term) -> Term {
    Term::seq(a, b).unwrap()
}

fn p(parts: &[Term]) -> Term {
    sdiag_core::par_all(parts)
}

use StructGen::{Comult, Counit, Mult, Unit};

/// (comult | counit | id) ; (id | mult)
fn relation_diagram() -> Term {
    s(&p(&[gen(Comult), gen(Counit), id()]), &p(&[id(), gen(Mult)]))
}

/// (comult | counit | id) ; (id | comult | id) ; (id | mult | id) ; (id | mult)
fn span_diagram() -> Term {
    let t = s(&p(&[gen(Comult), gen(Counit), id()]), &p(&[id(), gen(Comult), id()]));
    let t = s(&t, &p(&[id(), gen(Mult), id()]));
    s(&t, &p(&[id(), gen(Mult)]))
}

/// ((id | sym | id) ; (mult | mult) ; (counit | comult)) | (unit ; counit)
fn cospan_diagram(with_dot: bool) -> Term {
    let body = s(&s(&p(&[id(), sym(), id()]), &p(&[gen(Mult), gen(Mult)])), &p(&[gen(Counit), gen(Comult)]));
    if with_dot {
        p(&[body, s(&gen(Unit), &gen(Counit))])
    } else {
        body
    }
}

fn ff(cod: usize, images: &[usize]) -> FinFunction {
    FinFunction::new(cod, images.to_vec()).unwrap()
}

#[test]
fn relation_example_in_finrel_sum() {
    let r = eval(&model_finrel_sum(), &relation_diagram()).unwrap();
    assert_eq!(r, FinRelation::new(3, 2, [(0, 0), (0, 1), (2, 1)]).unwrap());
    assert_eq!(r.to_string(), "{(0,0),(0,1),(2,1)}");
}

#[test]
fn relation_example_as_boolean_matrix() {
    let m = eval(&model_matrix::<bool>(TensorMode::DirectSum), &relation_diagram()).unwrap();
    let ones: Vec<(usize, usize)> = (0..2).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| m.get(i, j)).collect();
    assert_eq!(ones, vec![(0, 0), (1, 0), (1, 2)]);
    assert_eq!(m.to_string(), "matrix 2x3\n[1 0 0]\n[1 0 1]");
}

#[test]
fn empty_diagram_is_identity_on_zero() {
    assert_eq!(eval(&model_finrel_sum(), &Term::empty()).unwrap(), FinRelation::identity(0));
}

#[test]
fn copy_then_discard_both_in_finrel_sum() {
    let t = s(&gen(Comult), &p(&[gen(Counit), gen(Counit)]));
    let got = eval(&model_finrel_sum(), &t).unwrap();
    // Compose the generator relations by brute force.
    let comult = [(0usize, 0usize), (0, 1)];
    let discard: [(usize, usize); 0] = [];
    let mut pairs = Vec::new();
    for &(a, m) in &comult {
        for &(m2, c) in &discard {
            if m == m2 {
                pairs.push((a, c));
            }
        }
    }
    assert_eq!(got, FinRelation::new(1, 0, pairs).unwrap());
    assert!(got.pairs().is_empty());
}

#[test]
fn functions_under_sum() {
    let m = model_finset_sum();
    assert_eq!(eval(&m, &gen(Mult)).unwrap(), ff(1, &[0, 0]));
    let f = p(&[gen(Unit), s(&p(&[gen(Mult), id()]), &gen(Mult))]);
    assert_eq!(eval(&m, &f).unwrap(), ff(2, &[1, 1, 1]));
    let g = s(&p(&[id(), sym(), id()]), &p(&[gen(Mult), gen(Mult)]));
    assert_eq!(eval(&m, &g).unwrap(), ff(2, &[0, 1, 0, 1]));
    let empty_map = eval(&m, &p(&[gen(Unit), gen(Unit)])).unwrap();
    assert_eq!(empty_map, ff(2, &[]));
    assert_eq!(empty_map.to_string(), "[] : 0 -> 2");
    assert!(matches!(eval(&m, &gen(Comult)), Err(SemanticsError::UnsupportedStructure { .. })));
}

#[test]
fn identity_words_evaluate_to_identities() {
    let w = Word::repeat(&x(), 3);
    let t = sdiag_core::id_word(&w);
    assert_eq!(eval(&model_finrel_sum(), &t).unwrap(), FinRelation::identity(3));
    assert_eq!(eval(&model_span_sum(), &t).unwrap(), FinSpan::identity(3));
    assert_eq!(eval(&model_cospan(), &t).unwrap(), FinCospan::identity(3));
    assert_eq!(eval(&model_corelation(), &t).unwrap(), Corelation::identity(3));
    let m = model_finrel_product().with_size("x", 2);
    assert_eq!(eval(&m, &t).unwrap(), FinRelation::identity(8));
    assert_eq!(eval(&model_span_sum(), &id()).unwrap(), FinSpan::identity(1));
}

#[test]
fn span_example() {
    let sp = eval(&model_span_sum(), &span_diagram()).unwrap();
    let expected = FinSpan::new(&ff(3, &[0, 0, 0, 2]), &ff(2, &[0, 1, 1, 1])).unwrap();
    assert_eq!(sp, expected);
    // Listing the apex differently gives the same span.
    let shuffled = FinSpan::new(&ff(3, &[2, 0, 0, 0]), &ff(2, &[1, 1, 0, 1])).unwrap();
    assert_eq!(sp, shuffled);
    assert_eq!(sp.to_string(), "span 3 <- 4 -> 2 : [0,0,0,2] [0,1,1,1]");

    let counts = sp.count_matrix();
    let mut oracle = vec![vec![0u64; 3]; 2];
    for a in 0..4 {
        oracle[[0, 1, 1, 1][a]][[0, 0, 0, 2][a]] += 1;
    }
    assert_eq!(counts, Matrix::from_rows(oracle, 3).unwrap());
    assert_eq!(counts.to_string(), "matrix 2x3\n[1 0 0]\n[2 0 1]");
    let nat = eval(&model_matrix::<u64>(TensorMode::DirectSum), &span_diagram()).unwrap();
    assert_eq!(nat, counts);
}

#[test]
fn span_and_relation_examples_differ_as_spans() {
    let rel = eval(&model_span_sum(), &relation_diagram()).unwrap();
    let sp = eval(&model_span_sum(), &span_diagram()).unwrap();
    assert_ne!(rel, sp);
    let support = |m: &Matrix<u64>| (0..2).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| m.get(i, j) > 0).collect::<Vec<_>>();
    assert_eq!(support(&rel.count_matrix()), support(&sp.count_matrix()));
}

#[test]
fn cospan_example() {
    let c = eval(&model_cospan(), &cospan_diagram(true)).unwrap();
    // Shift the one-based description down by one.
    let left = ff(3, &[1, 2, 1, 2].map(|v| v - 1));
    let right = ff(3, &[2, 2].map(|v| v - 1));
    assert_eq!(c, FinCospan::new(&left, &right).unwrap());
    assert_eq!(c.apex(), 3);
    assert_eq!(c.isolated(), 1);
    assert_eq!(c.to_string(), "cospan 4 -> 3 <- 2 : [0,1,0,1] [1,1]");
}

#[test]
fn isolated_point_cospan() {
    let c = eval(&model_cospan(), &s(&gen(Unit), &gen(Counit))).unwrap();
    assert_eq!((c.dom(), c.apex(), c.cod()), (0, 1, 0));
}

#[test]
fn cospan_matches_frobenius_graph_components() {
    for t in [cospan_diagram(true), cospan_diagram(false), relation_diagram(), span_diagram()] {
        let c = eval(&model_cospan(), &t).unwrap();
        let g = sdiag_core::from_term_frob(&t);
        let g = sdiag_core::absorb(&g);
        let legs = FinCospan::new(
            &ff(g.node_count(), g.left()),
            &ff(g.node_count(), g.right()),
        )
        .unwrap();
        assert_eq!(c, legs, "{t}");
    }
}

#[test]
fn corelation_forgets_isolated_points() {
    let m = model_corelation();
    let with = eval(&m, &cospan_diagram(true)).unwrap();
    let without = eval(&m, &cospan_diagram(false)).unwrap();
    assert_eq!(with, without);
    assert_eq!(with.to_string(), "{{l0,l2},{l1,l3,r0,r1}}");
    let cm = model_cospan();
    assert_ne!(eval(&cm, &cospan_diagram(true)).unwrap(), eval(&cm, &cospan_diagram(false)).unwrap());
    assert_eq!(eval(&m, &id()).unwrap().to_string(), "{{l0,r0}}");
}

#[test]
fn corelation_composition_merges_through_middle() {
    // {l0, r0} then {l0, r0, r1}: the shared middle element joins both blocks.
    let c = Corelation::new(1, 1, vec![vec![0, 1]]).unwrap();
    let d = Corelation::new(1, 2, vec![vec![0, 1, 2]]).unwrap();
    assert_eq!(c.then(&d).unwrap(), Corelation::new(1, 2, vec![vec![0, 1, 2]]).unwrap());
    // {l0},{r0} then {l0, r0}: the left point stays alone, the right point is reached through nothing.
    let c = Corelation::new(1, 1, vec![vec![0], vec![1]]).unwrap();
    let d = Corelation::new(1, 1, vec![vec![0, 1]]).unwrap();
    assert_eq!(c.then(&d).unwrap(), Corelation::new(1, 1, vec![vec![0], vec![1]]).unwrap());
    assert!(Corelation::new(1, 1, vec![vec![0]]).is_err());
    assert!(Corelation::new(1, 1, vec![vec![0, 1], vec![1]]).is_err());
}

#[test]
fn relational_frobenius_law_holds_elementwise() {
    let m = model_finrel_product().with_size("x", 2);
    let lhs = s(&p(&[gen(Comult), id()]), &p(&[id(), gen(Mult)]));
    let mid = s(&gen(Mult), &gen(Comult));
    let rhs = s(&p(&[id(), gen(Comult)]), &p(&[gen(Mult), id()]));
    let oracle: Vec<_> = (0..2).map(|v| (v * 2 + v, v * 2 + v)).collect();
    let expected = FinRelation::new(4, 4, oracle).unwrap();
    for t in [lhs, mid, rhs] {
        assert_eq!(eval(&m, &t).unwrap(), expected);
    }
}

#[test]
fn relational_cups_yank() {
    for n in 1..=3 {
        let m = model_finrel_product().with_size("x", n);
        let snake = s(&p(&[gen(StructGen::Cup), id()]), &p(&[id(), gen(StructGen::Cap)]));
        assert_eq!(eval(&m, &snake).unwrap(), FinRelation::identity(n));
    }
    let m = model_finrel_product().with_size("x", 3);
    assert_eq!(eval(&m, &gen(Counit)).unwrap(), FinRelation::new(3, 1, [(0, 0), (1, 0), (2, 0)]).unwrap());
}

#[test]
fn dual_cups_yank() {
    let xs = x();
    let xo = sdiag_core::dual_sort(&xs);
    let ccup = Term::gen(&sdiag_core::DualGen::Cup.op(&xs));
    let ccap = Term::gen(&sdiag_core::DualGen::Cap.op(&xs));
    let s_snake = s(&p(&[ccup.clone(), id()]), &p(&[id(), ccap.clone()]));
    let z_snake = s(&p(&[Term::id(Word::single(&xo)), ccup]), &p(&[ccap, Term::id(Word::single(&xo))]));
    let m = model_finrel_product().with_size("x", 3);
    assert_eq!(eval(&m, &s_snake).unwrap(), FinRelation::identity(3));
    assert_eq!(eval(&m, &z_snake).unwrap(), FinRelation::identity(3));
    let c = model_cospan();
    assert_eq!(eval(&c, &z_snake).unwrap(), FinCospan::identity(1));
    let mismatched = model_finrel_product().with_size("x", 3).with_size("x_op", 2);
    assert!(eval(&mismatched, &s_snake).is_err());
}

#[test]
fn functions_are_copyable_relations() {
    let f = FinRelation::graph(&ff(3, &[2, 0, 0]));
    let m = model_finrel_product().with_size("x", 3).with_op("f", f.clone());
    let fop: Op = sdiag_core::op("f", Word::single(&x()), Word::single(&x()));
    let fg = Term::gen(&fop);
    assert!(f.is_functional());
    let dup_l = s(&fg, &gen(Comult));
    let dup_r = s(&gen(Comult), &p(&[fg.clone(), fg.clone()]));
    assert_eq!(eval(&m, &dup_l).unwrap(), eval(&m, &dup_r).unwrap());
    assert_eq!(eval(&m, &s(&fg, &gen(Counit))).unwrap(), eval(&m, &gen(Counit)).unwrap());

    let partial = FinRelation::new(3, 3, [(0, 1)]).unwrap();
    let m = model_finrel_product().with_size("x", 3).with_op("f", partial);
    assert_ne!(eval(&m, &s(&fg, &gen(Counit))).unwrap(), eval(&m, &gen(Counit)).unwrap());
}

#[test]
fn kronecker_yanking_and_no_cloning() {
    for d in 1..=3 {
        let m = model_matrix::<Rational64>(TensorMode::Kronecker).with_size("x", d);
        let snake = s(&p(&[gen(StructGen::Cup), id()]), &p(&[id(), gen(StructGen::Cap)]));
        assert_eq!(eval(&m, &snake).unwrap(), Matrix::identity(d));
    }
    let m = model_matrix::<Rational64>(TensorMode::Kronecker).with_size("x", 2);
    let one = Rational64::from_integer(1);
    let zero = Rational64::from_integer(0);
    let comult = eval(&m, &gen(Comult)).unwrap();
    for v in 0..2 {
        let e = Matrix::from_fn(2, 1, |i, _| if i == v { one } else { zero });
        assert_eq!(e.then(&comult).unwrap(), e.kronecker(&e));
    }
    let u = Matrix::from_fn(2, 1, |_, _| one);
    assert_ne!(u.then(&comult).unwrap(), u.kronecker(&u));
    assert!(matches!(m.natural_copy(&Word::single(&x())), Err(SemanticsError::UnsupportedStructure { .. })));
    let sum = model_matrix::<Rational64>(TensorMode::DirectSum).with_size("x", 2);
    assert!(sum.natural_copy(&Word::single(&x())).is_ok());
}

#[test]
fn scaled_frobenius_is_not_special() {
    let two = Rational64::from_integer(2);
    let m = model_matrix::<Rational64>(TensorMode::Kronecker).with_size("x", 2).with_frobenius_scale(two).unwrap();
    let special = s(&gen(Comult), &gen(Mult));
    assert_eq!(eval(&m, &special).unwrap(), Matrix::identity(2).scale(&two));
    let lhs = s(&p(&[gen(Comult), id()]), &p(&[id(), gen(Mult)]));
    let rhs = s(&p(&[id(), gen(Comult)]), &p(&[gen(Mult), id()]));
    assert_eq!(eval(&m, &lhs).unwrap(), eval(&m, &rhs).unwrap());
    let counit_law = s(&gen(Comult), &p(&[id(), gen(Counit)]));
    assert_eq!(eval(&m, &counit_law).unwrap(), Matrix::identity(2));
    assert!(model_matrix::<Rational64>(TensorMode::Kronecker)
        .with_frobenius_scale(Rational64::from_integer(0))
        .is_err());
}

#[test]
fn word_model_separates_commutativity() {
    let plain = model_words(false, false);
    let comm = model_words(true, false);
    let swapped = s(&sym(), &gen(Mult));
    assert_ne!(eval(&plain, &gen(Mult)).unwrap(), eval(&plain, &swapped).unwrap());
    assert_eq!(eval(&comm, &gen(Mult)).unwrap(), eval(&comm, &swapped).unwrap());
    let assoc_l = s(&p(&[gen(Mult), id()]), &gen(Mult));
    let assoc_r = s(&p(&[id(), gen(Mult)]), &gen(Mult));
    assert_eq!(eval(&plain, &assoc_l).unwrap(), eval(&plain, &assoc_r).unwrap());
    assert_eq!(eval(&plain, &assoc_l).unwrap().to_string(), "words 3 -> 1 : [(0 1 2)]");
    let co = model_words(false, true);
    let coswapped = s(&gen(Comult), &sym());
    assert_ne!(eval(&co, &gen(Comult)).unwrap(), eval(&co, &coswapped).unwrap());
    let counit = s(&gen(Comult), &p(&[id(), gen(Counit)]));
    assert_eq!(eval(&co, &counit).unwrap(), eval(&co, &id()).unwrap());
}

#[test]
fn unassigned_and_mismatched_generators() {
    let fop = sdiag_core::op("f", Word::single(&x()), Word::single(&x()));
    assert_eq!(
        eval(&model_finrel_sum(), &Term::gen(&fop)),
        Err(SemanticsError::UnassignedGenerator("f".into()))
    );
    let m = model_finrel_sum().with_op("f", FinRelation::identity(2));
    assert!(matches!(eval(&m, &Term::gen(&fop)), Err(SemanticsError::DimensionMismatch { .. })));
}

#[test]
fn any_model_dispatch() {
    for name in MODEL_NAMES {
        assert_eq!(AnyModel::from_name(name).unwrap().eval(&Term::empty()).is_ok(), true, "{name}");
    }
    let m = AnyModel::from_name("finrel-sum").unwrap();
    assert_eq!(m.eval(&relation_diagram()).unwrap().to_string(), "{(0,0),(0,1),(2,1)}");
    assert!(AnyModel::from_name("vect").is_err());
}
