use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sdc::{parse_items, DiagnosticKind, Item, SourceFile, Span};
use sdiag_core::random::TermGen;
use sdiag_core::{Sort, StructGen, Term, Word};

const SIG: &str = "sig S {\n    ob x, y;\n    op c1 : y -> x;\n    op c2 : x -> x;\n    op d : x x -> y;\n}\n";

fn load(src: &str) -> SourceFile {
    SourceFile::load(src).unwrap_or_else(|ds| panic!("{}", ds[0]))
}

fn errors(src: &str) -> Vec<sdc::Diagnostic> {
    SourceFile::load(src).err().expect("load should fail")
}

fn word(names: &[&str]) -> Word {
    names.iter().map(|n| Sort::new(n).unwrap()).collect()
}

#[test]
fn signature_example_parses() {
    let f = load(SIG);
    assert_eq!(f.sig_name.as_deref(), Some("S"));
    assert_eq!(f.signature.objects().len(), 2);
    assert_eq!(f.signature.operations().len(), 3);
}

#[test]
fn composite_term_typechecks() {
    let f = load(&format!("{SIG}term t = (c1 | c2) ; d;"));
    let t = f.term("t").unwrap();
    assert_eq!(t.dom(), &word(&["y", "x"]));
    assert_eq!(t.cod(), &word(&["y"]));
}

#[test]
fn mismatch_cites_both_words() {
    let ds = errors(&format!("{SIG}term bad = c1 ; d;"));
    assert_eq!(ds.len(), 1);
    let d = &ds[0];
    assert_eq!(d.kind, DiagnosticKind::TypeMismatch);
    assert_eq!(d.span, Span { line: 7, col: 15 });
    assert_eq!(d.expected.as_ref().unwrap().to_string(), "x·x");
    assert_eq!(d.actual.as_ref().unwrap().to_string(), "x");
    assert!(d.to_string().contains("expected: x·x\n  found:    x"));
}

#[test]
fn bar_binds_tighter_than_semicolon() {
    let f = load("term a = mult_x | id(x) ; mult_x;\nterm b = (mult_x | id(x)) ; mult_x;");
    assert_eq!(f.term("a"), f.term("b"));
}

#[test]
fn semicolon_is_left_associative() {
    let f = load("term a = comult_x ; mult_x ; comult_x;\nterm b = (comult_x ; mult_x) ; comult_x;");
    assert_eq!(f.term("a"), f.term("b"));
}

#[test]
fn builtins_and_structure() {
    let f = load("term a = id(x x) ; sym(x,x) | empty;\nterm b = unit_x ; counit_x;\nterm c = cup_x ; cap_x;");
    let a = f.term("a").unwrap();
    assert_eq!(a.dom().len(), 2);
    assert_eq!(f.term("b").unwrap().dom(), &Word::empty());
    assert_eq!(f.term("c").unwrap().cod(), &Word::empty());
}

#[test]
fn terms_refer_to_earlier_terms() {
    let f = load("term m = mult_x;\nterm twice = (m | id(x)) ; m;");
    assert_eq!(f.term("twice").unwrap().generator_count(), 2);
    let ds = errors("term a = later;\nterm later = mult_x;");
    assert_eq!(ds[0].kind, DiagnosticKind::UnknownName);
    assert_eq!(ds[0].span, Span { line: 1, col: 10 });
}

#[test]
fn unknown_names_are_reported() {
    let ds = errors(&format!("{SIG}term t = c3 ; d;"));
    assert_eq!(ds[0].kind, DiagnosticKind::UnknownName);
    let ds = errors(&format!("{SIG}term t = id(z);"));
    assert_eq!(ds[0].kind, DiagnosticKind::UnknownName);
    let ds = errors("sig S { ob x; op f : x -> q; }");
    assert_eq!(ds[0].kind, DiagnosticKind::UnknownName);
    assert_eq!(ds[0].span, Span { line: 1, col: 27 });
    let ds = errors("theory monoidd;");
    assert_eq!(ds[0].kind, DiagnosticKind::UnknownName);
}

#[test]
fn errors_in_separate_terms_are_all_reported() {
    let ds = errors("term a = nope;\nterm b = mult_x ; mult_x;\nterm c = a ; a;");
    assert_eq!(ds.len(), 2);
    assert_eq!(ds[0].kind, DiagnosticKind::UnknownName);
    assert_eq!(ds[1].kind, DiagnosticKind::TypeMismatch);
}

#[test]
fn duplicates_are_reported() {
    let ds = errors("term a = mult_x;\nterm a = unit_x;");
    assert_eq!(ds[0].kind, DiagnosticKind::DuplicateName);
    assert_eq!(ds[0].span, Span { line: 2, col: 6 });
    let ds = errors("sig S { ob x, x; }");
    assert_eq!(ds[0].kind, DiagnosticKind::DuplicateName);
    let ds = errors("sig S { ob x; op f : x -> x; }\nterm f = id(x);");
    assert_eq!(ds[0].kind, DiagnosticKind::DuplicateName);
}

#[test]
fn syntax_errors_have_spans() {
    let ds = errors("term a = (mult_x | id(x) ; mult_x;");
    assert_eq!(ds[0].kind, DiagnosticKind::Syntax);
    assert_eq!(ds[0].span, Span { line: 1, col: 34 });
    let ds = errors("term a = mult_x");
    assert_eq!(ds[0].kind, DiagnosticKind::Syntax);
    let ds = errors("term id = mult_x;");
    assert_eq!(ds[0].kind, DiagnosticKind::Syntax);
    let ds = errors("term a = mult_x $ unit_x;");
    assert_eq!(ds[0].kind, DiagnosticKind::Syntax);
    assert_eq!(ds[0].span, Span { line: 1, col: 17 });
}

#[test]
fn theory_orientation_bindings_and_scripts() {
    let src = "theory comm_monoid;\norient ~unl;\nunorient com;\nbind x = 3;\nterm s = (unit_x | id(x)) ; mult_x;\nscript s = [com@0, unr@0];";
    let f = load(src);
    let spec = f.theory.as_ref().unwrap();
    assert_eq!(spec.name, "comm_monoid");
    assert_eq!(spec.overrides.len(), 2);
    assert_eq!(f.sizes, vec![("x".to_string(), 3)]);
    assert_eq!(f.script("s").unwrap(), &[("com".to_string(), 0), ("unr".to_string(), 0)]);
    let t = f.build_theory(None).unwrap().unwrap();
    let unl = t.rules.iter().find(|r| r.name == "unl").unwrap();
    assert!(unl.lhs.edge_count() < unl.rhs.edge_count());
    assert!(!t.rules.iter().find(|r| r.name == "com").unwrap().oriented);
    let ds = errors("theory monoid;\nscript s = [nope@0];");
    assert_eq!(ds[0].kind, DiagnosticKind::UnknownName);
    let ds = errors("orient unl;");
    assert_eq!(ds[0].kind, DiagnosticKind::Semantic);
}

#[test]
fn theory_sums_parse() {
    let f = load("theory cartesian + self_dual_compact;");
    assert_eq!(f.theory.unwrap().name, "cartesian+self_dual_compact");
}

#[test]
fn statement_terminator_before_items() {
    let items = parse_items("term a = mult_x;\nterm b = a;\n").unwrap();
    assert_eq!(items.len(), 2);
    assert!(matches!(&items[1], Item::Term { name, .. } if name.0 == "b"));
}

#[test]
fn comments_are_skipped() {
    let f = load("// leading\nterm a = mult_x; # trailing\n");
    assert!(f.term("a").is_some());
}

#[test]
fn inline_expressions() {
    let f = load("term m = mult_x;");
    let t = f.lookup("(m | id(x)) ; m").unwrap();
    assert_eq!(t.generator_count(), 2);
    let ds = f.lookup("m ; m").unwrap_err();
    assert_eq!(ds[0].kind, DiagnosticKind::TypeMismatch);
}

fn roundtrip_signature() -> (String, Vec<sdiag_core::Op>) {
    let src = "sig R {\n    ob x, y;\n    op f : x -> y;\n    op g : y x -> x;\n    op h : -> x y;\n    op k : y -> ;\n}\n";
    let f = load(src);
    let mut ops = f.signature.operations().to_vec();
    for s in f.sorts() {
        ops.extend(StructGen::FROBENIUS.iter().map(|g| g.op(s)));
    }
    (src.to_string(), ops)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_parse_roundtrip(seed in any::<u64>(), size in 0usize..10, width in 0usize..3, sym in any::<bool>()) {
        let (src, ops) = roundtrip_signature();
        let f = load(&src);
        let mut gen = TermGen::new(ops, size);
        gen.allow_sym = sym;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sorts = f.sorts().to_vec();
        let dom: Word = (0..width).map(|i| sorts[(seed as usize + i) % sorts.len()].clone()).collect();
        let t: Term = gen.term(&mut rng, &dom);
        let printed = t.to_string();
        let back = f.parse_term(&printed).map_err(|ds| TestCaseError::fail(format!("{printed}: {}", ds[0])))?;
        prop_assert_eq!(&back, &t, "{}", printed);
        let reloaded = load(&format!("{src}term t = {printed};"));
        prop_assert_eq!(reloaded.term("t").unwrap(), &t);
    }
}
