use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sdiag_core::hypergraph::NodeDegree;
use sdiag_core::random::{perturb, random_graph, TermGen};
use sdiag_core::serial::{from_text, to_dot, to_text};
use sdiag_core::syntax::Signature;
use sdiag_core::*;

fn sig() -> Signature {
    declare_signature(
        &["x", "y"],
        &[
            ("c1", &["y"], &["x"]),
            ("c2", &["x"], &["x"]),
            ("d", &["x", "x"], &["y"]),
            ("s", &[], &["x"]),
            ("k", &["y"], &[]),
        ],
    )
    .unwrap()
}

fn eq_sig() -> Signature {
    declare_signature(
        &["x"],
        &[
            ("d", &["x"], &["x", "x"]),
            ("f", &["x"], &["x"]),
            ("g", &["x", "x"], &["x"]),
            ("e", &["x"], &["x"]),
            ("h", &["x", "x"], &["x"]),
        ],
    )
    .unwrap()
}

fn g(sig: &Signature, name: &str) -> Term {
    Term::gen(sig.operation(name).unwrap())
}

fn x_of(sig: &Signature) -> Sort {
    sig.sort("x").unwrap()
}

fn chain(parts: &[Term]) -> Term {
    parts[1..].iter().fold(parts[0].clone(), |acc, p| seq(&acc, p).unwrap())
}

/// Exhaustive isomorphism search, independent of the canonical labeling.
fn brute_iso(a: &OpenHypergraph, b: &OpenHypergraph) -> bool {
    if a.node_count() != b.node_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.node_count();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(a: &OpenHypergraph, b: &OpenHypergraph, i: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if i == map.len() {
            let l: Vec<usize> = a.left().iter().map(|&v| map[v]).collect();
            let r: Vec<usize> = a.right().iter().map(|&v| map[v]).collect();
            if l != b.left() || r != b.right() {
                return false;
            }
            let mut ea: Vec<Hyperedge> = a
                .edges()
                .iter()
                .map(|e| Hyperedge {
                    op: e.op.clone(),
                    sources: e.sources.iter().map(|&v| map[v]).collect(),
                    targets: e.targets.iter().map(|&v| map[v]).collect(),
                })
                .collect();
            let mut eb = b.edges().to_vec();
            ea.sort();
            eb.sort();
            return ea == eb;
        }
        for j in 0..map.len() {
            if !used[j] && a.nodes()[i] == b.nodes()[j] {
                used[j] = true;
                map[i] = j;
                if go(a, b, i + 1, map, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(a, b, 0, &mut map, &mut used)
}

/// Renumbers nodes and edges of `g` by random permutations.
fn shuffle_ids<R: Rng>(rng: &mut R, g: &OpenHypergraph) -> OpenHypergraph {
    let n = g.node_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut nodes = vec![g.nodes()[0].clone(); n];
    for i in 0..n {
        nodes[perm[i]] = g.nodes()[i].clone();
    }
    let mut edges: Vec<Hyperedge> = g
        .edges()
        .iter()
        .map(|e| Hyperedge {
            op: e.op.clone(),
            sources: e.sources.iter().map(|&v| perm[v]).collect(),
            targets: e.targets.iter().map(|&v| perm[v]).collect(),
        })
        .collect();
    edges.shuffle(rng);
    OpenHypergraph::new(
        nodes,
        edges,
        g.left().iter().map(|&v| perm[v]).collect(),
        g.right().iter().map(|&v| perm[v]).collect(),
    )
    .unwrap()
}

#[test]
fn identity_wire_graph() {
    let x = x_of(&sig());
    let h = from_term(&Term::id(Word::single(&x)));
    assert_eq!(h.node_count(), 1);
    assert_eq!(h.edge_count(), 0);
    assert_eq!(h.left(), &[0]);
    assert_eq!(h.right(), &[0]);
    assert_eq!(
        h.degrees().nodes,
        vec![NodeDegree {
            in_degree: 0,
            out_degree: 0,
            left_multiplicity: 1,
            right_multiplicity: 1
        }]
    );
}

#[test]
fn diagram_equivalence_example() {
    let s = eq_sig();
    let x = x_of(&s);
    let id = Term::id(Word::single(&x));
    let sym = Term::sym(&x, &x);
    let t1 = chain(&[
        par_all(&[g(&s, "d"), id.clone(), g(&s, "f"), id.clone()]),
        par_all(&[id.clone(), g(&s, "g"), sym.clone()]),
        par_all(&[g(&s, "e"), g(&s, "h"), id.clone()]),
    ]);
    let t2 = chain(&[
        par_all(&[g(&s, "d"), id.clone(), id.clone(), id.clone()]),
        par_all(&[g(&s, "e"), g(&s, "g"), sym.clone()]),
        par_all(&[id.clone(), id.clone(), id.clone(), g(&s, "f")]),
        par_all(&[id.clone(), g(&s, "h"), id.clone()]),
    ]);
    let (a, b) = (from_term(&t1), from_term(&t2));
    assert_eq!(a.edge_count(), 5);
    assert!(iso_check(&a, &b));
    assert!(brute_iso(&a, &b));
}

#[test]
fn crossed_inputs_are_distinguished() {
    let s = sig();
    let x = x_of(&s);
    let lhs = seq(&par(&g(&s, "c1"), &g(&s, "c2")), &g(&s, "d")).unwrap();
    let rhs = chain(&[par(&g(&s, "c1"), &g(&s, "c2")), Term::sym(&x, &x), g(&s, "d")]);
    assert!(!iso_check(&from_term(&lhs), &from_term(&rhs)));
    assert!(!brute_iso(&from_term(&lhs), &from_term(&rhs)));
}

#[test]
fn double_crossing_is_identity() {
    let x = x_of(&sig());
    let t = seq(&Term::sym(&x, &x), &Term::sym(&x, &x)).unwrap();
    assert!(iso_check(&from_term(&t), &from_term(&id_word(&Word::repeat(&x, 2)))));
}

#[test]
fn composing_with_identity() {
    let s = sig();
    let t = seq(&par(&g(&s, "c1"), &g(&s, "c2")), &g(&s, "d")).unwrap();
    let h = from_term(&t);
    let id = from_term(&id_word(&h.cod()));
    assert!(iso_check(&h.seq_compose(&id).unwrap(), &h));
    assert!(iso_check(&from_term(&id_word(&h.dom())).seq_compose(&h).unwrap(), &h));
    assert!(matches!(h.seq_compose(&h), Err(GraphError::BoundaryMismatch { .. })));
}

#[test]
fn cup_then_cap_leaves_one_closed_node() {
    let x = x_of(&sig());
    let cup = OpenHypergraph::discrete(vec![x.clone()], vec![], vec![0, 0]).unwrap();
    let cap = OpenHypergraph::discrete(vec![x.clone()], vec![0, 0], vec![]).unwrap();
    let h = cup.seq_compose(&cap).unwrap();
    assert_eq!(h.node_count(), 1);
    assert!(h.left().is_empty() && h.right().is_empty());
}

#[test]
fn transitive_merging() {
    // Two wires joined on both sides collapse into one node.
    let x = x_of(&sig());
    let cap = OpenHypergraph::discrete(vec![x.clone()], vec![0, 0], vec![]).unwrap();
    let two = OpenHypergraph::discrete(vec![x.clone(), x.clone()], vec![0, 1], vec![0, 1]).unwrap();
    let h = two.seq_compose(&cap).unwrap();
    assert_eq!(h.node_count(), 1);
    assert_eq!(h.left(), &[0, 0]);
}

#[test]
fn parallel_composition() {
    let x = x_of(&sig());
    let one = from_term(&Term::id(Word::single(&x)));
    assert!(iso_check(&OpenHypergraph::empty().par_compose(&one), &one));
    let two = one.par_compose(&one);
    assert_eq!(two.node_count(), 2);
    assert_eq!(two.left().len(), 2);
    let s = sig();
    let h = from_term(&g(&s, "c1")).par_compose(&from_term(&g(&s, "d")));
    assert_eq!(h.dom(), s.word(&["y", "x", "x"]).unwrap());
    assert_eq!(h.cod(), s.word(&["x", "y"]).unwrap());
}

#[test]
fn generator_degrees() {
    let s = sig();
    let h = from_term(&g(&s, "d"));
    let d = h.degrees();
    assert_eq!((d.nodes[0].out_degree, d.nodes[0].in_degree), (1, 0));
    assert_eq!((d.nodes[1].out_degree, d.nodes[1].in_degree), (1, 0));
    assert_eq!((d.nodes[2].out_degree, d.nodes[2].in_degree), (0, 1));
}

/// The three hand-built non-monogamous graphs: an internal node feeding two
/// boxes, an internal node fed by nothing, and a node listed twice on the left.
fn counterexamples() -> Vec<OpenHypergraph> {
    let s = declare_signature(&["x"], &[("a", &["x"], &["x"]), ("b", &["x"], &["x"])]).unwrap();
    let x = x_of(&s);
    let a = s.operation("a").unwrap().clone();
    let b = s.operation("b").unwrap().clone();
    let e = |o: &Op, i, j| Hyperedge {
        op: o.clone(),
        sources: vec![i],
        targets: vec![j],
    };
    let fork = OpenHypergraph::new(
        vec![x.clone(); 4],
        vec![e(&a, 0, 1), e(&b, 1, 2), e(&b, 1, 3)],
        vec![0],
        vec![2, 3],
    )
    .unwrap();
    let source = OpenHypergraph::new(vec![x.clone(); 2], vec![e(&a, 0, 1)], vec![], vec![1]).unwrap();
    let twice = OpenHypergraph::new(vec![x.clone(); 2], vec![e(&a, 0, 1)], vec![0, 0], vec![1]).unwrap();
    vec![fork, source, twice]
}

#[test]
fn counterexamples_fail_monogamy() {
    let cs = counterexamples();
    let w: Vec<MonogamyWitness> = cs.iter().map(|c| c.check_monogamy().unwrap_err()).collect();
    assert_eq!(w[0].node, 1);
    assert_eq!(w[0].violation, MonogamyViolation::OutDegree { expected: 1, found: 2 });
    assert_eq!(w[1].node, 0);
    assert_eq!(w[1].violation, MonogamyViolation::InDegree { expected: 1, found: 0 });
    assert_eq!(w[2].node, 0);
    assert_eq!(w[2].violation, MonogamyViolation::LeftNotInjective);
}

#[test]
fn isolated_node_is_not_monogamous() {
    let x = x_of(&sig());
    let h = OpenHypergraph::discrete(vec![x], vec![], vec![]).unwrap();
    assert!(!h.is_monogamous());
}

#[test]
fn to_term_examples() {
    let s = sig();
    let x = x_of(&s);
    let d = from_term(&g(&s, "d"));
    assert_eq!(to_term(&d).unwrap(), g(&s, "d"));
    let id = from_term(&Term::id(Word::single(&x)));
    assert_eq!(to_term(&id).unwrap(), id_word(&Word::single(&x)));
    assert!(matches!(to_term(&counterexamples()[0]), Err(GraphError::NotMonogamous { .. })));
}

#[test]
fn to_term_rejects_cycles() {
    let s = declare_signature(&["x"], &[("a", &["x", "x"], &["x", "x"])]).unwrap();
    let x = x_of(&s);
    let a = s.operation("a").unwrap().clone();
    let h = OpenHypergraph::new(
        vec![x.clone(); 3],
        vec![Hyperedge {
            op: a,
            sources: vec![0, 2],
            targets: vec![1, 2],
        }],
        vec![0],
        vec![1],
    )
    .unwrap();
    assert!(h.is_monogamous());
    assert_eq!(to_term(&h), Err(GraphError::CyclicGraph));
    assert!(iso_check(&from_term_frob(&to_term_frob(&h)), &h));
}

fn frob_sig() -> Signature {
    let mut s = sig();
    let x = x_of(&s);
    for gnr in StructGen::ALL {
        s.add_op(gnr.op(&x)).unwrap();
    }
    s
}

#[test]
fn frobenius_examples() {
    let s = frob_sig();
    let x = x_of(&s);
    let id = Term::id(Word::single(&x));
    let t = seq(&g(&s, "comult_x"), &par(&g(&s, "counit_x"), &id)).unwrap();
    assert!(iso_check(&from_term_frob(&t), &from_term(&id)));

    let closed = seq(&g(&s, "unit_x"), &g(&s, "counit_x")).unwrap();
    let h = from_term_frob(&closed);
    assert_eq!((h.node_count(), h.edge_count()), (1, 0));
    assert!(h.left().is_empty() && h.right().is_empty());
    assert_eq!(to_term_frob(&h), closed);

    let fork = &counterexamples()[0];
    let back = to_term_frob(fork);
    assert!(back.generators().iter().any(|o| &*o.name == "comult_x"));
    assert!(iso_check(&from_term_frob(&back), fork));
}

#[test]
fn absorb_matches_frobenius_interpretation() {
    let s = frob_sig();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let gen = TermGen::new(s.operations().to_vec(), 6);
    for _ in 0..100 {
        let t = gen.term(&mut rng, &s.word(&["x", "x"]).unwrap());
        assert!(iso_check(&from_term_frob(&t), &absorb(&from_term(&t))));
    }
}

#[test]
fn text_roundtrip() {
    let s = sig();
    let t = seq(&par(&g(&s, "c1"), &g(&s, "c2")), &g(&s, "d")).unwrap();
    let h = from_term(&t);
    let txt = to_text(&h);
    assert_eq!(
        txt,
        "nodes y x x x y\nedge c1 : y -> x : 0 -> 1\nedge c2 : x -> x : 2 -> 3\nedge d : x x -> y : 1 3 -> 4\nleft 0 2\nright 4\n"
    );
    assert_eq!(from_text(&txt).unwrap(), h);
    assert!(from_text("edge q : x -> x : 0 -> 9\n").is_err());
    let dot = to_dot(&h);
    assert!(dot.contains("e2 [shape=box, label=\"d\"];"));
    assert!(dot.contains("L0 [shape=plaintext, fontcolor=blue"));
    assert!(dot.contains("R0 [shape=plaintext, fontcolor=red"));
}

#[test]
fn canonical_form_is_relabeling_invariant() {
    let s = frob_sig();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let sorts = s.objects().to_vec();
    for _ in 0..300 {
        let h = random_graph(&mut rng, &sorts, s.operations(), 6, 5);
        let h2 = shuffle_ids(&mut rng, &h);
        assert!(iso_check(&h, &h2));
        assert_eq!(canonical_form(&h), canonical_form(&h2));
    }
}

#[test]
fn iso_agrees_with_brute_force() {
    let s = declare_signature(&["x"], &[("a", &["x"], &["x"]), ("m", &["x", "x"], &["x"])]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let sorts = s.objects().to_vec();
    let graphs: Vec<OpenHypergraph> = (0..120)
        .map(|_| random_graph(&mut rng, &sorts, s.operations(), 4, 3))
        .collect();
    for a in &graphs {
        for b in graphs.iter().take(40) {
            assert_eq!(iso_check(a, b), brute_iso(a, b), "{a:?} vs {b:?}");
        }
    }
}

#[test]
fn iso_is_an_equivalence() {
    let s = declare_signature(&["x"], &[("a", &["x"], &["x"])]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let sorts = s.objects().to_vec();
    let gs: Vec<OpenHypergraph> = (0..40)
        .map(|_| random_graph(&mut rng, &sorts, s.operations(), 3, 2))
        .collect();
    for a in &gs {
        assert!(iso_check(a, a));
        for b in &gs {
            assert_eq!(iso_check(a, b), iso_check(b, a));
            for c in &gs {
                if iso_check(a, b) && iso_check(b, c) {
                    assert!(iso_check(a, c));
                }
            }
        }
    }
}

fn random_term(seed: u64, size: usize) -> Term {
    let s = sig();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gen = TermGen::new(s.operations().to_vec(), size);
    let widths = [&["x"][..], &["y", "x"], &["x", "x", "y"], &[]];
    let dom = s.word(widths[rng.gen_range(0..widths.len())]).unwrap();
    gen.term(&mut rng, &dom)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn structural_laws_are_absorbed(seed in any::<u64>()) {
        let t = random_term(seed, 6);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let (law, t2) = perturb(&mut rng, &t);
        prop_assert!(iso_check(&from_term(&t), &from_term(&t2)), "{:?}: {} vs {}", law, t, t2);
    }

    #[test]
    fn term_images_are_monogamous(seed in any::<u64>()) {
        let t = random_term(seed, 7);
        prop_assert!(from_term(&t).is_monogamous());
    }

    #[test]
    fn to_term_roundtrip(seed in any::<u64>()) {
        let t = random_term(seed, 7);
        let h = from_term(&t);
        let back = to_term(&h).unwrap();
        prop_assert_eq!(back.dom(), t.dom());
        prop_assert!(iso_check(&from_term(&back), &h));
    }

    #[test]
    fn frobenius_roundtrip(seed in any::<u64>()) {
        let s = sig();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_graph(&mut rng, s.objects(), s.operations(), 8, 5);
        prop_assert!(iso_check(&from_term_frob(&to_term_frob(&h)), &h));
    }

    #[test]
    fn composition_is_functorial(seed in any::<u64>()) {
        let s = sig();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gen = TermGen::new(s.operations().to_vec(), 4);
        let a = gen.term(&mut rng, &s.word(&["x", "y"]).unwrap());
        let b = gen.term(&mut rng, a.cod());
        let c = gen.term(&mut rng, &s.word(&["y"]).unwrap());
        let sq = from_term(&seq(&a, &b).unwrap());
        prop_assert!(iso_check(&sq, &from_term(&a).seq_compose(&from_term(&b)).unwrap()));
        let pr = from_term(&par(&a, &c));
        prop_assert!(iso_check(&pr, &from_term(&a).par_compose(&from_term(&c))));
    }
}
