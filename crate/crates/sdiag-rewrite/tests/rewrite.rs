use sdiag_core::*;
use sdiag_rewrite::*;

fn x() -> Sort {
    Sort::unchecked("x")
}

fn g(k: StructGen) -> Term {
    Term::gen(&k.op(&x()))
}

fn idx() -> Term {
    Term::id(Word::single(&x()))
}

fn s(a: &Term, b: &Term) -> Term {
    Term::seq(a, b).unwrap()
}

fn p(a: &Term, b: &Term) -> Term {
    Term::par(a, b)
}

fn theory(name: &str) -> Theory {
    builtin_theory(name, &Signature::default()).unwrap()
}

fn script(steps: &[(&str, usize)]) -> Vec<(String, usize)> {
    steps.iter().map(|(n, i)| (n.to_string(), *i)).collect()
}

fn wire() -> OpenHypergraph {
    OpenHypergraph::identity(&Word::single(&x()))
}

/// ((m ⊗ id) ; m) nested to the left, `k` leaves.
fn left_tree(k: usize) -> Term {
    let mut t = g(StructGen::Mult);
    for _ in 2..k {
        t = s(&p(&t, &idx()), &g(StructGen::Mult));
    }
    t
}

#[test]
fn rule_counts_per_theory() {
    let counts = [
        ("monoid", 3),
        ("comm_monoid", 4),
        ("comonoid", 3),
        ("cocomm_comonoid", 4),
        ("bimonoid", 10),
        ("frobenius", 7),
        ("special_frobenius", 8),
        ("scFrob", 11),
        ("extra_special_frobenius", 12),
        ("compact_closed", 2),
        ("self_dual_compact", 2),
        ("cd", 4),
        ("cartesian", 4),
        ("cocartesian", 4),
        ("biproduct", 16),
        ("hypergraph_cat", 11),
    ];
    for (name, n) in counts {
        assert_eq!(theory(name).rules.len(), n, "{name}");
    }
    assert_eq!(THEORY_NAMES.len(), counts.len());
}

#[test]
fn cartesian_schemes_cover_signature() {
    let sig = declare_signature(&["x"], &[("f", &["x"], &["x"]), ("c", &[], &["x"])]).unwrap();
    let t = builtin_theory("cartesian", &sig).unwrap();
    let names: Vec<&str> = t.rules.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["coas", "counl", "counr", "cocom", "dup_f", "del_f", "dup_c", "del_c"]);
    // A constant copies; it has no input to be copied.
    assert!(t.rule("dup_c").unwrap().oriented);
    assert!(t.rule("dup_f").unwrap().oriented);
}

#[test]
fn multi_sort_rule_names_are_suffixed() {
    let sig = declare_signature(&["x", "y"], &[]).unwrap();
    let t = builtin_theory("monoid", &sig).unwrap();
    let names: Vec<&str> = t.rules.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["as_x", "unl_x", "unr_x", "as_y", "unl_y", "unr_y"]);
}

#[test]
fn unknown_theory_is_rejected() {
    assert_eq!(
        builtin_theory("groupoid", &Signature::default()).unwrap_err(),
        RewriteError::UnknownTheory("groupoid".into())
    );
    assert!(builtin_theory("monoid+nonsense", &Signature::default()).is_err());
}

#[test]
fn theory_sum_combines_rules() {
    let t = theory("cartesian+self_dual_compact");
    let names: Vec<&str> = t.rules.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(
        names,
        ["coas", "counl", "counr", "cocom", "dup_cup_x", "del_cup_x", "dup_cap_x", "del_cap_x", "S", "Z"]
    );
}

#[test]
fn unitality_matches_once() {
    let t = theory("monoid");
    let host = from_term(&s(&p(&g(StructGen::Unit), &idx()), &g(StructGen::Mult)));
    assert_eq!(find_matches(&t, &t.rule("unl").unwrap(), &host).len(), 1);
    assert_eq!(find_matches(&t, &t.rule("unr").unwrap(), &host).len(), 0);
}

#[test]
fn associativity_matches_in_trees() {
    let t = theory("monoid");
    let r = t.rule("as").unwrap();
    assert_eq!(find_matches(&t, &r, &from_term(&left_tree(3))).len(), 1);
    assert_eq!(find_matches(&t, &r, &from_term(&left_tree(4))).len(), 2);
}

#[test]
fn empty_host_has_no_matches() {
    for name in THEORY_NAMES {
        let t = theory(name);
        for r in &t.rules {
            if r.lhs.edge_count() > 0 {
                assert!(find_matches(&t, r, &OpenHypergraph::empty()).is_empty(), "{name} {}", r.name);
            }
        }
    }
}

#[test]
fn rewriting_unitality_gives_wire() {
    let t = theory("monoid");
    let r = t.rule("unl").unwrap();
    let host = from_term(&s(&p(&g(StructGen::Unit), &idx()), &g(StructGen::Mult)));
    let site = &find_matches(&t, &r, &host)[0];
    let out = apply_rewrite(&t, site, &r, &host).unwrap();
    assert!(iso_check(&out, &wire()));
}

#[test]
fn rewriting_frobenius_lhs_gives_rhs() {
    for name in ["frobenius", "scFrob"] {
        let t = theory(name);
        let r = t.rule("frob").unwrap();
        let sites = find_matches(&t, &r, &r.lhs);
        assert!(!sites.is_empty());
        let out = apply_rewrite(&t, &sites[0], &r, &r.lhs).unwrap();
        assert!(iso_check(&out, &r.rhs), "{name}");
    }
}

#[test]
fn rewriting_lhs_in_empty_context_gives_rhs() {
    for name in ["bimonoid", "special_frobenius", "cartesian+self_dual_compact"] {
        let t = theory(name);
        for r in t.rules.iter().filter(|r| r.lhs.edge_count() > 0) {
            let sites = find_matches(&t, r, &r.lhs);
            let hit = sites
                .iter()
                .any(|site| iso_check(&apply_rewrite(&t, site, r, &r.lhs).unwrap(), &r.rhs));
            assert!(hit, "{name} {}", r.name);
        }
    }
}

#[test]
fn stale_match_is_rejected() {
    let t = theory("monoid");
    let r = t.rule("as").unwrap();
    let host = from_term(&left_tree(3));
    let site = find_matches(&t, &r, &host).remove(0);
    let other = from_term(&left_tree(4));
    assert_eq!(apply_rewrite(&t, &site, &r, &other).unwrap_err(), RewriteError::StaleMatch);
    let unl = t.rule("unl").unwrap();
    assert_eq!(apply_rewrite(&t, &site, &unl, &host).unwrap_err(), RewriteError::StaleMatch);
}

#[test]
fn convexity_blocks_sandwiched_matches() {
    // comult ; (f ⊗ id) ; mult has a mult/comult pair around f that a
    // non-convex match would swallow.
    let sig = declare_signature(&["x"], &[("f", &["x"], &["x"])]).unwrap();
    let t = builtin_theory("special_frobenius", &sig).unwrap();
    let f = Term::gen(&sig.operation("f").unwrap());
    let host = from_term(&s(&s(&g(StructGen::Comult), &p(&f, &idx())), &g(StructGen::Mult)));
    assert!(find_matches(&t, &t.rule("special").unwrap(), &host).is_empty());
}

#[test]
fn normalize_already_normal_takes_no_steps() {
    let t = theory("comm_monoid");
    let g0 = from_term(&g(StructGen::Mult));
    let (out, steps, capped) = normalize(&t, &g0, 10);
    assert_eq!((steps, capped), (0, false));
    assert!(iso_check(&out, &g0));
}

#[test]
fn normalize_right_nests_and_drops_units() {
    let t = theory("comm_monoid");
    let host = from_term(&s(&p(&left_tree(4), &g(StructGen::Unit)), &g(StructGen::Mult)));
    let (out, steps, capped) = normalize(&t, &host, 100);
    assert!(!capped);
    assert!(steps > 0);
    let right4 = s(&p(&idx(), &s(&p(&idx(), &g(StructGen::Mult)), &g(StructGen::Mult))), &g(StructGen::Mult));
    assert!(iso_check(&out, &from_term(&right4)));
}

#[test]
fn normalize_reports_cap() {
    let t = theory("comm_monoid");
    let host = from_term(&left_tree(5));
    let (_, steps, capped) = normalize(&t, &host, 1);
    assert_eq!((steps, capped), (1, true));
}

#[test]
fn scfrob_normalization_reaches_a_spider() {
    let t = theory("scFrob");
    let frob = t.rule("frob").unwrap();
    let host = s(&s(&p(&g(StructGen::Unit), &g(StructGen::Comult)), &p(&g(StructGen::Mult), &idx())), &g(StructGen::Mult));
    for h in [frob.lhs.clone(), from_term(&host)] {
        let (out, _, capped) = normalize(&t, &h, 50);
        assert!(!capped);
        assert_eq!(out.edge_count(), 0);
        assert_eq!(out.node_count(), 1);
        let sp = spider_normal_form(&h, true).unwrap();
        assert_eq!((out.left().len(), out.right().len()), (sp[0].left_legs, sp[0].right_legs));
    }
}

#[test]
fn spider_examples() {
    let sp = |t: &Term, special| spider_normal_form(&from_term(t), special).unwrap();
    let one = |a, b, k| Spider {
        sort: x(),
        left_legs: a,
        right_legs: b,
        loops: k,
    };
    assert_eq!(sp(&g(StructGen::Comult), false), vec![one(1, 2, 0)]);
    let frob = theory("frobenius").rule("frob").unwrap();
    assert_eq!(spider_normal_form(&frob.lhs, false).unwrap(), vec![one(2, 2, 0)]);
    let bubble = s(&g(StructGen::Comult), &g(StructGen::Mult));
    assert_eq!(sp(&bubble, false), vec![one(1, 1, 1)]);
    assert_eq!(sp(&bubble, true), vec![one(1, 1, 0)]);
    let two = p(&g(StructGen::Unit), &g(StructGen::Counit));
    assert_eq!(sp(&two, false), vec![one(0, 1, 0), one(1, 0, 0)]);
    assert!(sp(&Term::empty(), false).is_empty());
}

#[test]
fn spider_rejects_other_generators() {
    let sig = declare_signature(&["x", "y"], &[("f", &["x"], &["x"])]).unwrap();
    let f = Term::gen(&sig.operation("f").unwrap());
    let err = spider_normal_form(&from_term(&s(&f, &g(StructGen::Comult))), false).unwrap_err();
    assert_eq!(err, RewriteError::MixedGenerators("f".into()));
    let y = Sort::unchecked("y");
    let mixed = p(&g(StructGen::Unit), &Term::gen(&StructGen::Unit.op(&y)));
    assert!(matches!(spider_normal_form(&from_term(&mixed), false), Err(RewriteError::MixedGenerators(_))));
}

#[test]
fn planar_genus_of_crossings() {
    let twist = s(&g(StructGen::Comult), &s(&Term::sym(&x(), &x()), &g(StructGen::Mult)));
    let plain = s(&g(StructGen::Comult), &g(StructGen::Mult));
    assert_eq!(planar_genus(&from_term(&plain)), Some(0));
    assert_eq!(planar_genus(&from_term(&twist)), Some(1));
    let frob = theory("frobenius").rule("frob").unwrap();
    assert_eq!(planar_genus(&frob.lhs), Some(0));
    assert_eq!(planar_genus(&frob.rhs), Some(0));
}

#[test]
fn decide_identical_frobenius_graphs() {
    let t = theory("scFrob");
    let a = s(&p(&g(StructGen::Unit), &idx()), &g(StructGen::Mult));
    let d = decide_eq(&t, &from_term_frob(&a), &from_term_frob(&a), 0).unwrap();
    assert_eq!(d.verdict, Verdict::Equal);
    let b = s(&g(StructGen::Comult), &g(StructGen::Mult));
    let d = decide_eq(&t, &from_term_frob(&b), &from_term_frob(&idx()), 0).unwrap();
    assert_eq!(d.verdict, Verdict::Equal);
}

#[test]
fn decide_derived_left_unitality() {
    let lhs = from_term(&s(&p(&g(StructGen::Unit), &idx()), &g(StructGen::Mult)));
    let d = decide_eq(&theory("comm_monoid"), &lhs, &wire(), 10).unwrap();
    assert_eq!(d.verdict, Verdict::Equal);
    // Without the left unit law the search has to find com then unr.
    let full = theory("comm_monoid");
    let rules: Vec<RewriteRule> = full.rules.iter().filter(|r| r.name != "unl").cloned().collect();
    let t = Theory::new("no_unl", full.base_signature.clone(), full.extra_generators.clone(), rules, Mode::Monogamous)
        .unwrap();
    let d = decide_eq(&t, &lhs, &wire(), 10).unwrap();
    assert_eq!(d.verdict, Verdict::Equal);
    assert!(matches!(d.evidence, Evidence::Search { steps: 2, .. }), "{d}");
    let d = decide_eq(&t, &lhs, &wire(), 1).unwrap();
    assert_eq!(d.verdict, Verdict::Unknown);
}

#[test]
fn decide_noncommutative_multiplication() {
    let mult = from_term(&g(StructGen::Mult));
    let swapped = from_term(&s(&Term::sym(&x(), &x()), &g(StructGen::Mult)));
    let d = decide_eq(&theory("monoid"), &mult, &swapped, 6).unwrap();
    assert_eq!(d.verdict, Verdict::NotEqual);
    match d.evidence {
        Evidence::Countermodel(c) => {
            assert_eq!(c.model, "word");
            assert_ne!(c.left, c.right);
        }
        e => panic!("{e:?}"),
    }
    let d = decide_eq(&theory("comm_monoid"), &mult, &swapped, 6).unwrap();
    assert_eq!(d.verdict, Verdict::Equal);
}

#[test]
fn decide_rejects_boundary_mismatch() {
    let err = decide_eq(&theory("monoid"), &from_term(&g(StructGen::Mult)), &wire(), 3).unwrap_err();
    assert!(matches!(err, RewriteError::BoundaryMismatch { .. }));
}

#[test]
fn decide_spider_loops_in_frobenius() {
    let t = theory("frobenius");
    let bubble = from_term(&s(&g(StructGen::Comult), &g(StructGen::Mult)));
    let d = decide_eq(&t, &bubble, &wire(), 8).unwrap();
    assert_eq!(d.verdict, Verdict::NotEqual);
    let d = decide_eq(&theory("special_frobenius"), &bubble, &wire(), 8).unwrap();
    assert_eq!(d.verdict, Verdict::Equal);
}

#[test]
fn replay_empty_script_is_start() {
    let t = theory("monoid");
    let start = from_term(&left_tree(3));
    assert_eq!(replay_derivation(&t, &start, &[]).unwrap(), start);
}

#[test]
fn replay_reports_bad_steps() {
    let t = theory("monoid");
    let start = from_term(&left_tree(3));
    assert_eq!(
        replay_derivation(&t, &start, &script(&[("frob", 0)])).unwrap_err(),
        RewriteError::NoSuchRule("frob".into())
    );
    assert_eq!(
        replay_derivation(&t, &start, &script(&[("as", 1)])).unwrap_err(),
        RewriteError::NoSuchMatch {
            rule: "as".into(),
            index: 1,
            available: 1
        }
    );
}

#[test]
fn replay_derived_left_unitality() {
    let t = theory("comm_monoid");
    let start = from_term(&s(&p(&g(StructGen::Unit), &idx()), &g(StructGen::Mult)));
    let out = replay_derivation(&t, &start, &script(&[("com", 0), ("unr", 0)])).unwrap();
    assert!(iso_check(&out, &wire()));
}

#[test]
fn replay_frobenius_middle_form() {
    let t = theory("frobenius");
    let start = from_term(&s(&g(StructGen::Mult), &g(StructGen::Comult)));
    let steps = script(&[("~counr", 4), ("~frob", 0), ("coas", 0), ("frob", 0), ("counr", 0)]);
    let trace = replay_trace(&t, &start, &steps).unwrap();
    assert_eq!(trace.len(), 6);
    let edges: Vec<usize> = trace.iter().map(|g| g.edge_count()).collect();
    assert_eq!(edges, [2, 4, 4, 4, 4, 2]);
    let frob = t.rule("frob").unwrap();
    assert!(iso_check(trace.last().unwrap(), &frob.lhs));
}

#[test]
fn replay_frobenius_yanking() {
    let t = theory("frobenius");
    let cup = s(&g(StructGen::Unit), &g(StructGen::Comult));
    let cap = s(&g(StructGen::Mult), &g(StructGen::Counit));
    let start = from_term(&s(&p(&cup, &idx()), &p(&idx(), &cap)));
    let out = replay_derivation(&t, &start, &script(&[("frob", 0), ("counr", 0), ("unl", 0)])).unwrap();
    assert!(iso_check(&out, &wire()));
}

#[test]
fn replay_cartesian_compact_degeneracy() {
    let t = theory("cartesian+self_dual_compact");
    let cup = g(StructGen::Cup);
    let split = p(&s(&cup, &p(&idx(), &g(StructGen::Counit))), &s(&cup, &p(&g(StructGen::Counit), &idx())));
    let stage1 = script(&[("~counr", 0), ("~counl", 3), ("dup_cup_x", 0)]);
    let out = replay_derivation(&t, &from_term(&cup), &stage1).unwrap();
    assert!(iso_check(&out, &from_term(&split)));

    let stage2 = script(&[("~S", 0), ("~counr", 0), ("~counl", 3), ("dup_cup_x", 0)]);
    let out = replay_derivation(&t, &wire(), &stage2).unwrap();
    let (l, r) = (out.left()[0], out.right()[0]);
    assert!(out.components().iter().all(|(ns, _)| !(ns.contains(&l) && ns.contains(&r))));
    assert_eq!((out.dom(), out.cod()), (Word::single(&x()), Word::single(&x())));
}
