//! Normalization by oriented rules, and normal-form keys that quotient
//! (co)monoid trees by (co)associativity, (co)unitality and, where the
//! theory has it, (co)commutativity.

use std::collections::BTreeSet;

use sdiag_core::canon::canonical_form_with;
use sdiag_core::unionfind::UnionFind;
use sdiag_core::{absorb, op, CanonicalGraph, Hyperedge, NodeId, Op, OpenHypergraph, Sort, StructGen, Word};

use crate::matching::{apply_rewrite, node_ranks, raw_matches, sort_matches};
use crate::theory::Theory;

/// Applies the first match of the first oriented rule that has one, until
/// no oriented rule matches or `step_cap` steps were taken. Returns the
/// graph, the number of steps, and whether the cap was hit.
///
/// In hypergraph-complete theories a final spider-fusion step collapses
/// every Frobenius edge into its node (and, with the bone law, drops
/// closed spiders); it counts as one step when it changes the graph.
pub fn normalize(t: &Theory, host: &OpenHypergraph, step_cap: usize) -> (OpenHypergraph, usize, bool) {
    let (g, steps, capped) = reduce(t, host, step_cap);
    if capped || !t.is_hypergraph_complete() || steps == step_cap {
        return (g, steps, capped);
    }
    let fused = fuse(t, &g);
    if fused == g {
        (g, steps, false)
    } else {
        (fused, steps + 1, false)
    }
}

fn fuse(t: &Theory, g: &OpenHypergraph) -> OpenHypergraph {
    let a = absorb(g);
    if t.is_extra_special() {
        drop_isolated(&a)
    } else {
        a
    }
}

fn reduce(t: &Theory, host: &OpenHypergraph, step_cap: usize) -> (OpenHypergraph, usize, bool) {
    let mut g = host.clone();
    let mut steps = 0;
    'outer: loop {
        if steps == step_cap {
            let more = t.oriented_rules().any(|r| !raw_matches(t.mode, r, &g).is_empty());
            return (g, steps, more);
        }
        let mut ranks: Option<Vec<NodeId>> = None;
        for r in t.oriented_rules() {
            let mut sites = raw_matches(t.mode, r, &g);
            if sites.is_empty() {
                continue;
            }
            if sites.len() > 1 {
                let rk = ranks.get_or_insert_with(|| node_ranks(&g));
                sort_matches(&g, rk, &mut sites);
            }
            g = apply_rewrite(t, &sites[0], r, &g).expect("fresh match applies");
            steps += 1;
            continue 'outer;
        }
        return (g, steps, false);
    }
}

/// Per-sort (co)monoid laws available in a theory.
#[derive(Clone, Debug, Default)]
pub(crate) struct TreeLaws {
    /// Sorts whose multiplication trees flatten, with commutativity.
    pub monoid: Vec<(Sort, bool)>,
    pub comonoid: Vec<(Sort, bool)>,
}

impl TreeLaws {
    pub fn of(t: &Theory) -> TreeLaws {
        let mut laws = TreeLaws::default();
        for s in t.sorts() {
            let has = |b: &str| t.has_rule(&t.rule_name(b, &s));
            if has("as") && has("unl") && has("unr") {
                laws.monoid.push((s.clone(), has("com")));
            }
            if has("coas") && has("counl") && has("counr") {
                laws.comonoid.push((s.clone(), has("cocom")));
            }
        }
        laws
    }

    fn symmetric(&self) -> impl Fn(&Op) -> (bool, bool) + '_ {
        move |o: &Op| {
            let name: &str = &o.name;
            let Some(base) = name.strip_suffix('*') else {
                return (false, false);
            };
            for (s, comm) in &self.monoid {
                if base == StructGen::Mult.name_for(s) {
                    return (*comm, false);
                }
            }
            for (s, comm) in &self.comonoid {
                if base == StructGen::Comult.name_for(s) {
                    return (false, *comm);
                }
            }
            (false, false)
        }
    }
}

fn nary(g: StructGen, s: &Sort, k: usize) -> Op {
    let name = format!("{}*", g.name_for(s));
    match g {
        StructGen::Mult => op(&name, Word::repeat(s, k), Word::single(s)),
        _ => op(&name, Word::single(s), Word::repeat(s, k)),
    }
}

/// Replaces every maximal tree of `mult`/`unit` (or `comult`/`counit`)
/// edges by a single n-ary edge; one-leaf trees become plain wires.
/// Only defined on monogamous acyclic graphs; others are returned unchanged.
pub(crate) fn flatten(laws: &TreeLaws, g: &OpenHypergraph) -> OpenHypergraph {
    if !g.is_monogamous() || g.is_cyclic() || (laws.monoid.is_empty() && laws.comonoid.is_empty()) {
        return g.clone();
    }
    let n = g.node_count();
    let mut producer = vec![usize::MAX; n];
    let mut consumer = vec![usize::MAX; n];
    for (i, e) in g.edges().iter().enumerate() {
        for &v in &e.targets {
            producer[v] = i;
        }
        for &v in &e.sources {
            consumer[v] = i;
        }
    }
    let mut interface = vec![false; n];
    for &v in g.left().iter().chain(g.right().iter()) {
        interface[v] = true;
    }
    let kind = |e: usize| StructGen::recognize(&g.edges()[e].op);
    let in_monoid = |e: usize| match kind(e) {
        Some((StructGen::Mult | StructGen::Unit, s)) => laws.monoid.iter().any(|(m, _)| *m == s),
        _ => false,
    };
    let in_comonoid = |e: usize| match kind(e) {
        Some((StructGen::Comult | StructGen::Counit, s)) => laws.comonoid.iter().any(|(m, _)| *m == s),
        _ => false,
    };
    // A tree edge is inner when its single output (input) is a plain wire
    // into (out of) another edge of the same tree.
    let inner_m = |e: usize| {
        let o = g.edges()[e].targets[0];
        !interface[o] && consumer[o] != usize::MAX && in_monoid(consumer[o])
    };
    let inner_c = |e: usize| {
        let i = g.edges()[e].sources[0];
        !interface[i] && producer[i] != usize::MAX && in_comonoid(producer[i])
    };

    fn leaves(
        g: &OpenHypergraph,
        e: usize,
        up: &dyn Fn(NodeId) -> Option<usize>,
        legs: &dyn Fn(&Hyperedge) -> Vec<NodeId>,
        out: &mut Vec<NodeId>,
    ) {
        for v in legs(&g.edges()[e]) {
            match up(v) {
                Some(p) => leaves(g, p, up, legs, out),
                None => out.push(v),
            }
        }
    }

    let mut keep = vec![true; g.edge_count()];
    let mut uf = UnionFind::new(n);
    let mut added: Vec<Hyperedge> = Vec::new();
    let up_m = |v: NodeId| {
        let p = producer[v];
        (p != usize::MAX && in_monoid(p) && inner_m(p)).then_some(p)
    };
    let up_c = |v: NodeId| {
        let p = consumer[v];
        (p != usize::MAX && in_comonoid(p) && inner_c(p)).then_some(p)
    };
    for e in 0..g.edge_count() {
        if in_monoid(e) {
            keep[e] = false;
            if inner_m(e) {
                continue;
            }
            let mut ls = Vec::new();
            leaves(g, e, &up_m, &|h| h.sources.clone(), &mut ls);
            let o = g.edges()[e].targets[0];
            if ls.len() == 1 {
                uf.union(ls[0], o);
            } else {
                let s = g.nodes()[o].clone();
                added.push(Hyperedge {
                    op: nary(StructGen::Mult, &s, ls.len()),
                    sources: ls,
                    targets: vec![o],
                });
            }
        } else if in_comonoid(e) {
            keep[e] = false;
            if inner_c(e) {
                continue;
            }
            let mut ls = Vec::new();
            leaves(g, e, &up_c, &|h| h.targets.clone(), &mut ls);
            let i = g.edges()[e].sources[0];
            if ls.len() == 1 {
                uf.union(ls[0], i);
            } else {
                let s = g.nodes()[i].clone();
                added.push(Hyperedge {
                    op: nary(StructGen::Comult, &s, ls.len()),
                    sources: vec![i],
                    targets: ls,
                });
            }
        }
    }
    rebuild(g, &keep, added, &mut uf)
}

/// Keeps the marked edges plus `added`, merges nodes by `uf`, and drops
/// nodes that are no longer referenced.
fn rebuild(g: &OpenHypergraph, keep: &[bool], added: Vec<Hyperedge>, uf: &mut UnionFind) -> OpenHypergraph {
    let n = g.node_count();
    let mut edges: Vec<Hyperedge> = g.edges().iter().zip(keep).filter(|(_, k)| **k).map(|(e, _)| e.clone()).collect();
    edges.extend(added);
    let mut used = vec![false; n];
    for e in &edges {
        for &v in e.sources.iter().chain(e.targets.iter()) {
            used[uf.find(v)] = true;
        }
    }
    for &v in g.left().iter().chain(g.right().iter()) {
        used[uf.find(v)] = true;
    }
    let mut renum = vec![usize::MAX; n];
    let mut nodes: Vec<Sort> = Vec::new();
    for v in 0..n {
        let r = uf.find(v);
        if used[r] && renum[r] == usize::MAX {
            renum[r] = nodes.len();
            nodes.push(g.nodes()[v].clone());
        }
    }
    let mut map = |v: &NodeId| renum[uf.find(*v)];
    let edges: Vec<Hyperedge> = edges
        .into_iter()
        .map(|e| Hyperedge {
            op: e.op,
            sources: e.sources.iter().map(&mut map).collect(),
            targets: e.targets.iter().map(&mut map).collect(),
        })
        .collect();
    let left = g.left().iter().map(&mut map).collect();
    let right = g.right().iter().map(&mut map).collect();
    OpenHypergraph::new(nodes, edges, left, right).expect("rebuilt graph is well formed")
}

/// Drops nodes with no incident edge and no interface occurrence.
pub(crate) fn drop_isolated(g: &OpenHypergraph) -> OpenHypergraph {
    let keep_edges = vec![true; g.edge_count()];
    let keep_nodes = vec![false; g.node_count()];
    g.restrict(&keep_edges, &keep_nodes)
}

/// A canonical graph such that equal keys imply equality in the theory.
/// Hypergraph-complete theories use Frobenius absorption, which makes the
/// key a complete invariant there.
pub fn normal_key(t: &Theory, g: &OpenHypergraph, step_cap: usize) -> CanonicalGraph {
    if t.is_hypergraph_complete() {
        return sdiag_core::canonical_form(&fuse(t, g));
    }
    let laws = TreeLaws::of(t);
    let (n, _, _) = normalize(t, g, step_cap);
    let flat = flatten(&laws, &n);
    let sym = laws.symmetric();
    canonical_form_with(&flat, &sym)
}

/// The key without normalization, used for search states.
pub(crate) fn quick_key(t: &Theory, laws: &TreeLaws, g: &OpenHypergraph) -> CanonicalGraph {
    if t.is_hypergraph_complete() {
        return sdiag_core::canonical_form(&fuse(t, g));
    }
    let sym = laws.symmetric();
    canonical_form_with(&flatten(laws, g), &sym)
}

/// Operations of a graph outside the structural generators.
pub(crate) fn sigma_ops(g: &OpenHypergraph) -> BTreeSet<Op> {
    g.operations()
        .into_iter()
        .filter(|o| StructGen::recognize(o).is_none() && sdiag_core::DualGen::recognize(o).is_none())
        .collect()
}
