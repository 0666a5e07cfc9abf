//! Terms over Σ extended with commutative special Frobenius structure
//! correspond to arbitrary open hypergraphs: the structural generators
//! become plain node identifications.

use crate::extract::discrete_term;
use crate::hypergraph::{from_term_with, NodeId, OpenHypergraph};
use crate::structure::StructGen;
use crate::syntax::{id_word, par_all, seq_all, Sort, Term, Word};
use crate::unionfind::UnionFind;

/// The discrete graph interpreting a structural generator.
pub fn structural_graph(g: StructGen, s: &Sort) -> OpenHypergraph {
    let (a, b) = g.shape();
    OpenHypergraph::discrete(vec![s.clone()], vec![0; a], vec![0; b]).expect("single node")
}

pub fn from_term_frob(t: &Term) -> OpenHypergraph {
    from_term_with(t, &mut |o| match StructGen::recognize(o) {
        Some((g, s)) => structural_graph(g, &s),
        None => OpenHypergraph::generator(o),
    })
}

/// Merges the nodes around every structural hyperedge and drops the edge.
pub fn absorb(g: &OpenHypergraph) -> OpenHypergraph {
    let mut uf = UnionFind::new(g.node_count());
    let mut keep = vec![true; g.edge_count()];
    for (i, e) in g.edges().iter().enumerate() {
        if StructGen::recognize(&e.op).is_some() {
            keep[i] = false;
            let mut it = e.sources.iter().chain(e.targets.iter());
            if let Some(&first) = it.next() {
                for &v in it {
                    uf.union(first, v);
                }
            }
        }
    }
    let all = vec![true; g.node_count()];
    g.restrict(&keep, &all).quotient(&mut uf)
}

pub fn mult_tree(s: &Sort, k: usize) -> Term {
    match k {
        0 => Term::gen(&StructGen::Unit.op(s)),
        1 => Term::id(Word::single(s)),
        _ => {
            let head = Term::par(&mult_tree(s, k - 1), &Term::id(Word::single(s)));
            Term::seq(&head, &Term::gen(&StructGen::Mult.op(s))).expect("mult tree")
        }
    }
}

pub fn comult_tree(s: &Sort, k: usize) -> Term {
    match k {
        0 => Term::gen(&StructGen::Counit.op(s)),
        1 => Term::id(Word::single(s)),
        _ => {
            let tail = Term::par(&comult_tree(s, k - 1), &Term::id(Word::single(s)));
            Term::seq(&Term::gen(&StructGen::Comult.op(s)), &tail).expect("comult tree")
        }
    }
}

/// A connected Frobenius diagram with `a` inputs and `b` outputs.
pub fn spider_term(s: &Sort, a: usize, b: usize) -> Term {
    Term::seq(&mult_tree(s, a), &comult_tree(s, b)).expect("spider")
}

pub fn to_term_frob(g: &OpenHypergraph) -> Term {
    let sorts = g.nodes();
    let inputs: Vec<NodeId> = g.edges().iter().flat_map(|e| e.sources.iter().copied()).collect();
    let outputs: Vec<NodeId> = g.edges().iter().flat_map(|e| e.targets.iter().copied()).collect();
    let mut right: Vec<NodeId> = g.right().to_vec();
    right.extend(inputs.iter().copied());
    right.extend(outputs.iter().copied());
    let first = discrete_term(sorts, g.left(), &right, &spider_term);
    if g.edge_count() == 0 {
        return first;
    }
    let rword = g.cod();
    let bword: Word = outputs.iter().map(|&v| sorts[v].clone()).collect();
    let mut blocks = vec![id_word(&rword)];
    blocks.extend(g.edges().iter().map(|e| Term::gen(&e.op)));
    blocks.push(id_word(&bword));
    let middle = par_all(&blocks);

    let r = rword.len();
    let k = bword.len();
    let mut node_sorts: Vec<Sort> = rword.0.clone();
    node_sorts.extend(bword.0.iter().cloned());
    let mut left: Vec<NodeId> = (0..r).collect();
    left.extend(r..r + k);
    left.extend(r..r + k);
    let last = discrete_term(&node_sorts, &left, &(0..r).collect::<Vec<_>>(), &spider_term);
    seq_all(&g.dom(), &[first, middle, last]).expect("frobenius layers compose")
}
