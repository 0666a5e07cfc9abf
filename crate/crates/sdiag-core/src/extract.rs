//! Reading terms back off open hypergraphs.

use crate::error::GraphError;
use crate::hypergraph::{EdgeId, NodeId, OpenHypergraph};
use crate::perm::{perm_word_term, Permutation};
use crate::syntax::{id_word, par_all, seq_all, Sort, Term, Word};

/// Hyperedges grouped into layers so that every edge only consumes nodes
/// produced by the interface or by earlier layers. `None` on a cycle.
pub fn edge_layers(g: &OpenHypergraph) -> Option<Vec<Vec<EdgeId>>> {
    let mut producers: Vec<Vec<EdgeId>> = vec![Vec::new(); g.node_count()];
    for (i, e) in g.edges().iter().enumerate() {
        for &v in &e.targets {
            producers[v].push(i);
        }
    }
    let mut done = vec![false; g.edge_count()];
    let mut remaining = g.edge_count();
    let mut layers = Vec::new();
    while remaining > 0 {
        let layer: Vec<EdgeId> = (0..g.edge_count())
            .filter(|&i| !done[i])
            .filter(|&i| {
                g.edges()[i]
                    .sources
                    .iter()
                    .all(|&v| producers[v].iter().all(|&p| done[p]))
            })
            .collect();
        if layer.is_empty() {
            return None;
        }
        for &i in &layer {
            done[i] = true;
        }
        remaining -= layer.len();
        layers.push(layer);
    }
    Some(layers)
}

fn sorts_of(g: &OpenHypergraph, wires: &[NodeId]) -> Word {
    wires.iter().map(|&v| g.nodes()[v].clone()).collect()
}

/// Permutation taking `from` (a list of distinct nodes) to the order `to`.
fn reorder(from: &[NodeId], to: &[NodeId]) -> Permutation {
    let images = from
        .iter()
        .map(|v| to.iter().position(|w| w == v).expect("same node set"))
        .collect();
    Permutation::new(images).expect("distinct nodes")
}

pub fn to_term(g: &OpenHypergraph) -> Result<Term, GraphError> {
    if let Err(w) = g.check_monogamy() {
        return Err(GraphError::NotMonogamous {
            node: w.node,
            violation: w.violation.to_string(),
        });
    }
    let layers = edge_layers(g).ok_or(GraphError::CyclicGraph)?;
    let mut wires: Vec<NodeId> = g.left().to_vec();
    let mut parts: Vec<Term> = Vec::new();
    for layer in layers {
        let inputs: Vec<NodeId> = layer.iter().flat_map(|&e| g.edges()[e].sources.iter().copied()).collect();
        let rest: Vec<NodeId> = wires.iter().copied().filter(|v| !inputs.contains(v)).collect();
        let mut wanted = inputs.clone();
        wanted.extend(rest.iter().copied());
        let p = reorder(&wires, &wanted);
        if !p.is_identity() {
            parts.push(perm_word_term(&sorts_of(g, &wires), &p));
        }
        let mut blocks: Vec<Term> = layer.iter().map(|&e| Term::gen(&g.edges()[e].op)).collect();
        if !rest.is_empty() {
            blocks.push(id_word(&sorts_of(g, &rest)));
        }
        parts.push(par_all(&blocks));
        wires = layer.iter().flat_map(|&e| g.edges()[e].targets.iter().copied()).collect();
        wires.extend(rest);
    }
    let p = reorder(&wires, g.right());
    if !p.is_identity() {
        parts.push(perm_word_term(&sorts_of(g, &wires), &p));
    }
    Ok(seq_all(&g.dom(), &parts).expect("layers compose"))
}

/// Groups the occurrences of each node, realizes every node as a spider of
/// the given arity/coarity, then permutes into the right order.
pub(crate) fn discrete_term(
    sorts: &[Sort],
    left: &[NodeId],
    right: &[NodeId],
    spider: &dyn Fn(&Sort, usize, usize) -> Term,
) -> Term {
    let n = sorts.len();
    let mut a = vec![0usize; n];
    let mut b = vec![0usize; n];
    for &v in left {
        a[v] += 1;
    }
    for &v in right {
        b[v] += 1;
    }
    let lword: Word = left.iter().map(|&v| sorts[v].clone()).collect();
    let rword: Word = right.iter().map(|&v| sorts[v].clone()).collect();

    let mut lpos: Vec<usize> = (0..left.len()).collect();
    lpos.sort_by_key(|&i| (left[i], i));
    let mut images = vec![0; left.len()];
    for (k, &i) in lpos.iter().enumerate() {
        images[i] = k;
    }
    let gather = Permutation::new(images).expect("bijection");

    let mut rpos: Vec<usize> = (0..right.len()).collect();
    rpos.sort_by_key(|&i| (right[i], i));
    let scatter = Permutation::new(rpos.clone()).expect("bijection");

    let spiders: Vec<Term> = (0..n).map(|v| spider(&sorts[v], a[v], b[v])).collect();
    let mut parts = Vec::new();
    if !gather.is_identity() {
        parts.push(perm_word_term(&lword, &gather));
    }
    parts.push(par_all(&spiders));
    if !scatter.is_identity() {
        let mid: Word = rpos.iter().map(|&i| sorts[right[i]].clone()).collect();
        parts.push(perm_word_term(&mid, &scatter));
    }
    let t = seq_all(&lword, &parts).expect("spider layers compose");
    debug_assert_eq!(t.cod(), &rword);
    t
}
