//! Diagrams denoting given functions, relations, spans, cospans and
//! corelations between finite ordinals, over the structural generators of
//! a single sort.

use sdiag_core::frob::{comult_tree, mult_tree};
use sdiag_core::{par_all, perm_word_term, seq_all, to_term_frob, OpenHypergraph, Permutation, Sort, Term, Word};

use crate::corelation::Corelation;
use crate::cospan::FinCospan;
use crate::function::FinFunction;
use crate::relation::FinRelation;
use crate::span::FinSpan;

/// One path per listed pair: comultiplication trees fan each left wire out,
/// a crossing block regroups the paths by right wire, and multiplication
/// trees merge them.
fn paths_diagram(dom: usize, cod: usize, pairs: &[(usize, usize)], s: &Sort) -> Term {
    let mut by_left = pairs.to_vec();
    by_left.sort_unstable();
    let mut by_right: Vec<usize> = (0..by_left.len()).collect();
    by_right.sort_by_key(|&k| (by_left[k].1, by_left[k].0, k));
    let mut images = vec![0; by_left.len()];
    for (pos, &k) in by_right.iter().enumerate() {
        images[k] = pos;
    }
    let (mut out_deg, mut in_deg) = (vec![0; dom], vec![0; cod]);
    for &(x, y) in &by_left {
        out_deg[x] += 1;
        in_deg[y] += 1;
    }
    let fan = par_all(&out_deg.iter().map(|&k| comult_tree(s, k)).collect::<Vec<_>>());
    let cross = perm_word_term(&Word::repeat(s, by_left.len()), &Permutation::new(images).expect("regrouping"));
    let merge = par_all(&in_deg.iter().map(|&k| mult_tree(s, k)).collect::<Vec<_>>());
    seq_all(&Word::repeat(s, dom), &[fan, cross, merge]).expect("path layers compose")
}

/// Uses only `mult` and `unit`.
pub fn fn_to_diagram(f: &FinFunction, s: &Sort) -> Term {
    let pairs: Vec<_> = f.images().iter().copied().enumerate().collect();
    paths_diagram(f.dom(), f.cod(), &pairs, s)
}

pub fn rel_to_diagram(r: &FinRelation, s: &Sort) -> Term {
    let pairs: Vec<_> = r.pairs().iter().copied().collect();
    paths_diagram(r.dom(), r.cod(), &pairs, s)
}

/// One path per apex element.
pub fn span_to_diagram(sp: &FinSpan, s: &Sort) -> Term {
    let pairs: Vec<_> = sp.left().images().iter().copied().zip(sp.right().images().iter().copied()).collect();
    paths_diagram(sp.dom(), sp.cod(), &pairs, s)
}

/// One spider per apex point.
pub fn cospan_to_diagram(c: &FinCospan, s: &Sort) -> Term {
    let g = OpenHypergraph::discrete(vec![s.clone(); c.apex()], c.left().images().to_vec(), c.right().images().to_vec())
        .expect("legs land in the apex");
    to_term_frob(&g)
}

/// One spider per block.
pub fn corel_to_diagram(k: &Corelation, s: &Sort) -> Term {
    cospan_to_diagram(&k.to_cospan(), s)
}
