//! Random well-typed terms and random open hypergraphs for property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::hypergraph::{Hyperedge, OpenHypergraph};
use crate::perm::{perm_word_term, Permutation};
use crate::syntax::{id_word, sym_words, Op, Sort, Term, TermKind, Word};

#[derive(Clone, Debug)]
pub struct TermGen {
    pub generators: Vec<Op>,
    /// Layers of generators/crossings per term, roughly.
    pub size: usize,
    pub max_width: usize,
    pub allow_sym: bool,
}

impl TermGen {
    pub fn new(generators: Vec<Op>, size: usize) -> TermGen {
        TermGen {
            generators,
            size,
            max_width: 6,
            allow_sym: true,
        }
    }

    pub fn term<R: Rng>(&self, rng: &mut R, dom: &Word) -> Term {
        self.block(rng, dom, self.size, self.max_width.max(dom.len()))
    }

    /// A term whose domain is `w`, drawn with the given budget; no boundary
    /// inside it is wider than `limit` unless `w` already is.
    fn block<R: Rng>(&self, rng: &mut R, w: &Word, budget: usize, limit: usize) -> Term {
        if budget == 0 {
            return self.wiring(rng, w);
        }
        let roll: f64 = rng.gen();
        if w.len() >= 2 && roll < 0.2 {
            let p = rng.gen_range(1..w.len());
            let b1 = rng.gen_range(0..=budget);
            let rest = w.len() - p;
            let top = self.block(rng, &w.slice(0, p), b1, limit.saturating_sub(rest).max(p));
            let room = limit.saturating_sub(top.cod().len().max(p)).max(rest);
            let bot = self.block(rng, &w.slice(p, w.len()), budget - b1, room);
            return Term::par(&top, &bot);
        }
        if budget >= 2 && roll < 0.6 {
            let b1 = rng.gen_range(1..budget);
            let a = self.block(rng, w, b1, limit);
            let b = self.block(rng, a.cod(), budget - b1, limit.max(a.cod().len()));
            return Term::seq(&a, &b).expect("domains chained");
        }
        let layer = self.layer(rng, w, limit);
        if budget == 1 {
            return layer;
        }
        let rest = self.block(rng, layer.cod(), budget - 1, limit.max(layer.cod().len()));
        Term::seq(&layer, &rest).expect("domains chained")
    }

    fn wiring<R: Rng>(&self, rng: &mut R, w: &Word) -> Term {
        match rng.gen_range(0..4) {
            0 if w.is_empty() => Term::empty(),
            1 if !w.is_empty() => Term::id(w.clone()),
            2 if self.allow_sym && w.len() >= 2 => {
                let mut images: Vec<usize> = (0..w.len()).collect();
                images.shuffle(rng);
                perm_word_term(w, &Permutation::new(images).expect("shuffle"))
            }
            _ => id_word(w),
        }
    }

    /// One generator or crossing placed somewhere on `w`.
    fn layer<R: Rng>(&self, rng: &mut R, w: &Word, limit: usize) -> Term {
        let mut choices: Vec<(usize, Term)> = Vec::new();
        for o in &self.generators {
            let k = o.arity.len();
            if k > w.len() || (w.len() - k + o.coarity.len() > limit && o.coarity.len() > k) {
                continue;
            }
            for p in 0..=w.len() - k {
                if w[p..p + k] == o.arity[..] {
                    choices.push((p, Term::gen(o)));
                }
            }
        }
        if self.allow_sym {
            for p in 0..w.len().saturating_sub(1) {
                choices.push((p, Term::sym(&w[p], &w[p + 1])));
            }
        }
        let Some((p, t)) = choices.choose(rng).cloned() else {
            return self.wiring(rng, w);
        };
        let k = t.dom().len();
        let before = w.slice(0, p);
        let after = w.slice(p + k, w.len());
        let mut t = t;
        if !after.is_empty() {
            t = Term::par(&t, &self.wiring(rng, &after));
        }
        if !before.is_empty() {
            t = Term::par(&self.wiring(rng, &before), &t);
        }
        t
    }
}

/// A random open hypergraph with at most `max_nodes` nodes; interfaces may
/// repeat nodes and edges may form cycles.
pub fn random_graph<R: Rng>(rng: &mut R, sorts: &[Sort], ops: &[Op], max_nodes: usize, max_edges: usize) -> OpenHypergraph {
    let n = rng.gen_range(1..=max_nodes);
    let nodes: Vec<Sort> = (0..n).map(|_| sorts.choose(rng).expect("sorts").clone()).collect();
    let pick = |rng: &mut R, s: &Sort| -> Option<usize> {
        let c: Vec<usize> = (0..n).filter(|&i| &nodes[i] == s).collect();
        c.choose(rng).copied()
    };
    let mut edges = Vec::new();
    for _ in 0..rng.gen_range(0..=max_edges) {
        let Some(o) = ops.choose(rng) else { break };
        let sources: Option<Vec<usize>> = o.arity.iter().map(|s| pick(rng, s)).collect();
        let targets: Option<Vec<usize>> = o.coarity.iter().map(|s| pick(rng, s)).collect();
        if let (Some(sources), Some(targets)) = (sources, targets) {
            edges.push(Hyperedge {
                op: o.clone(),
                sources,
                targets,
            });
        }
    }
    let left = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..n)).collect();
    let right = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..n)).collect();
    OpenHypergraph::new(nodes, edges, left, right).expect("sorts respected")
}

/// The structural laws used by [`perturb`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    SeqAssoc,
    ParAssoc,
    SeqUnit,
    ParUnit,
    Interchange,
    SymNatural,
    SymInvolutive,
}

fn subterm_count(t: &Term) -> usize {
    match t.kind() {
        TermKind::Seq(a, b) | TermKind::Par(a, b) => 1 + subterm_count(a) + subterm_count(b),
        _ => 1,
    }
}

fn is_wiring(t: &Term) -> bool {
    match t.kind() {
        TermKind::Id(_) | TermKind::Empty => true,
        TermKind::Par(a, b) => is_wiring(a) && is_wiring(b),
        _ => false,
    }
}

fn split_word<R: Rng>(rng: &mut R, w: &Word) -> (Word, Word) {
    let p = rng.gen_range(0..=w.len());
    (w.slice(0, p), w.slice(p, w.len()))
}

/// One application of `law` at the root of `t`, in either direction,
/// if the law applies there.
fn apply_law<R: Rng>(rng: &mut R, law: Law, t: &Term) -> Option<Term> {
    let seq = |a: &Term, b: &Term| Term::seq(a, b).expect("law preserves typing");
    match (law, t.kind()) {
        (Law::SeqAssoc, TermKind::Seq(l, c)) if matches!(l.kind(), TermKind::Seq(..)) => {
            let TermKind::Seq(a, b) = l.kind() else { unreachable!() };
            Some(seq(a, &seq(b, c)))
        }
        (Law::SeqAssoc, TermKind::Seq(a, r)) if matches!(r.kind(), TermKind::Seq(..)) => {
            let TermKind::Seq(b, c) = r.kind() else { unreachable!() };
            Some(seq(&seq(a, b), c))
        }
        (Law::ParAssoc, TermKind::Par(l, c)) if matches!(l.kind(), TermKind::Par(..)) => {
            let TermKind::Par(a, b) = l.kind() else { unreachable!() };
            Some(Term::par(a, &Term::par(b, c)))
        }
        (Law::ParAssoc, TermKind::Par(a, r)) if matches!(r.kind(), TermKind::Par(..)) => {
            let TermKind::Par(b, c) = r.kind() else { unreachable!() };
            Some(Term::par(&Term::par(a, b), c))
        }
        (Law::SeqUnit, TermKind::Seq(a, b)) if is_wiring(b) && rng.gen_bool(0.5) => Some(a.clone()),
        (Law::SeqUnit, TermKind::Seq(a, b)) if is_wiring(a) && rng.gen_bool(0.5) => Some(b.clone()),
        (Law::SeqUnit, _) => Some(if rng.gen_bool(0.5) {
            seq(t, &id_word(t.cod()))
        } else {
            seq(&Term::id(t.dom().clone()), t)
        }),
        (Law::ParUnit, TermKind::Par(a, b)) if matches!(a.kind(), TermKind::Empty) => Some(b.clone()),
        (Law::ParUnit, TermKind::Par(a, b)) if matches!(b.kind(), TermKind::Empty) => Some(a.clone()),
        (Law::ParUnit, _) => Some(if rng.gen_bool(0.5) {
            Term::par(&Term::empty(), t)
        } else {
            Term::par(t, &Term::empty())
        }),
        (Law::Interchange, TermKind::Par(l, r))
            if matches!(l.kind(), TermKind::Seq(..)) && matches!(r.kind(), TermKind::Seq(..)) =>
        {
            let (TermKind::Seq(a, b), TermKind::Seq(c, d)) = (l.kind(), r.kind()) else {
                unreachable!()
            };
            Some(seq(&Term::par(a, c), &Term::par(b, d)))
        }
        (Law::Interchange, TermKind::Seq(l, r))
            if matches!(l.kind(), TermKind::Par(..)) && matches!(r.kind(), TermKind::Par(..)) =>
        {
            let (TermKind::Par(a, c), TermKind::Par(b, d)) = (l.kind(), r.kind()) else {
                unreachable!()
            };
            if a.cod() == b.dom() {
                Some(Term::par(&seq(a, b), &seq(c, d)))
            } else {
                None
            }
        }
        (Law::Interchange, TermKind::Par(a, b)) => {
            Some(seq(&Term::par(a, &id_word(b.dom())), &Term::par(&id_word(a.cod()), b)))
        }
        (Law::SymNatural, TermKind::Par(a, b)) => {
            let crossed = seq(&sym_words(a.dom(), b.dom()), &Term::par(b, a));
            Some(seq(&crossed, &sym_words(b.cod(), a.cod())))
        }
        (Law::SymNatural, _) => {
            let (v, w) = split_word(rng, t.cod());
            let (x, y) = split_word(rng, t.dom());
            let back = seq(&sym_words(&x, &y), &sym_words(&y, &x));
            let fwd = seq(&sym_words(&v, &w), &sym_words(&w, &v));
            Some(seq(&seq(&back, t), &fwd))
        }
        (Law::SymInvolutive, TermKind::Seq(a, b)) if is_sym_pair(a, b) => Some(id_word(a.dom())),
        (Law::SymInvolutive, _) => {
            let (v, w) = split_word(rng, t.cod());
            Some(seq(t, &seq(&sym_words(&v, &w), &sym_words(&w, &v))))
        }
        _ => None,
    }
}

fn is_sym_pair(a: &Term, b: &Term) -> bool {
    matches!((a.kind(), b.kind()), (TermKind::Sym(x, y), TermKind::Sym(y2, x2)) if x == x2 && y == y2)
}

fn replace_at<R: Rng>(rng: &mut R, t: &Term, k: &mut usize, law: Law) -> Option<Term> {
    if *k == 0 {
        *k = usize::MAX;
        return apply_law(rng, law, t);
    }
    *k -= 1;
    match t.kind() {
        TermKind::Seq(a, b) => {
            if let Some(a2) = replace_at(rng, a, k, law) {
                return Some(Term::seq(&a2, b).expect("same type"));
            }
            if *k == usize::MAX {
                return None;
            }
            replace_at(rng, b, k, law).map(|b2| Term::seq(a, &b2).expect("same type"))
        }
        TermKind::Par(a, b) => {
            if let Some(a2) = replace_at(rng, a, k, law) {
                return Some(Term::par(&a2, b));
            }
            if *k == usize::MAX {
                return None;
            }
            replace_at(rng, b, k, law).map(|b2| Term::par(a, &b2))
        }
        _ => None,
    }
}

/// Applies one randomly chosen structural law at a random position.
pub fn perturb<R: Rng>(rng: &mut R, t: &Term) -> (Law, Term) {
    const LAWS: [Law; 7] = [
        Law::SeqAssoc,
        Law::ParAssoc,
        Law::SeqUnit,
        Law::ParUnit,
        Law::Interchange,
        Law::SymNatural,
        Law::SymInvolutive,
    ];
    let n = subterm_count(t);
    loop {
        let law = *LAWS.choose(rng).expect("laws");
        let mut k = rng.gen_range(0..n);
        if let Some(out) = replace_at(rng, t, &mut k, law) {
            debug_assert_eq!(out.dom(), t.dom());
            debug_assert_eq!(out.cod(), t.cod());
            return (law, out);
        }
    }
}
