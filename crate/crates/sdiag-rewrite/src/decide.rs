//! Deciding equality of diagrams in a theory, as far as possible.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use sdiag_core::{CanonicalGraph, OpenHypergraph};

use crate::error::RewriteError;
use crate::matching::{apply_rewrite, raw_matches};
use crate::normal::{normal_key, quick_key, TreeLaws};
use crate::oracle::{find_countermodel, Countermodel};
use crate::spider::{is_connected, planar_genus, spider_normal_form, Spider};
use crate::theory::{RewriteRule, Theory};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    NotEqual,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "equal",
            Verdict::NotEqual => "not-equal",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Both sides have the same normal-form key.
    NormalForm,
    /// Both sides are connected planar Frobenius diagrams with this spider.
    Spider(Spider),
    /// A rewrite path of this many steps joins the two sides.
    Search { steps: usize, states: usize },
    Countermodel(Countermodel),
    /// Search ran out of budget after visiting this many states.
    Exhausted { states: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub evidence: Evidence,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)?;
        match &self.evidence {
            Evidence::NormalForm => write!(f, " (normal forms coincide)"),
            Evidence::Spider(s) => write!(f, " ({s})"),
            Evidence::Search { steps, states } => write!(f, " ({steps} steps, {states} states)"),
            Evidence::Countermodel(c) => {
                let sizes: Vec<String> = c.sizes.iter().map(|(s, n)| format!("{s}={n}")).collect();
                write!(f, " (model {} seed {} sizes [{}])", c.model, c.seed, sizes.join(","))
            }
            Evidence::Exhausted { states } => write!(f, " (budget exhausted after {states} states)"),
        }
    }
}

const STEP_CAP: usize = 256;
const STATE_CAP: usize = 5000;
const SEEDS: u64 = 6;

fn decided(verdict: Verdict, evidence: Evidence) -> Result<Decision, RewriteError> {
    Ok(Decision { verdict, evidence })
}

/// Equality of `a` and `b` modulo the rules of `t`. `Equal` comes with a
/// proof (matching normal forms, a spider, or a rewrite path of at most
/// `budget` steps); `NotEqual` comes with a finite countermodel.
pub fn decide_eq(t: &Theory, a: &OpenHypergraph, b: &OpenHypergraph, budget: usize) -> Result<Decision, RewriteError> {
    decide_eq_seeded(t, a, b, budget, 0)
}

/// [`decide_eq`] with countermodel bindings drawn from seeds
/// `seed..seed + 6`.
pub fn decide_eq_seeded(
    t: &Theory,
    a: &OpenHypergraph,
    b: &OpenHypergraph,
    budget: usize,
    seed: u64,
) -> Result<Decision, RewriteError> {
    if a.dom() != b.dom() || a.cod() != b.cod() {
        return Err(RewriteError::BoundaryMismatch {
            left_dom: a.dom(),
            left_cod: a.cod(),
            right_dom: b.dom(),
            right_cod: b.cod(),
        });
    }
    if let Some(s) = spider_shortcut(t, a, b) {
        return decided(Verdict::Equal, Evidence::Spider(s));
    }
    if normal_key(t, a, STEP_CAP) == normal_key(t, b, STEP_CAP) {
        return decided(Verdict::Equal, Evidence::NormalForm);
    }
    if let Some(c) = find_countermodel(t, a, b, seed..seed.saturating_add(SEEDS)) {
        return decided(Verdict::NotEqual, Evidence::Countermodel(c));
    }
    if t.is_hypergraph_complete() {
        return decided(Verdict::Unknown, Evidence::Exhausted { states: 2 });
    }
    let (found, states) = search(t, a, b, budget);
    match found {
        Some(steps) => decided(Verdict::Equal, Evidence::Search { steps, states }),
        None => decided(Verdict::Unknown, Evidence::Exhausted { states }),
    }
}

/// In the non-commutative Frobenius theories a connected planar diagram is
/// determined by its spider.
fn spider_shortcut(t: &Theory, a: &OpenHypergraph, b: &OpenHypergraph) -> Option<Spider> {
    let special = match t.parts.as_slice() {
        [p] if p == "frobenius" => false,
        [p] if p == "special_frobenius" => true,
        _ => return None,
    };
    let one = |g: &OpenHypergraph| -> Option<Spider> {
        if !is_connected(g) || planar_genus(g)? != 0 {
            return None;
        }
        let mut s = spider_normal_form(g, special).ok()?;
        (s.len() == 1).then(|| s.remove(0))
    };
    let (x, y) = (one(a)?, one(b)?);
    (x == y).then_some(x)
}

/// Rules usable in search: every rule in both directions, except
/// directions that would match the empty graph everywhere.
fn search_rules(t: &Theory) -> Vec<RewriteRule> {
    let mut out = Vec::new();
    for r in &t.rules {
        for d in [r.clone(), r.reversed()] {
            if d.lhs.edge_count() > 0 || d.lhs.node_count() > 0 {
                out.push(d);
            }
        }
    }
    out
}

/// Breadth-first search from both ends, one layer at a time on the
/// smaller frontier. Returns the path length if the sides meet within
/// `budget` steps, and the number of states seen.
fn search(t: &Theory, a: &OpenHypergraph, b: &OpenHypergraph, budget: usize) -> (Option<usize>, usize) {
    let laws = TreeLaws::of(t);
    let rules = search_rules(t);
    let size_cap = a.edge_count().max(b.edge_count()) + 4;
    let mut seen: [HashMap<CanonicalGraph, usize>; 2] = [HashMap::new(), HashMap::new()];
    let mut frontier: [VecDeque<OpenHypergraph>; 2] = [VecDeque::new(), VecDeque::new()];
    let mut depth = [0usize; 2];
    for (side, g) in [a, b].into_iter().enumerate() {
        seen[side].insert(quick_key(t, &laws, g), 0);
        frontier[side].push_back(g.clone());
    }
    let meet = seen[0].keys().find_map(|k| seen[1].get(k).map(|d| d + seen[0][k]));
    if meet.is_some() {
        return (meet, 2);
    }
    while depth[0] + depth[1] < budget {
        let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
        if frontier[side].is_empty() {
            break;
        }
        let layer: Vec<OpenHypergraph> = frontier[side].drain(..).collect();
        depth[side] += 1;
        let mut best: Option<usize> = None;
        for g in &layer {
            for r in &rules {
                for site in raw_matches(t.mode, r, g) {
                    let Ok(h) = apply_rewrite(t, &site, r, g) else {
                        continue;
                    };
                    if h.edge_count() > size_cap {
                        continue;
                    }
                    let key = quick_key(t, &laws, &h);
                    if seen[side].contains_key(&key) {
                        continue;
                    }
                    if let Some(d) = seen[1 - side].get(&key) {
                        let total = depth[side] + d;
                        best = Some(best.map_or(total, |b| b.min(total)));
                    }
                    seen[side].insert(key, depth[side]);
                    frontier[side].push_back(h);
                }
            }
            if seen[0].len() + seen[1].len() > STATE_CAP {
                break;
            }
        }
        if best.is_some() {
            return (best, seen[0].len() + seen[1].len());
        }
        if seen[0].len() + seen[1].len() > STATE_CAP {
            break;
        }
    }
    (None, seen[0].len() + seen[1].len())
}
