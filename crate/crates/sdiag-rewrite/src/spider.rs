//! Spiders: the normal forms of connected Frobenius diagrams.

use std::fmt;

use sdiag_core::{OpenHypergraph, Sort, StructGen};

use crate::error::RewriteError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spider {
    pub sort: Sort,
    pub left_legs: usize,
    pub right_legs: usize,
    pub loops: usize,
}

impl fmt::Display for Spider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "spider {} ({}, {}, {})", self.sort, self.left_legs, self.right_legs, self.loops)
    }
}

/// The single sort of a graph built only from the Frobenius quadruple.
fn frobenius_sort(g: &OpenHypergraph) -> Result<Option<Sort>, RewriteError> {
    let mut sort: Option<Sort> = g.nodes().first().cloned();
    for e in g.edges() {
        match StructGen::recognize(&e.op) {
            Some((k, s)) if k.is_frobenius() => {
                if sort.as_ref().is_some_and(|t| *t != s) {
                    return Err(RewriteError::MixedGenerators(e.op.name.to_string()));
                }
                sort = Some(s);
            }
            _ => return Err(RewriteError::MixedGenerators(e.op.name.to_string())),
        }
    }
    if let (Some(s), Some(t)) = (&sort, g.nodes().iter().find(|t| Some(*t) != sort.as_ref())) {
        return Err(RewriteError::MixedGenerators(format!("sorts {s} and {t}")));
    }
    Ok(sort)
}

/// One spider per connected component, ordered by smallest node. Loops are
/// the cycle rank of the component's node/edge incidence graph; with
/// `special` they are reported as 0.
pub fn spider_normal_form(g: &OpenHypergraph, special: bool) -> Result<Vec<Spider>, RewriteError> {
    let Some(sort) = frobenius_sort(g)? else {
        return Ok(Vec::new());
    };
    let mut comp_of = vec![0; g.node_count()];
    let comps = g.components();
    for (c, (ns, _)) in comps.iter().enumerate() {
        for &v in ns {
            comp_of[v] = c;
        }
    }
    let mut out = Vec::new();
    for (c, (ns, es)) in comps.iter().enumerate() {
        let incidences: usize = es.iter().map(|&e| g.edges()[e].sources.len() + g.edges()[e].targets.len()).sum();
        let entities = ns.len() + es.len();
        let loops = if special { 0 } else { (incidences + 1).saturating_sub(entities) };
        out.push(Spider {
            sort: sort.clone(),
            left_legs: g.left().iter().filter(|&&v| comp_of[v] == c).count(),
            right_legs: g.right().iter().filter(|&&v| comp_of[v] == c).count(),
            loops,
        });
    }
    Ok(out)
}

/// Genus of a monogamous graph drawn with each edge's legs in their listed
/// order (sources down the left side, targets down the right) and the
/// interfaces on the outer boundary. A connected graph comes from a term
/// without symmetries exactly when this is 0.
pub fn planar_genus(g: &OpenHypergraph) -> Option<usize> {
    if !g.is_monogamous() {
        return None;
    }
    // Vertices: one per edge, plus the outer boundary. Each node is a
    // wire with a producer port and a consumer port.
    #[derive(Clone, Copy, PartialEq, Eq)]
    enum Port {
        Edge(usize, bool, usize),
        Left(usize),
        Right(usize),
    }
    let n = g.node_count();
    let mut producer: Vec<Option<Port>> = vec![None; n];
    let mut consumer: Vec<Option<Port>> = vec![None; n];
    for (i, &v) in g.left().iter().enumerate() {
        producer[v] = Some(Port::Left(i));
    }
    for (i, &v) in g.right().iter().enumerate() {
        consumer[v] = Some(Port::Right(i));
    }
    for (i, e) in g.edges().iter().enumerate() {
        for (p, &v) in e.sources.iter().enumerate() {
            consumer[v] = Some(Port::Edge(i, false, p));
        }
        for (p, &v) in e.targets.iter().enumerate() {
            producer[v] = Some(Port::Edge(i, true, p));
        }
    }
    // Half-edges: 2v is the producer end of wire v, 2v+1 the consumer end.
    let mut rotation: Vec<Vec<(Port, usize)>> = vec![Vec::new(); g.edge_count() + 1];
    let outer = g.edge_count();
    for v in 0..n {
        for (port, half) in [(producer[v]?, 2 * v), (consumer[v]?, 2 * v + 1)] {
            let vertex = match port {
                Port::Edge(i, _, _) => i,
                _ => outer,
            };
            rotation[vertex].push((port, half));
        }
    }
    // Counterclockwise order: at an edge, sources top to bottom then
    // targets bottom to top; at the outer vertex, right interface top to
    // bottom then left interface bottom to top.
    let rank = |p: &Port| -> (usize, isize) {
        match *p {
            Port::Edge(_, false, k) => (0, k as isize),
            Port::Edge(_, true, k) => (1, -(k as isize)),
            Port::Right(k) => (0, k as isize),
            Port::Left(k) => (1, -(k as isize)),
        }
    };
    let mut next = vec![0; 2 * n];
    let mut vertices = 0;
    for r in rotation.iter_mut() {
        if r.is_empty() {
            continue;
        }
        vertices += 1;
        r.sort_by_key(|(p, _)| rank(p));
        for i in 0..r.len() {
            next[r[i].1] = r[(i + 1) % r.len()].1;
        }
    }
    // Faces are orbits of "cross the wire, then turn".
    let mut seen = vec![false; 2 * n];
    let mut faces = 0;
    for h in 0..2 * n {
        if seen[h] {
            continue;
        }
        faces += 1;
        let mut x = h;
        while !seen[x] {
            seen[x] = true;
            x = next[x ^ 1];
        }
    }
    let comps = components(g, n);
    // Euler: V - E + F = 2C - 2g, summed over components.
    let chi = vertices as isize - n as isize + faces as isize;
    let twice = 2 * comps as isize - chi;
    (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as usize)
}

/// Connected components of the drawn map, with the boundary as one vertex.
fn components(g: &OpenHypergraph, n: usize) -> usize {
    let mut uf = sdiag_core::unionfind::UnionFind::new(n + g.edge_count() + 1);
    let outer = n + g.edge_count();
    for (i, e) in g.edges().iter().enumerate() {
        for &v in e.sources.iter().chain(e.targets.iter()) {
            uf.union(v, n + i);
        }
    }
    for &v in g.left().iter().chain(g.right().iter()) {
        uf.union(v, outer);
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut used = vec![false; n + g.edge_count() + 1];
    for v in 0..n {
        used[v] = true;
    }
    for (i, e) in g.edges().iter().enumerate() {
        if !e.sources.is_empty() || !e.targets.is_empty() {
            used[n + i] = true;
        }
    }
    used[outer] = !g.left().is_empty() || !g.right().is_empty();
    for (x, u) in used.iter().enumerate() {
        if *u {
            let r = uf.find(x);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    roots.len()
}

/// Whether a graph is one connected piece, counting the boundary.
pub(crate) fn is_connected(g: &OpenHypergraph) -> bool {
    g.components().len() == 1
}
