//! Canonical labeling of open hypergraphs by colour refinement with
//! individualization and backtracking.
//!
//! Two graphs are isomorphic exactly when their canonical forms are equal.
//! Each connected component is labeled separately, then components are
//! ordered by their certificates.

use std::cmp::Ordering;

use crate::hypergraph::{EdgeId, Hyperedge, NodeId, OpenHypergraph};
use crate::syntax::{Op, Sort};
use crate::unionfind::UnionFind;

/// Which legs of an edge are unordered: (sources, targets).
pub type LegSymmetry<'a> = &'a dyn Fn(&Op) -> (bool, bool);

fn ordered(_: &Op) -> (bool, bool) {
    (false, false)
}

/// A graph in canonical numbering. Equality is isomorphism of the originals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalGraph(OpenHypergraph);

impl CanonicalGraph {
    pub fn graph(&self) -> &OpenHypergraph {
        &self.0
    }

    pub fn into_graph(self) -> OpenHypergraph {
        self.0
    }
}

pub fn canonical_form(g: &OpenHypergraph) -> CanonicalGraph {
    canonical_form_with(g, &ordered)
}

pub fn iso_check(g: &OpenHypergraph, h: &OpenHypergraph) -> bool {
    if g.node_count() != h.node_count()
        || g.edge_count() != h.edge_count()
        || g.left().len() != h.left().len()
        || g.right().len() != h.right().len()
        || g.dom() != h.dom()
        || g.cod() != h.cod()
    {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

/// Canonical form where edges may declare their sources or targets unordered.
pub fn canonical_form_with(g: &OpenHypergraph, sym: LegSymmetry<'_>) -> CanonicalGraph {
    canonical_labeling(g, sym).0
}

/// The canonical graph together with the node map `old id -> canonical id`.
pub fn canonical_labeling(g: &OpenHypergraph, sym: LegSymmetry<'_>) -> (CanonicalGraph, Vec<NodeId>) {
    let mut certs: Vec<(Cert, Vec<NodeId>, Vec<EdgeId>)> = g
        .components()
        .into_iter()
        .map(|(ns, es)| {
            let (cert, node_order, edge_order) = Component::new(g, &ns, &es, sym).canonical();
            (cert, node_order, edge_order)
        })
        .collect();
    certs.sort_by(|a, b| a.0.cmp(&b.0));

    let mut node_map = vec![usize::MAX; g.node_count()];
    let mut nodes = Vec::with_capacity(g.node_count());
    for (_, node_order, _) in &certs {
        for &v in node_order {
            node_map[v] = nodes.len();
            nodes.push(g.nodes()[v].clone());
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for (_, _, edge_order) in &certs {
        for &e in edge_order {
            let he = &g.edges()[e];
            let (us, ut) = sym(&he.op);
            let mut sources: Vec<NodeId> = he.sources.iter().map(|&v| node_map[v]).collect();
            let mut targets: Vec<NodeId> = he.targets.iter().map(|&v| node_map[v]).collect();
            if us {
                sources.sort_unstable();
            }
            if ut {
                targets.sort_unstable();
            }
            edges.push(Hyperedge {
                op: he.op.clone(),
                sources,
                targets,
            });
        }
    }
    let left = g.left().iter().map(|&v| node_map[v]).collect();
    let right = g.right().iter().map(|&v| node_map[v]).collect();
    (
        CanonicalGraph(OpenHypergraph::new_unchecked(nodes, edges, left, right)),
        node_map,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Cert {
    nodes: Vec<(Sort, Vec<usize>, Vec<usize>)>,
    edges: Vec<(Op, Vec<usize>, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum InitKey {
    Node(Sort, Vec<usize>, Vec<usize>),
    Edge(Op),
}

struct Component<'a> {
    g: &'a OpenHypergraph,
    nodes: Vec<NodeId>,
    edges: Vec<EdgeId>,
    /// Per local node: (local edge index, is_target, position or MAX if unordered).
    inc: Vec<Vec<(usize, u32, u32)>>,
    /// Per local edge: local source/target node lists and leg symmetry.
    legs: Vec<(Vec<usize>, Vec<usize>, bool, bool)>,
    init: Vec<InitKey>,
}

struct Search {
    best: Option<(Cert, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Component<'a> {
    fn new(g: &'a OpenHypergraph, nodes: &[NodeId], edges: &[EdgeId], sym: LegSymmetry<'_>) -> Component<'a> {
        let mut local = vec![usize::MAX; g.node_count()];
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let mut inc = vec![Vec::new(); nodes.len()];
        let mut legs = Vec::with_capacity(edges.len());
        for (j, &e) in edges.iter().enumerate() {
            let he = &g.edges()[e];
            let (us, ut) = sym(&he.op);
            for (p, &v) in he.sources.iter().enumerate() {
                inc[local[v]].push((j, 0, if us { u32::MAX } else { p as u32 }));
            }
            for (p, &v) in he.targets.iter().enumerate() {
                inc[local[v]].push((j, 1, if ut { u32::MAX } else { p as u32 }));
            }
            legs.push((
                he.sources.iter().map(|&v| local[v]).collect(),
                he.targets.iter().map(|&v| local[v]).collect(),
                us,
                ut,
            ));
        }
        let mut lefts = vec![Vec::new(); nodes.len()];
        let mut rights = vec![Vec::new(); nodes.len()];
        for (p, &v) in g.left().iter().enumerate() {
            if local[v] != usize::MAX {
                lefts[local[v]].push(p);
            }
        }
        for (p, &v) in g.right().iter().enumerate() {
            if local[v] != usize::MAX {
                rights[local[v]].push(p);
            }
        }
        let mut init = Vec::with_capacity(nodes.len() + edges.len());
        for (i, &v) in nodes.iter().enumerate() {
            init.push(InitKey::Node(
                g.nodes()[v].clone(),
                std::mem::take(&mut lefts[i]),
                std::mem::take(&mut rights[i]),
            ));
        }
        for &e in edges {
            init.push(InitKey::Edge(g.edges()[e].op.clone()));
        }
        Component {
            g,
            nodes: nodes.to_vec(),
            edges: edges.to_vec(),
            inc,
            legs,
            init,
        }
    }

    fn size(&self) -> usize {
        self.nodes.len() + self.edges.len()
    }

    fn canonical(&self) -> (Cert, Vec<NodeId>, Vec<EdgeId>) {
        let colors = rank(&self.init);
        let colors = self.refine(colors);
        let mut search = Search {
            best: None,
            automorphisms: Vec::new(),
        };
        self.search(colors, &mut Vec::new(), &mut search);
        let (cert, labeling) = search.best.expect("search reaches a leaf");
        let nv = self.nodes.len();
        let mut node_order = vec![0; nv];
        let mut edge_order = vec![0; self.edges.len()];
        for (x, &c) in labeling.iter().enumerate() {
            if x < nv {
                node_order[c] = self.nodes[x];
            } else {
                edge_order[c - nv] = self.edges[x - nv];
            }
        }
        (cert, node_order, edge_order)
    }

    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let nv = self.nodes.len();
        let mut classes = count_classes(&colors);
        loop {
            let mut sigs: Vec<Vec<u32>> = Vec::with_capacity(self.size());
            for (i, inc) in self.inc.iter().enumerate() {
                let mut trip: Vec<(u32, u32, u32)> = inc.iter().map(|&(e, r, p)| (colors[nv + e], r, p)).collect();
                trip.sort_unstable();
                let mut s = Vec::with_capacity(1 + 3 * trip.len());
                s.push(colors[i]);
                for (a, b, c) in trip {
                    s.extend([a, b, c]);
                }
                sigs.push(s);
            }
            for (j, (src, tgt, us, ut)) in self.legs.iter().enumerate() {
                let mut s = vec![colors[nv + j]];
                let mut a: Vec<u32> = src.iter().map(|&v| colors[v]).collect();
                let mut b: Vec<u32> = tgt.iter().map(|&v| colors[v]).collect();
                if *us {
                    a.sort_unstable();
                }
                if *ut {
                    b.sort_unstable();
                }
                s.push(a.len() as u32);
                s.extend(a);
                s.push(b.len() as u32);
                s.extend(b);
                sigs.push(s);
            }
            let next = rank(&sigs);
            let n = count_classes(&next);
            colors = next;
            if n == classes {
                return colors;
            }
            classes = n;
        }
    }

    fn search(&self, colors: Vec<u32>, path: &mut Vec<usize>, st: &mut Search) {
        let Some(cell) = target_cell(&colors) else {
            self.leaf(&colors, st);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(v, &explored, path, st) {
                continue;
            }
            explored.push(v);
            let c = colors[v];
            let keys: Vec<(u32, u32)> = colors
                .iter()
                .enumerate()
                .map(|(x, &k)| (k, u32::from(!(x == v || k != c))))
                .collect();
            let next = self.refine(rank(&keys));
            path.push(v);
            self.search(next, path, st);
            path.pop();
        }
    }

    /// Whether `v` is mapped onto an explored element by automorphisms that
    /// fix the current path pointwise.
    fn same_orbit(&self, v: usize, explored: &[usize], path: &[usize], st: &Search) -> bool {
        let gens: Vec<&Vec<usize>> = st
            .automorphisms
            .iter()
            .filter(|a| path.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.size());
        for a in gens {
            for (x, &y) in a.iter().enumerate() {
                uf.union(x, y);
            }
        }
        let r = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == r)
    }

    fn leaf(&self, colors: &[u32], st: &mut Search) {
        let labeling: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let cert = self.certificate(&labeling);
        match &st.best {
            None => st.best = Some((cert, labeling)),
            Some((best, best_lab)) => match cert.cmp(best) {
                Ordering::Less => st.best = Some((cert, labeling)),
                Ordering::Equal => {
                    let mut inv = vec![0; best_lab.len()];
                    for (x, &c) in best_lab.iter().enumerate() {
                        inv[c] = x;
                    }
                    let aut: Vec<usize> = labeling.iter().map(|&c| inv[c]).collect();
                    if aut.iter().enumerate().any(|(x, &y)| x != y) {
                        st.automorphisms.push(aut);
                    }
                }
                Ordering::Greater => {}
            },
        }
    }

    fn certificate(&self, labeling: &[usize]) -> Cert {
        let nv = self.nodes.len();
        let mut nodes = vec![None; nv];
        for i in 0..nv {
            let InitKey::Node(s, l, r) = &self.init[i] else {
                unreachable!()
            };
            nodes[labeling[i]] = Some((s.clone(), l.clone(), r.clone()));
        }
        let mut edges = vec![None; self.edges.len()];
        for (j, (src, tgt, us, ut)) in self.legs.iter().enumerate() {
            let mut a: Vec<usize> = src.iter().map(|&v| labeling[v]).collect();
            let mut b: Vec<usize> = tgt.iter().map(|&v| labeling[v]).collect();
            if *us {
                a.sort_unstable();
            }
            if *ut {
                b.sort_unstable();
            }
            edges[labeling[nv + j] - nv] = Some((self.g.edges()[self.edges[j]].op.clone(), a, b));
        }
        Cert {
            nodes: nodes.into_iter().map(|x| x.expect("discrete labeling")).collect(),
            edges: edges.into_iter().map(|x| x.expect("discrete labeling")).collect(),
        }
    }
}

/// Dense ranks of the keys, preserving their order.
fn rank<K: Ord>(keys: &[K]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut out = vec![0u32; keys.len()];
    let mut r = 0u32;
    for w in 0..idx.len() {
        if w > 0 && keys[idx[w]] != keys[idx[w - 1]] {
            r = w as u32;
        }
        out[idx[w]] = r;
    }
    out
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// The smallest colour shared by several elements, as a member list.
fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let mut count = vec![0usize; colors.len()];
    for &c in colors {
        count[c as usize] += 1;
    }
    let c = (0..colors.len()).find(|&c| count[c] > 1)?;
    Some((0..colors.len()).filter(|&x| colors[x] as usize == c).collect())
}
