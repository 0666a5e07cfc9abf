//! Open hypergraphs: hypergraphs with ordered left and right interfaces.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::GraphError;
use crate::syntax::{Op, Sort, Term, TermKind, Word};
use crate::unionfind::UnionFind;

pub type NodeId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperedge {
    pub op: Op,
    pub sources: Vec<NodeId>,
    pub targets: Vec<NodeId>,
}

/// Nodes are indices into `nodes`; interface lists may repeat nodes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpenHypergraph {
    nodes: Vec<Sort>,
    edges: Vec<Hyperedge>,
    left: Vec<NodeId>,
    right: Vec<NodeId>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NodeDegree {
    pub in_degree: usize,
    pub out_degree: usize,
    pub left_multiplicity: usize,
    pub right_multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub nodes: Vec<NodeDegree>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonogamyViolation {
    /// The node occurs more than once in the left interface.
    LeftNotInjective,
    /// The node occurs more than once in the right interface.
    RightNotInjective,
    /// In-degree differs from 0 (left-interfaced) or 1 (otherwise).
    InDegree { expected: usize, found: usize },
    /// Out-degree differs from 0 (right-interfaced) or 1 (otherwise).
    OutDegree { expected: usize, found: usize },
}

impl fmt::Display for MonogamyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonogamyViolation::LeftNotInjective => f.write_str("repeated in the left interface"),
            MonogamyViolation::RightNotInjective => f.write_str("repeated in the right interface"),
            MonogamyViolation::InDegree { expected, found } => write!(f, "in-degree {found}, expected {expected}"),
            MonogamyViolation::OutDegree { expected, found } => write!(f, "out-degree {found}, expected {expected}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonogamyWitness {
    pub node: NodeId,
    pub violation: MonogamyViolation,
}

impl OpenHypergraph {
    pub fn new(
        nodes: Vec<Sort>,
        edges: Vec<Hyperedge>,
        left: Vec<NodeId>,
        right: Vec<NodeId>,
    ) -> Result<OpenHypergraph, GraphError> {
        let g = OpenHypergraph { nodes, edges, left, right };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn new_unchecked(
        nodes: Vec<Sort>,
        edges: Vec<Hyperedge>,
        left: Vec<NodeId>,
        right: Vec<NodeId>,
    ) -> OpenHypergraph {
        let g = OpenHypergraph { nodes, edges, left, right };
        debug_assert!(g.validate().is_ok(), "{:?}", g.validate());
        g
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.nodes.len();
        for &v in self.left.iter().chain(self.right.iter()) {
            if v >= n {
                return Err(GraphError::NoSuchNode(v));
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            let bad = || GraphError::EdgeTypeMismatch {
                edge: i,
                op: e.op.name.to_string(),
            };
            if e.sources.len() != e.op.arity.len() || e.targets.len() != e.op.coarity.len() {
                return Err(bad());
            }
            for (&v, s) in e.sources.iter().zip(e.op.arity.iter()) {
                if v >= n {
                    return Err(GraphError::NoSuchNode(v));
                }
                if &self.nodes[v] != s {
                    return Err(bad());
                }
            }
            for (&v, s) in e.targets.iter().zip(e.op.coarity.iter()) {
                if v >= n {
                    return Err(GraphError::NoSuchNode(v));
                }
                if &self.nodes[v] != s {
                    return Err(bad());
                }
            }
        }
        Ok(())
    }

    pub fn empty() -> OpenHypergraph {
        OpenHypergraph::default()
    }

    pub fn nodes(&self) -> &[Sort] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn left(&self) -> &[NodeId] {
        &self.left
    }

    pub fn right(&self) -> &[NodeId] {
        &self.right
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dom(&self) -> Word {
        self.left.iter().map(|&v| self.nodes[v].clone()).collect()
    }

    pub fn cod(&self) -> Word {
        self.right.iter().map(|&v| self.nodes[v].clone()).collect()
    }

    /// One hyperedge with fresh boundary nodes.
    pub fn generator(o: &Op) -> OpenHypergraph {
        let a = o.arity.len();
        let c = o.coarity.len();
        let nodes: Vec<Sort> = o.arity.iter().chain(o.coarity.iter()).cloned().collect();
        let sources: Vec<NodeId> = (0..a).collect();
        let targets: Vec<NodeId> = (a..a + c).collect();
        OpenHypergraph {
            nodes,
            edges: vec![Hyperedge {
                op: o.clone(),
                sources: sources.clone(),
                targets: targets.clone(),
            }],
            left: sources,
            right: targets,
        }
    }

    pub fn identity(w: &Word) -> OpenHypergraph {
        let ids: Vec<NodeId> = (0..w.len()).collect();
        OpenHypergraph {
            nodes: w.0.clone(),
            edges: Vec::new(),
            left: ids.clone(),
            right: ids,
        }
    }

    pub fn symmetry(x: &Sort, y: &Sort) -> OpenHypergraph {
        OpenHypergraph {
            nodes: vec![x.clone(), y.clone()],
            edges: Vec::new(),
            left: vec![0, 1],
            right: vec![1, 0],
        }
    }

    /// Edgeless graph with the given nodes and interfaces.
    pub fn discrete(nodes: Vec<Sort>, left: Vec<NodeId>, right: Vec<NodeId>) -> Result<OpenHypergraph, GraphError> {
        OpenHypergraph::new(nodes, Vec::new(), left, right)
    }

    pub fn from_term(t: &Term) -> OpenHypergraph {
        from_term_with(t, &mut |o| OpenHypergraph::generator(o))
    }

    pub fn seq_compose(&self, h: &OpenHypergraph) -> Result<OpenHypergraph, GraphError> {
        let (a, b) = (self.cod(), h.dom());
        if a != b {
            return Err(GraphError::BoundaryMismatch { left: a, right: b });
        }
        let off = self.nodes.len();
        let mut u = self.disjoint_union(h);
        let pairs: Vec<(NodeId, NodeId)> = self.right.iter().zip(h.left.iter()).map(|(&x, &y)| (x, y + off)).collect();
        u.left = self.left.clone();
        u.right = h.right.iter().map(|&v| v + off).collect();
        Ok(u.glue(&pairs))
    }

    pub fn par_compose(&self, h: &OpenHypergraph) -> OpenHypergraph {
        let off = self.nodes.len();
        let mut u = self.disjoint_union(h);
        u.left = self.left.iter().copied().chain(h.left.iter().map(|&v| v + off)).collect();
        u.right = self.right.iter().copied().chain(h.right.iter().map(|&v| v + off)).collect();
        u
    }

    /// Nodes and edges of both graphs side by side; interfaces are left empty.
    fn disjoint_union(&self, h: &OpenHypergraph) -> OpenHypergraph {
        let off = self.nodes.len();
        let mut nodes = self.nodes.clone();
        nodes.extend(h.nodes.iter().cloned());
        let mut edges = self.edges.clone();
        edges.extend(h.edges.iter().map(|e| Hyperedge {
            op: e.op.clone(),
            sources: e.sources.iter().map(|&v| v + off).collect(),
            targets: e.targets.iter().map(|&v| v + off).collect(),
        }));
        OpenHypergraph {
            nodes,
            edges,
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    /// Identifies each pair of nodes (transitively) and renumbers densely,
    /// keeping the smallest id of each class as representative.
    pub fn glue(&self, pairs: &[(NodeId, NodeId)]) -> OpenHypergraph {
        let mut uf = UnionFind::new(self.nodes.len());
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        self.quotient(&mut uf)
    }

    pub(crate) fn quotient(&self, uf: &mut UnionFind) -> OpenHypergraph {
        let (class, count) = uf.classes();
        let mut nodes: Vec<Option<Sort>> = vec![None; count];
        for (i, s) in self.nodes.iter().enumerate() {
            let slot = &mut nodes[class[i]];
            if slot.is_none() {
                *slot = Some(s.clone());
            }
        }
        OpenHypergraph {
            nodes: nodes.into_iter().map(|s| s.expect("class has a member")).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Hyperedge {
                    op: e.op.clone(),
                    sources: e.sources.iter().map(|&v| class[v]).collect(),
                    targets: e.targets.iter().map(|&v| class[v]).collect(),
                })
                .collect(),
            left: self.left.iter().map(|&v| class[v]).collect(),
            right: self.right.iter().map(|&v| class[v]).collect(),
        }
    }

    /// Keeps the listed edges and every node that is still referenced, or
    /// listed in `keep_nodes`; renumbers in increasing order.
    pub fn restrict(&self, keep_edges: &[bool], keep_nodes: &[bool]) -> OpenHypergraph {
        let mut used = keep_nodes.to_vec();
        for &v in self.left.iter().chain(self.right.iter()) {
            used[v] = true;
        }
        for (e, k) in self.edges.iter().zip(keep_edges) {
            if *k {
                for &v in e.sources.iter().chain(e.targets.iter()) {
                    used[v] = true;
                }
            }
        }
        let mut map = vec![usize::MAX; self.nodes.len()];
        let mut nodes = Vec::new();
        for (i, s) in self.nodes.iter().enumerate() {
            if used[i] {
                map[i] = nodes.len();
                nodes.push(s.clone());
            }
        }
        OpenHypergraph {
            nodes,
            edges: self
                .edges
                .iter()
                .zip(keep_edges)
                .filter(|(_, k)| **k)
                .map(|(e, _)| Hyperedge {
                    op: e.op.clone(),
                    sources: e.sources.iter().map(|&v| map[v]).collect(),
                    targets: e.targets.iter().map(|&v| map[v]).collect(),
                })
                .collect(),
            left: self.left.iter().map(|&v| map[v]).collect(),
            right: self.right.iter().map(|&v| map[v]).collect(),
        }
    }

    /// Appends a node and returns its id.
    pub fn add_node(&mut self, s: Sort) -> NodeId {
        self.nodes.push(s);
        self.nodes.len() - 1
    }

    pub fn add_edge(&mut self, e: Hyperedge) -> Result<EdgeId, GraphError> {
        self.edges.push(e);
        if let Err(err) = self.validate() {
            self.edges.pop();
            return Err(err);
        }
        Ok(self.edges.len() - 1)
    }

    pub fn set_interfaces(&mut self, left: Vec<NodeId>, right: Vec<NodeId>) -> Result<(), GraphError> {
        let old = (std::mem::replace(&mut self.left, left), std::mem::replace(&mut self.right, right));
        if let Err(err) = self.validate() {
            self.left = old.0;
            self.right = old.1;
            return Err(err);
        }
        Ok(())
    }

    pub fn degrees(&self) -> DegreeReport {
        let mut nodes = vec![NodeDegree::default(); self.nodes.len()];
        for e in &self.edges {
            for &v in &e.sources {
                nodes[v].out_degree += 1;
            }
            for &v in &e.targets {
                nodes[v].in_degree += 1;
            }
        }
        for &v in &self.left {
            nodes[v].left_multiplicity += 1;
        }
        for &v in &self.right {
            nodes[v].right_multiplicity += 1;
        }
        DegreeReport { nodes }
    }

    pub fn check_monogamy(&self) -> Result<(), MonogamyWitness> {
        let d = self.degrees();
        for &v in &self.left {
            if d.nodes[v].left_multiplicity > 1 {
                return Err(MonogamyWitness {
                    node: v,
                    violation: MonogamyViolation::LeftNotInjective,
                });
            }
        }
        for &v in &self.right {
            if d.nodes[v].right_multiplicity > 1 {
                return Err(MonogamyWitness {
                    node: v,
                    violation: MonogamyViolation::RightNotInjective,
                });
            }
        }
        for (v, n) in d.nodes.iter().enumerate() {
            let expected = if n.left_multiplicity > 0 { 0 } else { 1 };
            if n.in_degree != expected {
                return Err(MonogamyWitness {
                    node: v,
                    violation: MonogamyViolation::InDegree {
                        expected,
                        found: n.in_degree,
                    },
                });
            }
            let expected = if n.right_multiplicity > 0 { 0 } else { 1 };
            if n.out_degree != expected {
                return Err(MonogamyWitness {
                    node: v,
                    violation: MonogamyViolation::OutDegree {
                        expected,
                        found: n.out_degree,
                    },
                });
            }
        }
        Ok(())
    }

    pub fn is_monogamous(&self) -> bool {
        self.check_monogamy().is_ok()
    }

    /// For each node, the hyperedges incident to it as (edge, is_target, position).
    pub fn incidences(&self) -> Vec<Vec<(EdgeId, bool, usize)>> {
        let mut inc = vec![Vec::new(); self.nodes.len()];
        for (i, e) in self.edges.iter().enumerate() {
            for (p, &v) in e.sources.iter().enumerate() {
                inc[v].push((i, false, p));
            }
            for (p, &v) in e.targets.iter().enumerate() {
                inc[v].push((i, true, p));
            }
        }
        inc
    }

    /// Connected components as (node ids, edge ids), ordered by smallest member.
    pub fn components(&self) -> Vec<(Vec<NodeId>, Vec<EdgeId>)> {
        let n = self.nodes.len();
        let mut uf = UnionFind::new(n + self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e.sources.iter().chain(e.targets.iter()) {
                uf.union(v, n + i);
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut out: Vec<(Vec<NodeId>, Vec<EdgeId>)> = Vec::new();
        for x in 0..n + self.edges.len() {
            let r = uf.find(x);
            let slot = match roots.iter().position(|&q| q == r) {
                Some(s) => s,
                None => {
                    roots.push(r);
                    out.push((Vec::new(), Vec::new()));
                    roots.len() - 1
                }
            };
            if x < n {
                out[slot].0.push(x);
            } else {
                out[slot].1.push(x - n);
            }
        }
        out
    }

    /// Whether some hyperedge can reach itself along directed wires.
    pub fn is_cyclic(&self) -> bool {
        crate::extract::edge_layers(self).is_none()
    }

    pub fn operations(&self) -> BTreeSet<Op> {
        self.edges.iter().map(|e| e.op.clone()).collect()
    }
}

/// Structural interpretation of a term, with a caller-chosen graph for
/// each generator.
pub fn from_term_with(t: &Term, gen: &mut dyn FnMut(&Op) -> OpenHypergraph) -> OpenHypergraph {
    match t.kind() {
        TermKind::Gen(o) => gen(o),
        TermKind::Id(w) => OpenHypergraph::identity(w),
        TermKind::Sym(x, y) => OpenHypergraph::symmetry(x, y),
        TermKind::Empty => OpenHypergraph::empty(),
        TermKind::Seq(l, r) => from_term_with(l, gen)
            .seq_compose(&from_term_with(r, gen))
            .expect("well-typed terms compose"),
        TermKind::Par(a, b) => from_term_with(a, gen).par_compose(&from_term_with(b, gen)),
    }
}

pub fn from_term(t: &Term) -> OpenHypergraph {
    OpenHypergraph::from_term(t)
}

pub fn seq_compose(g: &OpenHypergraph, h: &OpenHypergraph) -> Result<OpenHypergraph, GraphError> {
    g.seq_compose(h)
}

pub fn par_compose(g: &OpenHypergraph, h: &OpenHypergraph) -> OpenHypergraph {
    g.par_compose(h)
}

pub fn degrees(g: &OpenHypergraph) -> DegreeReport {
    g.degrees()
}

pub fn is_monogamous(g: &OpenHypergraph) -> Result<(), MonogamyWitness> {
    g.check_monogamy()
}
