//! Matching rule left-hand sides in host graphs and double-pushout
//! rewriting.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use sdiag_core::canon::canonical_labeling;
use sdiag_core::unionfind::UnionFind;
use sdiag_core::{Hyperedge, NodeId, OpenHypergraph, Sort};

use crate::error::RewriteError;
use crate::theory::{Mode, RewriteRule, Theory};

/// An occurrence of a rule's left-hand side in a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchSite {
    pub rule: String,
    /// Host node of each left-hand-side node.
    pub node_map: Vec<NodeId>,
    /// Host edge of each left-hand-side edge.
    pub edge_map: Vec<usize>,
    /// Images of the left-hand side's left and right interfaces.
    pub left: Vec<NodeId>,
    pub right: Vec<NodeId>,
    fingerprint: u64,
}

pub(crate) fn fingerprint(g: &OpenHypergraph) -> u64 {
    let mut h = DefaultHasher::new();
    g.hash(&mut h);
    h.finish()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Internal,
    Boundary,
    PassThrough,
}

fn roles(lhs: &OpenHypergraph) -> Vec<Role> {
    let mut out = vec![Role::Internal; lhs.node_count()];
    let (mut inl, mut inr) = (vec![false; lhs.node_count()], vec![false; lhs.node_count()]);
    for &v in lhs.left() {
        inl[v] = true;
    }
    for &v in lhs.right() {
        inr[v] = true;
    }
    for (v, r) in out.iter_mut().enumerate() {
        if inl[v] && inr[v] {
            *r = Role::PassThrough;
        } else if inl[v] || inr[v] {
            *r = Role::Boundary;
        }
    }
    out
}

/// Left-hand-side edges ordered so that each edge after the first shares a
/// node with an earlier one whenever possible.
fn edge_order(lhs: &OpenHypergraph) -> Vec<usize> {
    let n = lhs.edge_count();
    let mut seen_nodes = vec![false; lhs.node_count()];
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .find(|&e| {
                !placed[e] && {
                    let he = &lhs.edges()[e];
                    he.sources.iter().chain(he.targets.iter()).any(|&v| seen_nodes[v])
                }
            })
            .or_else(|| (0..n).find(|&e| !placed[e]))
            .expect("an unplaced edge remains");
        placed[next] = true;
        let he = &lhs.edges()[next];
        for &v in he.sources.iter().chain(he.targets.iter()) {
            seen_nodes[v] = true;
        }
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    mode: Mode,
    lhs: &'a OpenHypergraph,
    host: &'a OpenHypergraph,
    roles: Vec<Role>,
    order: Vec<usize>,
    node_map: Vec<Option<NodeId>>,
    edge_map: Vec<usize>,
    edge_used: Vec<bool>,
    /// Number of lhs nodes mapped onto each host node, and whether one of
    /// them is internal.
    node_uses: Vec<usize>,
    node_internal: Vec<bool>,
    host_incidence: Vec<usize>,
    host_interface: Vec<bool>,
    lhs_incidence: Vec<usize>,
    found: Vec<(Vec<NodeId>, Vec<usize>)>,
}

impl<'a> Matcher<'a> {
    fn new(mode: Mode, lhs: &'a OpenHypergraph, host: &'a OpenHypergraph) -> Matcher<'a> {
        let inc = |g: &OpenHypergraph| g.incidences().iter().map(|i| i.len()).collect::<Vec<_>>();
        let mut host_interface = vec![false; host.node_count()];
        for &v in host.left().iter().chain(host.right().iter()) {
            host_interface[v] = true;
        }
        Matcher {
            mode,
            lhs,
            host,
            roles: roles(lhs),
            order: edge_order(lhs),
            node_map: vec![None; lhs.node_count()],
            edge_map: vec![usize::MAX; lhs.edge_count()],
            edge_used: vec![false; host.edge_count()],
            node_uses: vec![0; host.node_count()],
            node_internal: vec![false; host.node_count()],
            host_incidence: inc(host),
            host_interface,
            lhs_incidence: inc(lhs),
            found: Vec::new(),
        }
    }

    /// Whether lhs node `u` may be mapped to host node `h`, given the
    /// current partial map.
    fn admissible(&self, u: NodeId, h: NodeId) -> bool {
        if self.lhs.nodes()[u] != self.host.nodes()[h] {
            return false;
        }
        let internal = self.roles[u] == Role::Internal;
        if internal && (self.host_interface[h] || self.host_incidence[h] != self.lhs_incidence[u]) {
            return false;
        }
        match self.mode {
            Mode::Monogamous => self.node_uses[h] == 0,
            Mode::Frobenius => !self.node_internal[h] && (!internal || self.node_uses[h] == 0),
        }
    }

    fn bind(&mut self, u: NodeId, h: NodeId) {
        self.node_map[u] = Some(h);
        self.node_uses[h] += 1;
        if self.roles[u] == Role::Internal {
            self.node_internal[h] = true;
        }
    }

    fn unbind(&mut self, u: NodeId) {
        let h = self.node_map[u].take().expect("bound");
        self.node_uses[h] -= 1;
        if self.roles[u] == Role::Internal {
            self.node_internal[h] = false;
        }
    }

    fn edges(&mut self, i: usize) {
        if i == self.order.len() {
            let isolated: Vec<NodeId> = (0..self.lhs.node_count()).filter(|&u| self.node_map[u].is_none()).collect();
            self.isolated(&isolated, 0);
            return;
        }
        let f = self.order[i];
        let fe = &self.lhs.edges()[f];
        for e in 0..self.host.edge_count() {
            if self.edge_used[e] || self.host.edges()[e].op != fe.op {
                continue;
            }
            let he = &self.host.edges()[e];
            let legs: Vec<(NodeId, NodeId)> = fe
                .sources
                .iter()
                .zip(he.sources.iter())
                .chain(fe.targets.iter().zip(he.targets.iter()))
                .map(|(&u, &h)| (u, h))
                .collect();
            let mut bound: Vec<NodeId> = Vec::new();
            let mut ok = true;
            for (u, h) in legs {
                match self.node_map[u] {
                    Some(prev) if prev == h => {}
                    Some(_) => {
                        ok = false;
                        break;
                    }
                    None => {
                        if self.admissible(u, h) {
                            self.bind(u, h);
                            bound.push(u);
                        } else {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if ok {
                self.edge_used[e] = true;
                self.edge_map[f] = e;
                self.edges(i + 1);
                self.edge_used[e] = false;
            }
            for u in bound.into_iter().rev() {
                self.unbind(u);
            }
        }
    }

    fn isolated(&mut self, rest: &[NodeId], i: usize) {
        if i == rest.len() {
            self.finish();
            return;
        }
        let u = rest[i];
        for h in 0..self.host.node_count() {
            if self.admissible(u, h) {
                self.bind(u, h);
                self.isolated(rest, i + 1);
                self.unbind(u);
            }
        }
    }

    fn finish(&mut self) {
        let node_map: Vec<NodeId> = self.node_map.iter().map(|h| h.expect("all bound")).collect();
        if self.mode == Mode::Monogamous && !self.convex(&node_map) {
            return;
        }
        self.found.push((node_map, self.edge_map.clone()));
    }

    /// No directed path leaves the image through an unmatched edge and
    /// comes back.
    fn convex(&self, node_map: &[NodeId]) -> bool {
        let n = self.host.node_count();
        let mut image = vec![false; n];
        for &h in node_map {
            image[h] = true;
        }
        let mut consumers: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, he) in self.host.edges().iter().enumerate() {
            if !self.edge_used[e] {
                for &v in &he.sources {
                    consumers[v].push(e);
                }
            }
        }
        let mut seen = vec![false; n];
        let mut stack: Vec<NodeId> = (0..n).filter(|&v| image[v]).collect();
        while let Some(v) = stack.pop() {
            for &e in &consumers[v] {
                for &t in &self.host.edges()[e].targets {
                    if image[t] {
                        return false;
                    }
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        true
    }
}

/// All matches in host numbering order, unsorted.
pub(crate) fn raw_matches(mode: Mode, rule: &RewriteRule, host: &OpenHypergraph) -> Vec<MatchSite> {
    let lhs = &rule.lhs;
    if lhs.node_count() == 0 && lhs.edge_count() == 0 {
        return vec![site(rule, host, Vec::new(), Vec::new())];
    }
    let mut m = Matcher::new(mode, lhs, host);
    m.edges(0);
    m.found.into_iter().map(|(nodes, edges)| site(rule, host, nodes, edges)).collect()
}

fn site(rule: &RewriteRule, host: &OpenHypergraph, node_map: Vec<NodeId>, edge_map: Vec<usize>) -> MatchSite {
    MatchSite {
        rule: rule.name.clone(),
        left: rule.lhs.left().iter().map(|&u| node_map[u]).collect(),
        right: rule.lhs.right().iter().map(|&u| node_map[u]).collect(),
        node_map,
        edge_map,
        fingerprint: fingerprint(host),
    }
}

/// Canonical rank of every host node, for host-independent match order.
pub(crate) fn node_ranks(host: &OpenHypergraph) -> Vec<NodeId> {
    canonical_labeling(host, &|_| (false, false)).1
}

pub(crate) fn sort_matches(host: &OpenHypergraph, ranks: &[NodeId], sites: &mut [MatchSite]) {
    let key = |s: &MatchSite| {
        let edges: Vec<Vec<NodeId>> = s
            .edge_map
            .iter()
            .map(|&e| {
                let he = &host.edges()[e];
                he.sources.iter().chain(he.targets.iter()).map(|&v| ranks[v]).collect()
            })
            .collect();
        let nodes: Vec<NodeId> = s.node_map.iter().map(|&v| ranks[v]).collect();
        (edges, nodes, s.node_map.clone(), s.edge_map.clone())
    };
    sites.sort_by_cached_key(key);
}

/// All label- and order-preserving matches of `rule.lhs` in `host`, in an
/// order that depends only on the isomorphism class of the host.
pub fn find_matches(t: &Theory, rule: &RewriteRule, host: &OpenHypergraph) -> Vec<MatchSite> {
    let mut sites = raw_matches(t.mode, rule, host);
    if sites.len() > 1 {
        let ranks = node_ranks(host);
        sort_matches(host, &ranks, &mut sites);
    }
    sites
}

/// Deletes the matched edges and internal nodes, splits wires matched by
/// pass-through nodes (monogamous mode), and glues a fresh copy of the
/// right-hand side along the interface images.
pub fn apply_rewrite(t: &Theory, site: &MatchSite, rule: &RewriteRule, host: &OpenHypergraph) -> Result<OpenHypergraph, RewriteError> {
    if site.fingerprint != fingerprint(host)
        || site.rule != rule.name
        || site.node_map.len() != rule.lhs.node_count()
        || site.edge_map.len() != rule.lhs.edge_count()
    {
        return Err(RewriteError::StaleMatch);
    }
    let lhs = &rule.lhs;
    let rhs = &rule.rhs;
    let role = roles(lhs);
    let mut nodes: Vec<Sort> = host.nodes().to_vec();
    let mut deleted = vec![false; nodes.len()];
    for (u, &h) in site.node_map.iter().enumerate() {
        if role[u] == Role::Internal {
            deleted[h] = true;
        }
    }
    let mut matched = vec![false; host.edge_count()];
    for &e in &site.edge_map {
        matched[e] = true;
    }
    let mut edges: Vec<Hyperedge> = host
        .edges()
        .iter()
        .zip(&matched)
        .filter(|(_, m)| !**m)
        .map(|(e, _)| e.clone())
        .collect();
    let mut right: Vec<NodeId> = host.right().to_vec();

    // Image of each lhs node on the output side of the match.
    let mut out_image: Vec<NodeId> = site.node_map.clone();
    if t.mode == Mode::Monogamous {
        for (u, r) in role.iter().enumerate() {
            if *r != Role::PassThrough {
                continue;
            }
            let h = site.node_map[u];
            let fresh = nodes.len();
            nodes.push(nodes[h].clone());
            deleted.push(false);
            for e in edges.iter_mut() {
                for v in e.sources.iter_mut() {
                    if *v == h {
                        *v = fresh;
                    }
                }
            }
            for v in right.iter_mut() {
                if *v == h {
                    *v = fresh;
                }
            }
            out_image[u] = fresh;
        }
    }

    let off = nodes.len();
    nodes.extend(rhs.nodes().iter().cloned());
    deleted.extend(std::iter::repeat(false).take(rhs.node_count()));
    edges.extend(rhs.edges().iter().map(|e| Hyperedge {
        op: e.op.clone(),
        sources: e.sources.iter().map(|&v| v + off).collect(),
        targets: e.targets.iter().map(|&v| v + off).collect(),
    }));

    let mut uf = UnionFind::new(nodes.len());
    for (&r, &l) in rhs.left().iter().zip(lhs.left()) {
        uf.union(r + off, site.node_map[l]);
    }
    for (&r, &l) in rhs.right().iter().zip(lhs.right()) {
        uf.union(r + off, out_image[l]);
    }
    // Class representatives renumbered in order of first member.
    let mut class_id = vec![usize::MAX; nodes.len()];
    let mut new_nodes: Vec<Sort> = Vec::new();
    let mut renum = vec![usize::MAX; nodes.len()];
    for v in 0..nodes.len() {
        if deleted[v] {
            continue;
        }
        let r = uf.find(v);
        if class_id[r] == usize::MAX {
            class_id[r] = new_nodes.len();
            new_nodes.push(nodes[v].clone());
        }
        renum[v] = class_id[r];
    }
    let map = |v: &NodeId| renum[*v];
    let edges: Vec<Hyperedge> = edges
        .into_iter()
        .map(|e| Hyperedge {
            op: e.op,
            sources: e.sources.iter().map(map).collect(),
            targets: e.targets.iter().map(map).collect(),
        })
        .collect();
    let left: Vec<NodeId> = host.left().iter().map(map).collect();
    let right: Vec<NodeId> = right.iter().map(map).collect();
    Ok(OpenHypergraph::new(new_nodes, edges, left, right)?)
}
