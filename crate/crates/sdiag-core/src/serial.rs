//! Line-based text format and DOT output for open hypergraphs.
//!
//! ```text
//! nodes x x y
//! edge d : x x -> y : 0 1 -> 2
//! left 0 1
//! right 2
//! ```
//!
//! `nodes` lists node sorts in id order; each `edge` line carries the
//! operation type followed by its source and target node ids.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::hypergraph::{Hyperedge, NodeId, OpenHypergraph};
use crate::syntax::{op, Sort, Word};

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn line(out: &mut String, head: &str, body: &str) {
    if body.is_empty() {
        out.push_str(head);
    } else {
        let _ = write!(out, "{head} {body}");
    }
    out.push('\n');
}

pub fn to_text(g: &OpenHypergraph) -> String {
    let mut out = String::new();
    line(&mut out, "nodes", &join(g.nodes()));
    for e in g.edges() {
        let _ = writeln!(
            out,
            "edge {} : {} -> {} : {} -> {}",
            e.op.name,
            join(e.op.arity.iter()),
            join(e.op.coarity.iter()),
            join(&e.sources),
            join(&e.targets)
        );
    }
    line(&mut out, "left", &join(g.left()));
    line(&mut out, "right", &join(g.right()));
    out
}

fn ids(s: &str, line: usize) -> Result<Vec<NodeId>, GraphError> {
    s.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| GraphError::Parse {
                line,
                message: format!("expected a node id, found `{t}`"),
            })
        })
        .collect()
}

fn sorts(s: &str) -> Result<Word, GraphError> {
    s.split_whitespace().map(|t| Ok(Sort::new(t)?)).collect()
}

pub fn from_text(src: &str) -> Result<OpenHypergraph, GraphError> {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let no = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match head {
            "nodes" => nodes = sorts(rest)?.0,
            "left" => left = ids(rest, no)?,
            "right" => right = ids(rest, no)?,
            "edge" => {
                let parts: Vec<&str> = rest.split(':').collect();
                let bad = |m: &str| GraphError::Parse {
                    line: no,
                    message: m.to_string(),
                };
                if parts.len() != 3 {
                    return Err(bad("expected `edge NAME : TYPE : SOURCES -> TARGETS`"));
                }
                let name = parts[0].trim();
                let (a, c) = parts[1].split_once("->").ok_or_else(|| bad("missing `->` in edge type"))?;
                let (s, t) = parts[2].split_once("->").ok_or_else(|| bad("missing `->` in edge endpoints"))?;
                edges.push(Hyperedge {
                    op: op(name, sorts(a)?, sorts(c)?),
                    sources: ids(s, no)?,
                    targets: ids(t, no)?,
                });
            }
            other => {
                return Err(GraphError::Parse {
                    line: no,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    OpenHypergraph::new(nodes, edges, left, right)
}

fn quote(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering: hyperedges as boxes, nodes as dots, left interface
/// `L0..` in blue and right interface `R0..` in red.
pub fn to_dot(g: &OpenHypergraph) -> String {
    let mut out = String::from("digraph G {\n  rankdir=LR;\n");
    for (i, s) in g.nodes().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [shape=point, width=0.1, xlabel=\"{}\"];", quote(s.name()));
    }
    for (i, e) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "  e{i} [shape=box, label=\"{}\"];", quote(&e.op.name));
        for (p, &v) in e.sources.iter().enumerate() {
            let _ = writeln!(out, "  n{v} -> e{i} [headlabel=\"{p}\", arrowhead=none];");
        }
        for (p, &v) in e.targets.iter().enumerate() {
            let _ = writeln!(out, "  e{i} -> n{v} [taillabel=\"{p}\", arrowhead=none];");
        }
    }
    for (p, &v) in g.left().iter().enumerate() {
        let _ = writeln!(out, "  L{p} [shape=plaintext, fontcolor=blue, label=\"L{p}\"];");
        let _ = writeln!(out, "  L{p} -> n{v} [color=blue, style=dashed, arrowhead=none];");
    }
    for (p, &v) in g.right().iter().enumerate() {
        let _ = writeln!(out, "  R{p} [shape=plaintext, fontcolor=red, label=\"R{p}\"];");
        let _ = writeln!(out, "  n{v} -> R{p} [color=red, style=dashed, arrowhead=none];");
    }
    out.push_str("}\n");
    out
}
