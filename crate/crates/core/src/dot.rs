//! Graphviz DOT output. Parallel edges are written one line each.

use std::fmt::Write as _;

use crate::construct::{EdgeProvenance, LinkGraphResult};
use crate::graph::Multigraph;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT for `g`, with optional per-vertex and per-edge labels.
pub fn to_dot(g: &Multigraph, vertex_labels: Option<&[String]>, edge_labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match vertex_labels.and_then(|l| l.get(v)) {
            Some(label) => writeln!(out, "  {v} [label=\"{}\"];", escape(label)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match edge_labels.and_then(|l| l.get(e)) {
            Some(label) => writeln!(out, "  {u} -- {v} [label=\"{}\"];", escape(label)).unwrap(),
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

/// DOT for a link or path graph, labelling each vertex with its link in the
/// root and each edge with the (ℓ+1)-link behind it.
pub fn link_graph_dot(result: &LinkGraphResult) -> String {
    let vertices: Vec<String> = result.vertex_links.iter().map(|l| l.render()).collect();
    let edges: Vec<String> = match &result.edge_provenance {
        EdgeProvenance::Links(ls) => ls.iter().map(|l| l.render()).collect(),
        EdgeProvenance::Pairs(ps) => ps.iter().map(|(a, b)| format!("{a}+{b}")).collect(),
    };
    to_dot(&result.graph, Some(&vertices), Some(&edges))
}
