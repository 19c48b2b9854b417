//! Partitioned graphs, the derived digraph and the cyclic-component census.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitKind {
    Vertex,
    Edge,
}

impl std::fmt::Display for UnitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            UnitKind::Vertex => "vertex",
            UnitKind::Edge => "edge",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PartitionViolation {
    #[error("{kind} part {part} is empty")]
    EmptyPart { kind: UnitKind, part: usize },
    #[error("{kind} part {part} names {kind} {id}, which does not exist")]
    OutOfRange { kind: UnitKind, part: usize, id: usize },
    #[error("{kind} {id} lies in parts {first} and {second}")]
    Overlap {
        kind: UnitKind,
        id: usize,
        first: usize,
        second: usize,
    },
    #[error("{kind} {id} lies in no part")]
    Gap { kind: UnitKind, id: usize },
}

/// `(H, V, E)`: a graph with a vertex partition and an edge partition.
/// Parts are sorted id lists; part identity is positional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    pub graph: Multigraph,
    pub vertex_parts: Vec<Vec<usize>>,
    pub edge_parts: Vec<Vec<usize>>,
}

impl PartitionedGraph {
    pub fn new(
        graph: Multigraph,
        vertex_parts: Vec<Vec<usize>>,
        edge_parts: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut p = PartitionedGraph {
            graph,
            vertex_parts,
            edge_parts,
        };
        for part in p.vertex_parts.iter_mut().chain(p.edge_parts.iter_mut()) {
            part.sort_unstable();
        }
        p.validate()?;
        Ok(p)
    }

    pub fn singletons(graph: Multigraph) -> Self {
        let vertex_parts = (0..graph.vertex_count()).map(|v| vec![v]).collect();
        let edge_parts = (0..graph.edge_count()).map(|e| vec![e]).collect();
        PartitionedGraph {
            graph,
            vertex_parts,
            edge_parts,
        }
    }

    pub fn validate(&self) -> Result<(), PartitionViolation> {
        check_cover(UnitKind::Vertex, self.graph.vertex_count(), &self.vertex_parts)?;
        check_cover(UnitKind::Edge, self.graph.edge_count(), &self.edge_parts)?;
        Ok(())
    }

    /// Part index of every edge.
    pub fn edge_part_of(&self) -> Vec<usize> {
        let mut of = vec![usize::MAX; self.graph.edge_count()];
        for (i, part) in self.edge_parts.iter().enumerate() {
            for &e in part {
                of[e] = i;
            }
        }
        of
    }

    /// `r(E)`: the most edge parts meeting a single vertex.
    pub fn edge_part_rank(&self) -> usize {
        let part_of = self.edge_part_of();
        (0..self.graph.vertex_count())
            .map(|v| {
                let mut ps: Vec<usize> = self.graph.incident(v).iter().map(|&e| part_of[e]).collect();
                ps.sort_unstable();
                ps.dedup();
                ps.len()
            })
            .max()
            .unwrap_or(0)
    }

    /// Partition file text: `V:` lines then `E:` lines.
    pub fn partition_text(&self) -> String {
        let mut s = String::new();
        for (tag, parts) in [("V", &self.vertex_parts), ("E", &self.edge_parts)] {
            for part in parts {
                s.push_str(tag);
                s.push(':');
                for id in part {
                    let _ = write!(s, " {id}");
                }
                s.push('\n');
            }
        }
        s
    }

    pub fn parse_partitions(graph: Multigraph, text: &str) -> Result<Self> {
        let mut vertex_parts = Vec::new();
        let mut edge_parts = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            let (tag, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(format!("expected `V:` or `E:`, found `{line}`")))?;
            let ids = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| parse_err(format!("bad id `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            match tag.trim() {
                "V" => vertex_parts.push(ids),
                "E" => edge_parts.push(ids),
                other => return Err(parse_err(format!("unknown part tag `{other}`"))),
            }
        }
        PartitionedGraph::new(graph, vertex_parts, edge_parts)
    }

    pub fn read_partitions(graph: Multigraph, path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse_partitions(graph, &text)
    }
}

fn check_cover(kind: UnitKind, count: usize, parts: &[Vec<usize>]) -> Result<(), PartitionViolation> {
    let mut owner = vec![usize::MAX; count];
    for (p, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(PartitionViolation::EmptyPart { kind, part: p });
        }
        for &id in part {
            if id >= count {
                return Err(PartitionViolation::OutOfRange { kind, part: p, id });
            }
            if owner[id] != usize::MAX {
                return Err(PartitionViolation::Overlap {
                    kind,
                    id,
                    first: owner[id],
                    second: p,
                });
            }
            owner[id] = p;
        }
    }
    match owner.iter().position(|&o| o == usize::MAX) {
        Some(id) => Err(PartitionViolation::Gap { kind, id }),
        None => Ok(()),
    }
}

/// Nodes `(u, E)` for each edge part `E` meeting `u`, ordered by
/// `(u, part index)`; an arc `(u,E) -> (v,F)` for `E != F` whenever an edge of
/// `E` joins `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedDigraph {
    pub nodes: Vec<(usize, usize)>,
    pub arcs: Vec<(usize, usize)>,
}

impl DerivedDigraph {
    pub fn out_neighbours(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.arcs {
            out[a].push(b);
        }
        out
    }
}

pub fn derived_digraph(h: &PartitionedGraph) -> DerivedDigraph {
    let g = &h.graph;
    let part_of = h.edge_part_of();
    let parts_at: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| {
            let mut ps: Vec<usize> = g.incident(v).iter().map(|&e| part_of[e]).collect();
            ps.sort_unstable();
            ps.dedup();
            ps
        })
        .collect();
    let mut offset = Vec::with_capacity(g.vertex_count());
    let mut nodes = Vec::new();
    for (v, ps) in parts_at.iter().enumerate() {
        offset.push(nodes.len());
        nodes.extend(ps.iter().map(|&p| (v, p)));
    }
    let node_id = |v: usize, p: usize, parts_at: &[Vec<usize>]| {
        offset[v] + parts_at[v].binary_search(&p).expect("part meets vertex")
    };

    let mut arcs = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let pe = part_of[e];
        for (u, v) in [(a, b), (b, a)] {
            let from = node_id(u, pe, &parts_at);
            for &f in &parts_at[v] {
                if f != pe {
                    arcs.push((from, node_id(v, f, &parts_at)));
                }
            }
        }
    }
    arcs.sort_unstable();
    arcs.dedup();
    DerivedDigraph { nodes, arcs }
}

/// Strongly connected component id of every node (iterative Tarjan).
pub fn strongly_connected_components(node_count: usize, out: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; node_count];
    let mut low = vec![0usize; node_count];
    let mut on_stack = vec![false; node_count];
    let mut comp = vec![UNSEEN; node_count];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..node_count {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(&(v, i)) = call.last() {
            if i == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = out[v].get(i) {
                call.last_mut().expect("frame").1 += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(p, _)) = call.last() {
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCensus {
    /// One flag per component of `H`, components ordered by smallest vertex.
    pub component_cyclic: Vec<bool>,
    pub cyclic: usize,
    pub acyclic: usize,
    pub degree_set: BTreeSet<usize>,
    pub max_part_degree: usize,
}

pub fn count_cyclic_components(h: &PartitionedGraph) -> ComponentCensus {
    let g = &h.graph;
    let (label, count) = g.component_labels();
    let dg = derived_digraph(h);
    let out = dg.out_neighbours();
    let scc = strongly_connected_components(dg.nodes.len(), &out);
    let mut size = vec![0usize; dg.nodes.len()];
    for &c in &scc {
        size[c] += 1;
    }
    let mut component_cyclic = vec![false; count];
    for (i, &(v, _)) in dg.nodes.iter().enumerate() {
        if size[scc[i]] >= 2 {
            component_cyclic[label[v]] = true;
        }
    }
    let cyclic = component_cyclic.iter().filter(|&&b| b).count();
    let (degree_set, max_part_degree) = part_degree_set(h);
    ComponentCensus {
        component_cyclic,
        cyclic,
        acyclic: count - cyclic,
        degree_set,
        max_part_degree,
    }
}

/// `D(E)` and `Delta(E)` (0 when there are no edge parts).
pub fn part_degree_set(h: &PartitionedGraph) -> (BTreeSet<usize>, usize) {
    let g = &h.graph;
    let part_of = h.edge_part_of();
    let mut set = BTreeSet::new();
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for v in 0..g.vertex_count() {
        counts.clear();
        for &e in g.incident(v) {
            let p = part_of[e];
            match counts.iter_mut().find(|(q, _)| *q == p) {
                Some((_, k)) => *k += 1,
                None => counts.push((p, 1)),
            }
        }
        set.extend(counts.iter().map(|&(_, k)| k));
    }
    let max = set.iter().next_back().copied().unwrap_or(0);
    (set, max)
}

/// `D(G) = {deg(v) - 1 >= 1}`.
pub fn graph_degree_set(g: &Multigraph) -> BTreeSet<usize> {
    (0..g.vertex_count())
        .map(|v| g.degree(v))
        .filter(|&d| d >= 2)
        .map(|d| d - 1)
        .collect()
}
