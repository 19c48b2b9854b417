//! Finite loopless multigraphs and their text format.
//!
//! Vertices are dense ids `0..n`. Edges are identified by their position in
//! the edge list, so two parallel edges are distinct objects even though they
//! join the same pair of vertices.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // incident edge ids per vertex, ascending
    adj: Vec<Vec<usize>>,
}

impl Multigraph {
    /// The empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop { u, v });
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push(id);
        self.adj[v].push(id);
        Ok(id)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.n,
            })
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e,
                edge_count: self.edges.len(),
            })
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The end of `e` that is not `v`.
    #[inline]
    pub fn opposite(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    #[inline]
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edge ids between `u` and `v` (the set `E_G(u, v)`).
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        self.adj[u]
            .iter()
            .copied()
            .filter(|&e| self.opposite(e, u) == v)
            .collect()
    }

    /// Component label per vertex plus the number of components. Labels are
    /// assigned in order of the smallest vertex of each component.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &e in &self.adj[v] {
                    let w = self.opposite(e, v);
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (label, count) = self.component_labels();
        let mut out = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// A forest: every component has one fewer edge than vertices.
    pub fn is_forest(&self) -> bool {
        let (_, c) = self.component_labels();
        self.edges.len() + c == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// The subgraph consisting of the given vertices and edges, relabelled
    /// monotonically. Endpoints of kept edges are added to the vertex set.
    /// Returns the graph plus old-to-new vertex and edge maps.
    pub fn subgraph(&self, keep_vertex: &[bool], keep_edge: &[bool]) -> Subgraph {
        let mut vk = keep_vertex.to_vec();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep_edge[e] {
                vk[u] = true;
                vk[v] = true;
            }
        }
        let mut vertex_map = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if vk[v] {
                vertex_map[v] = Some(next);
                next += 1;
            }
        }
        let mut graph = Multigraph::new(next);
        let mut edge_map = vec![None; self.edges.len()];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep_edge[e] {
                let id = graph.push_edge_unchecked(vertex_map[u].unwrap(), vertex_map[v].unwrap());
                edge_map[e] = Some(id);
            }
        }
        Subgraph {
            graph,
            vertex_map,
            edge_map,
        }
    }

    /// Subgraph induced by a vertex set (all edges among the kept vertices).
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut kv = vec![false; self.n];
        for &v in vertices {
            kv[v] = true;
        }
        let ke: Vec<bool> = self.edges.iter().map(|&(u, v)| kv[u] && kv[v]).collect();
        self.subgraph(&kv, &ke)
    }

    pub fn without_edge(&self, e: usize) -> Multigraph {
        let kv = vec![true; self.n];
        let mut ke = vec![true; self.edges.len()];
        ke[e] = false;
        self.subgraph(&kv, &ke).graph
    }

    pub fn without_vertex(&self, v: usize) -> Multigraph {
        let mut kv = vec![true; self.n];
        kv[v] = false;
        let ke: Vec<bool> = self.edges.iter().map(|&(a, b)| a != v && b != v).collect();
        self.subgraph(&kv, &ke).graph
    }

    /// Relabels vertices with `perm[old] = new`, keeping the edge order.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        let mut g = Multigraph::new(self.n);
        for &(u, v) in &self.edges {
            g.push_edge_unchecked(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; vertices and edges of `other` are shifted after ours.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let mut g = self.clone();
        let off = g.n;
        g.n += other.n;
        g.adj.extend(std::iter::repeat_with(Vec::new).take(other.n));
        for &(u, v) in &other.edges {
            g.push_edge_unchecked(u + off, v + off);
        }
        g
    }

    pub(crate) fn push_edge_unchecked(&mut self, u: usize, v: usize) -> usize {
        debug_assert!(u != v && u < self.n && v < self.n);
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push(id);
        self.adj[v].push(id);
        id
    }

    /// `tK_1`.
    pub fn empty(t: usize) -> Self {
        Multigraph::new(t)
    }

    /// The `l`-path `v_0 v_1 ... v_l`.
    pub fn path(l: usize) -> Self {
        let mut g = Multigraph::new(l + 1);
        for i in 0..l {
            g.push_edge_unchecked(i, i + 1);
        }
        g
    }

    /// The `t`-cycle; `t = 2` gives two parallel edges.
    pub fn cycle(t: usize) -> Self {
        assert!(t >= 2, "a cycle needs at least two vertices");
        let mut g = Multigraph::new(t);
        for i in 0..t {
            g.push_edge_unchecked(i, (i + 1) % t);
        }
        g
    }

    pub fn complete(t: usize) -> Self {
        let mut g = Multigraph::new(t);
        for u in 0..t {
            for v in u + 1..t {
                g.push_edge_unchecked(u, v);
            }
        }
        g
    }

    /// `K_{1,t}` with centre 0.
    pub fn star(t: usize) -> Self {
        let mut g = Multigraph::new(t + 1);
        for i in 1..=t {
            g.push_edge_unchecked(0, i);
        }
        g
    }

    /// Renders the `mg 1` text format.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(16 + 12 * self.edges.len());
        s.push_str("mg 1\n");
        let _ = writeln!(s, "n {}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "e {u} {v}");
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header_seen = false;
        let mut graph: Option<Multigraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let mut words = line.split_whitespace();
            let tag = words.next().unwrap_or("");
            let args: Vec<&str> = words.collect();
            if !header_seen {
                if tag != "mg" || args != ["1"] {
                    return Err(err(format!("expected `mg 1`, found `{line}`")));
                }
                header_seen = true;
                continue;
            }
            match (tag, graph.as_mut()) {
                ("n", None) => {
                    let [count] = args[..] else {
                        return Err(err("`n` takes one argument".into()));
                    };
                    let count = parse_id(count).map_err(err)?;
                    graph = Some(Multigraph::new(count));
                }
                ("n", Some(_)) => return Err(err("duplicate `n` line".into())),
                ("e", Some(g)) => {
                    let [u, v] = args[..] else {
                        return Err(err("`e` takes two arguments".into()));
                    };
                    let u = parse_id(u).map_err(err)?;
                    let v = parse_id(v).map_err(err)?;
                    g.add_edge(u, v).map_err(|e| err(e.to_string()))?;
                }
                ("e", None) => return Err(err("`e` before `n`".into())),
                _ => return Err(err(format!("unknown record `{tag}`"))),
            }
        }
        if !header_seen {
            return Err(Error::Parse {
                line: 1,
                message: "missing `mg 1` header".into(),
            });
        }
        graph.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `n` line".into(),
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Multigraph::parse(&text)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(|e| Error::io(path, e))
    }
}

fn parse_id(s: &str) -> std::result::Result<usize, String> {
    s.parse::<usize>()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))
}

/// A subgraph together with the maps from the host's ids into it.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Multigraph,
    pub vertex_map: Vec<Option<usize>>,
    pub edge_map: Vec<Option<usize>>,
}
