//! ℓ-link graphs, partitioned ℓ-link graphs and ℓ-path graphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::partition::PartitionedGraph;
use crate::walk::{count_links_capped, enumerate_links, enumerate_paths, Arc, Link};

/// Default refusal threshold on the number of ℓ- and (ℓ+1)-links.
pub const DEFAULT_LINK_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Link,
    Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeProvenance {
    /// The (ℓ+1)-link behind each edge.
    Links(Vec<Link>),
    /// The two ℓ-paths (as vertex ids of the result) joined by each edge.
    Pairs(Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraphResult {
    pub ell: usize,
    pub mode: Mode,
    pub graph: Multigraph,
    /// Source ℓ-link of every vertex, sorted.
    pub vertex_links: Vec<Link>,
    pub edge_provenance: EdgeProvenance,
}

impl LinkGraphResult {
    /// Result vertex of an ℓ-link (or ℓ-path), if present.
    pub fn vertex_of(&self, link: &Link) -> Option<usize> {
        self.vertex_links.binary_search(link).ok()
    }

    /// Result edge of an (ℓ+1)-link in link mode.
    pub fn edge_of(&self, link: &Link) -> Option<usize> {
        match &self.edge_provenance {
            EdgeProvenance::Links(ls) => ls.binary_search(link).ok(),
            EdgeProvenance::Pairs(_) => None,
        }
    }

    /// `id TAB sequence TAB rendering` per vertex.
    pub fn vertex_tsv(&self) -> String {
        let mut s = String::new();
        for (i, l) in self.vertex_links.iter().enumerate() {
            let _ = writeln!(s, "{i}\t{}\t{}", seq_text(l), l.render());
        }
        s
    }

    /// Link mode: `id TAB sequence TAB rendering`; path mode: `id TAB a,b`.
    pub fn edge_tsv(&self) -> String {
        let mut s = String::new();
        match &self.edge_provenance {
            EdgeProvenance::Links(ls) => {
                for (i, l) in ls.iter().enumerate() {
                    let _ = writeln!(s, "{i}\t{}\t{}", seq_text(l), l.render());
                }
            }
            EdgeProvenance::Pairs(ps) => {
                for (i, (a, b)) in ps.iter().enumerate() {
                    let _ = writeln!(s, "{i}\t{a},{b}");
                }
            }
        }
        s
    }

    /// Writes `PREFIX.vertices.tsv` and `PREFIX.edges.tsv`.
    pub fn write_provenance(&self, prefix: &Path) -> Result<()> {
        let base = prefix.as_os_str().to_owned();
        for (suffix, body) in [(".vertices.tsv", self.vertex_tsv()), (".edges.tsv", self.edge_tsv())] {
            let mut p = base.clone();
            p.push(suffix);
            std::fs::write(&p, body).map_err(|e| Error::io(p.clone(), e))?;
        }
        Ok(())
    }
}

fn seq_text(l: &Link) -> String {
    l.seq().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Vertex partition `V_ℓ` and edge partition `E_ℓ` of a link graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkPartitions {
    pub vertex_parts: Vec<Vec<usize>>,
    pub edge_parts: Vec<Vec<usize>>,
}

fn check_cap(g: &Multigraph, l: usize, paths_only: bool, cap: usize, what: &'static str) -> Result<()> {
    match count_links_capped(g, l, paths_only, cap) {
        Some(_) => Ok(()),
        None => Err(Error::CapExceeded {
            what,
            count: cap + 1,
            cap,
        }),
    }
}

pub fn link_graph(g: &Multigraph, ell: usize) -> Result<LinkGraphResult> {
    link_graph_capped(g, ell, DEFAULT_LINK_CAP)
}

/// Refuses with [`Error::CapExceeded`] once either link count passes `cap`.
pub fn link_graph_capped(g: &Multigraph, ell: usize, cap: usize) -> Result<LinkGraphResult> {
    check_cap(g, ell, false, cap, "number of l-links")?;
    check_cap(g, ell + 1, false, cap, "number of (l+1)-links")?;
    let vertex_links = enumerate_links(g, ell);
    let edge_links = enumerate_links(g, ell + 1);
    let mut graph = Multigraph::new(vertex_links.len());
    let find = |seq: &[usize]| {
        vertex_links
            .binary_search(&Link::from_seq(seq))
            .map_err(|_| Error::Internal("sub-link of an (l+1)-link is missing".into()))
    };
    for q in &edge_links {
        let s = q.seq();
        let a = find(&s[..2 * ell + 1])?;
        let b = find(&s[2..])?;
        if a == b {
            return Err(Error::Internal(format!("link graph loop at {}", q.render())));
        }
        graph.push_edge_unchecked(a, b);
    }
    Ok(LinkGraphResult {
        ell,
        mode: Mode::Link,
        graph,
        vertex_links,
        edge_provenance: EdgeProvenance::Links(edge_links),
    })
}

/// Vertex and edge partitions of `𝕃_ℓ(G)` as produced by [`link_graph`].
pub fn link_partitions(result: &LinkGraphResult) -> LinkPartitions {
    let ell = result.ell;
    let EdgeProvenance::Links(edge_links) = &result.edge_provenance else {
        panic!("link partitions need a link-mode result");
    };
    if ell == 0 {
        return LinkPartitions {
            vertex_parts: (0..result.vertex_links.len()).map(|v| vec![v]).collect(),
            edge_parts: (0..edge_links.len()).map(|e| vec![e]).collect(),
        };
    }
    let mut vparts: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, l) in result.vertex_links.iter().enumerate() {
        let s = l.seq();
        let key = if ell == 1 {
            vec![s[0].min(s[2]), s[0].max(s[2])]
        } else {
            Link::from_seq(&s[2..2 * ell - 1]).seq().to_vec()
        };
        vparts.entry(key).or_default().push(i);
    }
    let mut eparts: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, q) in edge_links.iter().enumerate() {
        let key = Link::from_seq(&q.seq()[2..2 * ell + 1]).seq().to_vec();
        eparts.entry(key).or_default().push(i);
    }
    LinkPartitions {
        vertex_parts: vparts.into_values().collect(),
        edge_parts: eparts.into_values().collect(),
    }
}

pub fn partitioned_link_graph(g: &Multigraph, ell: usize) -> Result<(LinkGraphResult, PartitionedGraph)> {
    partitioned_link_graph_capped(g, ell, DEFAULT_LINK_CAP)
}

pub fn partitioned_link_graph_capped(
    g: &Multigraph,
    ell: usize,
    cap: usize,
) -> Result<(LinkGraphResult, PartitionedGraph)> {
    let result = link_graph_capped(g, ell, cap)?;
    let parts = link_partitions(&result);
    let pg = PartitionedGraph::new(result.graph.clone(), parts.vertex_parts, parts.edge_parts)?;
    Ok((result, pg))
}

pub fn path_graph(g: &Multigraph, ell: usize) -> Result<LinkGraphResult> {
    path_graph_capped(g, ell, DEFAULT_LINK_CAP)
}

/// Two ℓ-paths are adjacent when they are the initial and final ℓ-paths of
/// an (ℓ+1)-path or (ℓ+1)-cycle. The result is simple.
pub fn path_graph_capped(g: &Multigraph, ell: usize, cap: usize) -> Result<LinkGraphResult> {
    check_cap(g, ell, true, cap, "number of l-paths")?;
    check_cap(g, ell + 1, false, cap, "number of (l+1)-links")?;
    let vertex_links = enumerate_paths(g, ell);
    let mut pairs = Vec::new();
    for q in enumerate_links(g, ell + 1) {
        if !(q.is_path() || q.is_cycle()) {
            continue;
        }
        let s = q.seq();
        let find = |seq: &[usize]| {
            vertex_links
                .binary_search(&Link::from_seq(seq))
                .map_err(|_| Error::Internal("sub-path of an (l+1)-path is missing".into()))
        };
        let a = find(&s[..2 * ell + 1])?;
        let b = find(&s[2..])?;
        if a == b {
            return Err(Error::Internal(format!("path graph loop at {}", q.render())));
        }
        pairs.push((a.min(b), a.max(b)));
    }
    pairs.sort_unstable();
    pairs.dedup();
    let mut graph = Multigraph::new(vertex_links.len());
    for &(a, b) in &pairs {
        graph.push_edge_unchecked(a, b);
    }
    Ok(LinkGraphResult {
        ell,
        mode: Mode::Path,
        graph,
        vertex_links,
        edge_provenance: EdgeProvenance::Pairs(pairs),
    })
}

/// Image `R^[ℓ]` of an (ℓ+s)-arc inside `𝕃_ℓ(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    /// Result vertices `L_0, ..., L_s`.
    pub vertices: Vec<usize>,
    /// Result edges `Q_1, ..., Q_s`.
    pub edges: Vec<usize>,
    /// `L_0 = L_s`, and for `s >= 2` the walk closes up as a link: `Q_s` and
    /// `Q_1` lie in different edge parts.
    pub closed: bool,
    /// `R(0, ℓ) = R(s, ℓ+s)` as arcs.
    pub arc_closed: bool,
}

impl Projection {
    /// The image as an interleaved sequence, in canonical orientation.
    pub fn link(&self) -> Link {
        let mut seq = Vec::with_capacity(2 * self.vertices.len());
        for (i, &v) in self.vertices.iter().enumerate() {
            if i > 0 {
                seq.push(self.edges[i - 1]);
            }
            seq.push(v);
        }
        Link::from_seq(&seq)
    }
}

/// Projects the arc `r` of `g` (length ≥ ℓ) into the link graph `result`.
pub fn project_link(g: &Multigraph, result: &LinkGraphResult, r: &Arc) -> Result<Projection> {
    let ell = result.ell;
    if result.mode != Mode::Link {
        return Err(Error::Internal("projection needs a link-mode result".into()));
    }
    Link::new(g, r.seq()).map_err(|_| Error::NotALink(r.link().render()))?;
    let total = r.len();
    if total < ell {
        return Err(Error::LengthOrder { s: ell, ell: total });
    }
    let s = total - ell;
    let mut vertices = Vec::with_capacity(s + 1);
    let mut edges = Vec::with_capacity(s);
    let missing = || Error::NotALink(r.link().render());
    for i in 0..=s {
        vertices.push(result.vertex_of(&r.sub(i, i + ell).link()).ok_or_else(missing)?);
        if i > 0 {
            edges.push(result.edge_of(&r.sub(i - 1, i + ell).link()).ok_or_else(missing)?);
        }
    }
    let closed = vertices[0] == vertices[s] && (s < 2 || edge_part_key(result, edges[0]) != edge_part_key(result, edges[s - 1]));
    let arc_closed = r.sub(0, ell).seq() == r.sub(s, ell + s).seq();
    Ok(Projection {
        vertices,
        edges,
        closed,
        arc_closed,
    })
}

/// The middle (ℓ-1)-link of the (ℓ+1)-link behind edge `e`, which names its
/// edge part; at ℓ = 0 every edge is its own part.
fn edge_part_key(result: &LinkGraphResult, e: usize) -> Link {
    let EdgeProvenance::Links(ls) = &result.edge_provenance else {
        unreachable!("link-mode result");
    };
    let seq = ls[e].seq();
    if result.ell == 0 {
        return Link::from_seq(seq);
    }
    Link::from_seq(&seq[2..2 * result.ell + 1])
}

/// Whether `a` can be shunted to `b`: connectivity in `𝕃_ℓ(G)`.
pub fn shunt_reachable(result: &LinkGraphResult, a: &Link, b: &Link) -> Result<bool> {
    let ia = result
        .vertex_of(a)
        .ok_or_else(|| Error::NotALink(a.render()))?;
    let ib = result
        .vertex_of(b)
        .ok_or_else(|| Error::NotALink(b.render()))?;
    let (label, _) = result.graph.component_labels();
    Ok(label[ia] == label[ib])
}

/// All `s`-links of a partitioned graph: walks whose consecutive edges lie in
/// different edge parts, identified with their reversals.
pub fn partitioned_links(h: &PartitionedGraph, s: usize) -> Vec<Link> {
    let mut out = Vec::new();
    visit_partitioned_links(h, s, |seq| out.push(Link::from_seq(seq)));
    out.sort_unstable();
    out
}

/// Calls `f` once per `s`-link of `h`, in canonical orientation.
pub fn visit_partitioned_links<F: FnMut(&[usize])>(h: &PartitionedGraph, s: usize, mut f: F) {
    let g = &h.graph;
    let part = h.edge_part_of();
    let mut seq = Vec::with_capacity(2 * s + 1);
    fn grow<F: FnMut(&[usize])>(g: &Multigraph, part: &[usize], s: usize, seq: &mut Vec<usize>, f: &mut F) {
        if seq.len() == 2 * s + 1 {
            if seq.iter().le(seq.iter().rev()) {
                f(seq);
            }
            return;
        }
        let v = *seq.last().unwrap();
        let prev = (seq.len() >= 2).then(|| part[seq[seq.len() - 2]]);
        for &e in g.incident(v) {
            if Some(part[e]) == prev {
                continue;
            }
            seq.push(e);
            seq.push(g.opposite(e, v));
            grow(g, part, s, seq, f);
            seq.pop();
            seq.pop();
        }
    }
    for v in 0..g.vertex_count() {
        seq.push(v);
        grow(g, &part, s, &mut seq, &mut f);
        seq.pop();
    }
}
