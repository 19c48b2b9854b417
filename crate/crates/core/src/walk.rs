//! Arcs and links: walks whose consecutive edges differ.
//!
//! Both are stored as interleaved id sequences `[v0, e1, v1, ..., el, vl]`.
//! A link is the reversal class of an arc and is kept in whichever
//! orientation is lexicographically smaller.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::metrics::Dist;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    seq: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Link {
    seq: Vec<usize>,
}

fn reversed(seq: &[usize]) -> Vec<usize> {
    seq.iter().rev().copied().collect()
}

/// True when `seq` is already the canonical orientation of its link.
fn is_canonical(seq: &[usize]) -> bool {
    let n = seq.len();
    for i in 0..n {
        let (a, b) = (seq[i], seq[n - 1 - i]);
        if a != b {
            return a < b;
        }
    }
    true
}

impl Arc {
    /// Checks that `seq` is an arc of `g`.
    pub fn new(g: &Multigraph, seq: Vec<usize>) -> Result<Self> {
        validate(g, &seq)?;
        Ok(Arc { seq })
    }

    pub(crate) fn from_raw(seq: Vec<usize>) -> Self {
        Arc { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn vertex(&self, i: usize) -> usize {
        self.seq[2 * i]
    }

    /// Edge `e_i`, 1-based as in `(v0, e1, v1, ...)`.
    pub fn edge(&self, i: usize) -> usize {
        self.seq[2 * i - 1]
    }

    pub fn tail(&self) -> usize {
        self.seq[0]
    }

    pub fn head(&self) -> usize {
        self.seq[self.seq.len() - 1]
    }

    pub fn reverse(&self) -> Arc {
        Arc {
            seq: reversed(&self.seq),
        }
    }

    /// The sub-arc `(v_i, e_{i+1}, ..., v_j)`.
    pub fn sub(&self, i: usize, j: usize) -> Arc {
        assert!(i <= j && j <= self.len());
        Arc {
            seq: self.seq[2 * i..=2 * j].to_vec(),
        }
    }

    pub fn link(&self) -> Link {
        Link::from_seq(&self.seq)
    }
}

impl Link {
    pub fn new(g: &Multigraph, seq: &[usize]) -> Result<Self> {
        validate(g, seq)?;
        Ok(Link::from_seq(seq))
    }

    pub(crate) fn from_seq(seq: &[usize]) -> Self {
        if is_canonical(seq) {
            Link { seq: seq.to_vec() }
        } else {
            Link { seq: reversed(seq) }
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The canonical orientation.
    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn arc(&self) -> Arc {
        Arc {
            seq: self.seq.clone(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.seq.iter().step_by(2).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.seq.iter().skip(1).step_by(2).copied()
    }

    /// No repeated vertices.
    pub fn is_path(&self) -> bool {
        let mut vs: Vec<usize> = self.vertices().collect();
        vs.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1])
    }

    /// Closed walk whose proper prefix is a path.
    pub fn is_cycle(&self) -> bool {
        let l = self.len();
        l >= 2 && self.seq[0] == self.seq[2 * l] && self.arc().sub(0, l - 1).link().is_path()
    }

    /// Minimum length of a closed sub-walk, `Infinite` for a path.
    pub fn girth(&self) -> Dist {
        closed_subwalk_girth(&self.vertices().collect::<Vec<_>>())
    }

    /// The subgraph of `g` made of this link's units.
    pub fn induced_graph(&self, g: &Multigraph) -> Multigraph {
        let mut kv = vec![false; g.vertex_count()];
        let mut ke = vec![false; g.edge_count()];
        for v in self.vertices() {
            kv[v] = true;
        }
        for e in self.edges() {
            ke[e] = true;
        }
        g.subgraph(&kv, &ke).graph
    }

    /// Rendered as `v0 -e1- v1 -e2- ... vl`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, x) in self.seq.iter().enumerate() {
            if i % 2 == 0 {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&x.to_string());
            } else {
                out.push_str(&format!(" -{x}-"));
            }
        }
        out
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Smallest `j - i > 0` with `items[i] == items[j]`.
pub(crate) fn closed_subwalk_girth<T: PartialEq>(items: &[T]) -> Dist {
    let mut best = None;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i] == items[j] {
                let d = j - i;
                best = Some(best.map_or(d, |b: usize| b.min(d)));
                break;
            }
        }
    }
    best.map_or(Dist::Infinite, Dist::Finite)
}

fn validate(g: &Multigraph, seq: &[usize]) -> Result<()> {
    if seq.len().is_multiple_of(2) {
        return Err(Error::NotALink(format!("even-length sequence {seq:?}")));
    }
    for (i, &x) in seq.iter().enumerate() {
        if i % 2 == 0 {
            g.check_vertex(x).map_err(|e| Error::NotALink(e.to_string()))?;
        } else {
            g.check_edge(x).map_err(|e| Error::NotALink(e.to_string()))?;
            let (a, b) = g.endpoints(x);
            let (p, q) = (seq[i - 1], seq[i + 1]);
            if !((a, b) == (p, q) || (a, b) == (q, p)) {
                return Err(Error::NotALink(format!("edge {x} does not join {p} and {q}")));
            }
            if i >= 3 && seq[i - 2] == x {
                return Err(Error::NotALink(format!("edge {x} repeated consecutively")));
            }
        }
    }
    Ok(())
}

/// Visits every `l`-arc of `g` in lexicographic order of its id sequence.
/// With `paths_only`, arcs that repeat a vertex are skipped.
pub fn visit_arcs<F>(g: &Multigraph, l: usize, paths_only: bool, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut seq = Vec::with_capacity(2 * l + 1);
    let mut on_path = vec![false; g.vertex_count()];
    for v in 0..g.vertex_count() {
        seq.push(v);
        on_path[v] = true;
        let flow = extend(g, l, paths_only, &mut seq, &mut on_path, &mut f);
        on_path[v] = false;
        seq.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    g: &Multigraph,
    l: usize,
    paths_only: bool,
    seq: &mut Vec<usize>,
    on_path: &mut [bool],
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if seq.len() == 2 * l + 1 {
        return f(seq);
    }
    let v = seq[seq.len() - 1];
    let prev = if seq.len() >= 2 {
        Some(seq[seq.len() - 2])
    } else {
        None
    };
    for &e in g.incident(v) {
        if Some(e) == prev {
            continue;
        }
        let w = g.opposite(e, v);
        if paths_only && on_path[w] {
            continue;
        }
        seq.push(e);
        seq.push(w);
        let marked = !on_path[w];
        on_path[w] = true;
        let flow = extend(g, l, paths_only, seq, on_path, f);
        if marked {
            on_path[w] = false;
        }
        seq.pop();
        seq.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Visits each `l`-link once, in its canonical orientation.
pub fn visit_links<F>(g: &Multigraph, l: usize, paths_only: bool, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    visit_arcs(g, l, paths_only, |seq| {
        if is_canonical(seq) {
            f(seq)
        } else {
            ControlFlow::Continue(())
        }
    })
}

pub fn enumerate_arcs(g: &Multigraph, l: usize) -> Vec<Arc> {
    let mut out = Vec::new();
    let _ = visit_arcs(g, l, false, |s| {
        out.push(Arc::from_raw(s.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// All `l`-links, sorted by canonical sequence.
pub fn enumerate_links(g: &Multigraph, l: usize) -> Vec<Link> {
    collect_links(g, l, false)
}

/// All `l`-paths, sorted by canonical sequence.
pub fn enumerate_paths(g: &Multigraph, l: usize) -> Vec<Link> {
    collect_links(g, l, true)
}

fn collect_links(g: &Multigraph, l: usize, paths_only: bool) -> Vec<Link> {
    let mut out = Vec::new();
    let _ = visit_links(g, l, paths_only, |s| {
        out.push(Link { seq: s.to_vec() });
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    out
}

/// Counts `l`-links, giving up (returning `None`) once the count passes `cap`.
pub fn count_links_capped(g: &Multigraph, l: usize, paths_only: bool, cap: usize) -> Option<usize> {
    let mut count = 0usize;
    let flow = visit_links(g, l, paths_only, |_| {
        count += 1;
        if count > cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    match flow {
        ControlFlow::Continue(()) => Some(count),
        ControlFlow::Break(()) => None,
    }
}

pub fn count_links(g: &Multigraph, l: usize) -> usize {
    count_links_capped(g, l, false, usize::MAX).unwrap_or(usize::MAX)
}
