//! Canonical augmentation over connected multigraphs.
//!
//! Every connected multigraph with at least one edge other than `K2` has a
//! canonical removable edge: a non-bridge, or an edge to a leaf (removed
//! together with the leaf). A child is kept only if deleting its canonical
//! edge gives back a graph isomorphic to the parent, and siblings are deduped
//! by canonical form, so each isomorphism class is visited once.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use crate::canon::{canonize, is_isomorphic, CanonicalForm};
use crate::construct::{link_graph, path_graph, Mode};
use crate::graph::Multigraph;
use crate::incidence::{is_l_minimal, is_l_path_minimal};
use crate::walk::count_links_capped;

/// Below this depth children are expanded in parallel.
const PARALLEL_DEPTH: usize = 3;

#[derive(Clone, Debug)]
pub(crate) struct Target {
    pub mode: Mode,
    pub ell: usize,
    pub graph: Multigraph,
    pub links: usize,
    pub next_links: usize,
    pub max_m: usize,
    pub max_n: usize,
    pub max_degree: Option<usize>,
    pub allow_cycles: bool,
}

pub(crate) struct Control {
    pub deadline: Option<Instant>,
    pub abort: AtomicBool,
    pub candidates: AtomicU64,
    pub pruned: AtomicU64,
}

impl Control {
    pub fn new(deadline: Option<Instant>) -> Self {
        Control {
            deadline,
            abort: AtomicBool::new(false),
            candidates: AtomicU64::new(0),
            pruned: AtomicU64::new(0),
        }
    }

    fn stopped(&self) -> bool {
        if self.abort.load(Ordering::Relaxed) {
            return true;
        }
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                self.abort.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }
}

struct Node {
    graph: Multigraph,
    form: CanonicalForm,
    links: usize,
    next_links: usize,
}

/// Counts used for pruning, or `None` when either exceeds its target.
fn counts(t: &Target, g: &Multigraph) -> Option<(usize, usize)> {
    match t.mode {
        Mode::Link => {
            let a = count_links_capped(g, t.ell, false, t.links)?;
            let b = count_links_capped(g, t.ell + 1, false, t.next_links)?;
            Some((a, b))
        }
        Mode::Path => {
            let a = count_links_capped(g, t.ell, true, t.links)?;
            let b = path_graph(g, t.ell).ok()?.graph.edge_count();
            (b <= t.next_links).then_some((a, b))
        }
    }
}

fn is_bridge(g: &Multigraph, e: usize) -> bool {
    let (u, v) = g.endpoints(e);
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(x) = stack.pop() {
        for &f in g.incident(x) {
            if f == e {
                continue;
            }
            let y = g.opposite(f, x);
            if y == v {
                return false;
            }
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    true
}

/// `g - e`, dropping a leaf endpoint with it.
fn remove_edge(g: &Multigraph, e: usize) -> Multigraph {
    let (u, v) = g.endpoints(e);
    let h = g.without_edge(e);
    if g.degree(u) == 1 {
        h.without_vertex(u)
    } else if g.degree(v) == 1 {
        h.without_vertex(v)
    } else {
        h
    }
}

fn edge_key(lab: &[usize], (u, v): (usize, usize)) -> (usize, usize) {
    let (a, b) = (lab[u], lab[v]);
    (a.max(b), a.min(b))
}

/// Whether `child`, obtained from the parent with form `parent` by adding
/// edge `new_edge`, is the canonical child.
fn is_canonical_child(child: &Multigraph, lab: &[usize], new_edge: usize, parent: &CanonicalForm) -> bool {
    let mut best: Option<((usize, usize), usize)> = None;
    for e in 0..child.edge_count() {
        let (u, v) = child.endpoints(e);
        let leaf = child.degree(u) == 1 || child.degree(v) == 1;
        if !leaf && is_bridge(child, e) {
            continue;
        }
        let key = edge_key(lab, (u, v));
        if best.is_none_or(|(k, _)| key > k) {
            best = Some((key, e));
        }
    }
    let Some((key, star)) = best else {
        return false;
    };
    if edge_key(lab, child.endpoints(new_edge)) == key {
        return true;
    }
    canonize(&remove_edge(child, star)).form == *parent
}

fn make_node(t: &Target, ctl: &Control, graph: Multigraph) -> Option<Node> {
    match counts(t, &graph) {
        Some((links, next_links)) => {
            let form = canonize(&graph).form;
            Some(Node {
                graph,
                form,
                links,
                next_links,
            })
        }
        None => {
            ctl.pruned.fetch_add(1, Ordering::Relaxed);
            None
        }
    }
}

fn children(t: &Target, ctl: &Control, node: &Node) -> Vec<Node> {
    let g = &node.graph;
    if g.edge_count() >= t.max_m {
        return Vec::new();
    }
    let n = g.vertex_count();
    let fits = |v: usize| t.max_degree.is_none_or(|d| g.degree(v) < d);
    let mut out = Vec::new();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut consider = |child: Multigraph, new_edge: usize| {
        let Some((links, next_links)) = counts(t, &child) else {
            ctl.pruned.fetch_add(1, Ordering::Relaxed);
            return;
        };
        let c = canonize(&child);
        if !seen.insert(c.form.clone()) {
            return;
        }
        if !is_canonical_child(&child, &c.labeling, new_edge, &node.form) {
            return;
        }
        ctl.candidates.fetch_add(1, Ordering::Relaxed);
        out.push(Node {
            graph: child,
            form: c.form,
            links,
            next_links,
        });
    };
    if t.allow_cycles {
        for u in 0..n {
            for v in u + 1..n {
                if fits(u) && fits(v) {
                    let mut child = g.clone();
                    let e = child.push_edge_unchecked(u, v);
                    consider(child, e);
                }
            }
        }
    }
    if n < t.max_n {
        for u in 0..n {
            if fits(u) {
                let mut child = g.clone();
                let w = child.add_vertex();
                let e = child.push_edge_unchecked(u, w);
                consider(child, e);
            }
        }
    }
    out
}

fn accept(t: &Target, node: &Node) -> bool {
    if node.links != t.links || node.next_links != t.next_links {
        return false;
    }
    let g = &node.graph;
    match t.mode {
        Mode::Link => is_l_minimal(g, t.ell) && link_graph(g, t.ell).is_ok_and(|r| is_isomorphic(&r.graph, &t.graph)),
        Mode::Path => {
            is_l_path_minimal(g, t.ell) && path_graph(g, t.ell).is_ok_and(|r| is_isomorphic(&r.graph, &t.graph))
        }
    }
}

fn explore(t: &Target, ctl: &Control, node: Node, depth: usize, found: &Mutex<Vec<Multigraph>>) {
    if ctl.stopped() {
        return;
    }
    if node.links == t.links {
        if accept(t, &node) {
            found.lock().expect("result lock").push(node.graph);
        }
        return;
    }
    let kids = children(t, ctl, &node);
    if depth < PARALLEL_DEPTH {
        kids.into_par_iter()
            .for_each(|k| explore(t, ctl, k, depth + 1, found));
    } else {
        for k in kids {
            explore(t, ctl, k, depth + 1, found);
        }
    }
}

/// Connected minimal roots of `t.graph` inside the target's limits, each
/// class once. Returns `Err(())` when the control aborted.
pub(crate) fn connected_roots(t: &Target, ctl: &Control) -> Result<Vec<Multigraph>, ()> {
    let found = Mutex::new(Vec::new());
    if t.max_m >= 1 && t.max_n >= 2 {
        let k2 = Multigraph::path(1);
        if let Some(root) = make_node(t, ctl, k2) {
            ctl.candidates.fetch_add(1, Ordering::Relaxed);
            explore(t, ctl, root, 0, &found);
        }
    }
    if ctl.abort.load(Ordering::Relaxed) {
        return Err(());
    }
    let mut roots = found.into_inner().expect("result lock");
    roots.sort_by_cached_key(|g| canonize(g).form);
    Ok(roots)
}
