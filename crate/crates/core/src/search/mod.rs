//! Minimal ℓ-roots and ℓ-path-roots of a finite target graph.
//!
//! A minimal root is a disjoint union of connected minimal roots whose link
//! graphs partition the components of the target. The search therefore
//! groups the target's components into isomorphism classes, finds the
//! connected roots of every sub-multiset of components, and combines them
//! over all multiset partitions.

mod bounds;
mod export;
mod families;
mod generate;

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::Ordering;
use std::time::{Duration, Instant};

pub use bounds::{audit_root, compute_bounds, root_count_ceiling_log2, SearchBounds};
pub use export::{write_root_set, ROOTS_INDEX};
pub use families::{attach_tail, cycle_roots, h_tree, pair_empty_roots, t_v, tail_tree};

use crate::canon::{canonical_form, find_isomorphism, verify_isomorphism, CanonicalForm, Isomorphism};
use crate::construct::{link_graph, path_graph, LinkGraphResult, Mode};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::metrics::component_census;
use generate::{connected_roots, Control, Target};

/// Refuse searches whose size bound exceeds this many edges.
pub const DESK_SCALE_MAX_EDGES: usize = 64;

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub trees_only: bool,
    pub forests_only: bool,
    pub connected_only: bool,
    pub budget: Option<Duration>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub candidates: u64,
    pub pruned: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    Tree,
    Forest,
    Cyclic,
}

impl RootKind {
    pub fn of(g: &Multigraph) -> Self {
        if !g.is_forest() {
            RootKind::Cyclic
        } else if g.is_connected() && g.vertex_count() > 0 {
            RootKind::Tree
        } else {
            RootKind::Forest
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RootKind::Tree => "tree",
            RootKind::Forest => "forest",
            RootKind::Cyclic => "cyclic",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Root {
    pub form: CanonicalForm,
    /// The root, in canonical labelling.
    pub graph: Multigraph,
    pub kind: RootKind,
    /// Its link (or path) graph with provenance.
    pub construction: LinkGraphResult,
    /// Isomorphism from `construction.graph` onto the target.
    pub witness: Isomorphism,
}

#[derive(Clone, Debug)]
pub struct RootSet {
    pub ell: usize,
    pub mode: Mode,
    pub target: Multigraph,
    /// Sorted by canonical form.
    pub roots: Vec<Root>,
    pub stats: SearchStats,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn forms(&self) -> Vec<CanonicalForm> {
        self.roots.iter().map(|r| r.form.clone()).collect()
    }

    /// Builds a root set from explicit graphs, certifying each one.
    pub fn from_graphs(target: &Multigraph, ell: usize, mode: Mode, graphs: Vec<Multigraph>) -> Result<Self> {
        let mut by_form = BTreeMap::new();
        for g in graphs {
            let root = certify(target, ell, mode, &g)?;
            by_form.entry(root.form.clone()).or_insert(root);
        }
        Ok(RootSet {
            ell,
            mode,
            target: target.clone(),
            roots: by_form.into_values().collect(),
            stats: SearchStats::default(),
        })
    }
}

fn construct(g: &Multigraph, ell: usize, mode: Mode) -> Result<LinkGraphResult> {
    match mode {
        Mode::Link => link_graph(g, ell),
        Mode::Path => path_graph(g, ell),
    }
}

fn certify(target: &Multigraph, ell: usize, mode: Mode, g: &Multigraph) -> Result<Root> {
    let form = canonical_form(g);
    let graph = form
        .to_graph()
        .ok_or_else(|| Error::Internal("canonical form does not decode".into()))?;
    let construction = construct(&graph, ell, mode)?;
    let witness = find_isomorphism(&construction.graph, target)
        .ok_or_else(|| Error::Internal("root does not reproduce the target".into()))?;
    if !verify_isomorphism(&construction.graph, target, &witness) {
        return Err(Error::Internal("isomorphism witness failed verification".into()));
    }
    Ok(Root {
        form,
        kind: RootKind::of(&graph),
        graph,
        construction,
        witness,
    })
}

pub fn minimal_link_roots(h: &Multigraph, ell: usize, opts: &SearchOptions) -> Result<RootSet> {
    search(h, ell, Mode::Link, opts)
}

pub fn minimal_path_roots(h: &Multigraph, ell: usize, opts: &SearchOptions) -> Result<RootSet> {
    search(h, ell, Mode::Path, opts)
}

struct Classes {
    reps: Vec<Multigraph>,
    counts: Vec<usize>,
}

fn component_classes(h: &Multigraph) -> Classes {
    let mut by_form: BTreeMap<CanonicalForm, (Multigraph, usize)> = BTreeMap::new();
    for comp in h.components() {
        let g = h.induced(&comp).graph;
        let f = canonical_form(&g);
        by_form.entry(f).or_insert((g, 0)).1 += 1;
    }
    let (reps, counts) = by_form.into_values().unzip();
    Classes { reps, counts }
}

/// All `s <= bound` componentwise, in lexicographic order.
fn sub_multisets(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |k| {
                    let mut p = prefix.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out
}

fn assemble(classes: &Classes, counts: &[usize]) -> Multigraph {
    let mut g = Multigraph::new(0);
    for (rep, &k) in classes.reps.iter().zip(counts) {
        for _ in 0..k {
            g = g.disjoint_union(rep);
        }
    }
    g
}

fn search(h: &Multigraph, ell: usize, mode: Mode, opts: &SearchOptions) -> Result<RootSet> {
    let start = Instant::now();
    let finish = |graphs: Vec<Multigraph>, stats: SearchStats| -> Result<RootSet> {
        let mut set = RootSet::from_graphs(h, ell, mode, graphs)?;
        set.stats = stats;
        Ok(set)
    };
    if ell == 0 {
        let keep = match mode {
            Mode::Link => true,
            Mode::Path => h.edges().iter().enumerate().all(|(e, &(u, v))| h.edges_between(u, v)[0] == e),
        };
        let graphs = if keep && passes_filters(h, opts) { vec![h.clone()] } else { vec![] };
        return finish(graphs, SearchStats::default());
    }
    if h.vertex_count() == 0 {
        return finish(vec![Multigraph::new(0)], SearchStats::default());
    }
    let bounds = compute_bounds(h, ell);
    if bounds.max_m > DESK_SCALE_MAX_EDGES {
        return Err(Error::Budget {
            reason: format!(
                "size bound l*n(H) = {} exceeds the desk-scale limit of {DESK_SCALE_MAX_EDGES} edges",
                bounds.max_m
            ),
            candidates: 0,
            pruned: 0,
            roots: 0,
        });
    }

    let ctl = Control::new(opts.budget.map(|b| start + b));
    let classes = component_classes(h);
    let mut connected: HashMap<Vec<usize>, Vec<Multigraph>> = HashMap::new();
    for sub in sub_multisets(&classes.counts) {
        if sub.iter().all(|&k| k == 0) {
            continue;
        }
        if opts.connected_only && sub != classes.counts {
            continue;
        }
        let x = assemble(&classes, &sub);
        let roots = connected_roots_of(&x, ell, mode, opts, &ctl).map_err(|()| budget_error(&ctl, &connected))?;
        connected.insert(sub, roots);
    }

    let mut out: BTreeMap<CanonicalForm, Multigraph> = BTreeMap::new();
    let mut partial = Vec::new();
    combine(&classes.counts, &connected, &mut partial, &mut out);
    let stats = SearchStats {
        candidates: ctl.candidates.load(Ordering::Relaxed),
        pruned: ctl.pruned.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    };
    let graphs = out.into_values().filter(|g| passes_filters(g, opts)).collect();
    finish(graphs, stats)
}

fn passes_filters(g: &Multigraph, opts: &SearchOptions) -> bool {
    let kind = RootKind::of(g);
    (!opts.trees_only || kind == RootKind::Tree)
        && (!opts.forests_only || kind != RootKind::Cyclic)
        && (!opts.connected_only || g.is_connected())
}

fn budget_error(ctl: &Control, connected: &HashMap<Vec<usize>, Vec<Multigraph>>) -> Error {
    Error::Budget {
        reason: "time budget exhausted".into(),
        candidates: ctl.candidates.load(Ordering::Relaxed),
        pruned: ctl.pruned.load(Ordering::Relaxed),
        roots: connected.values().map(Vec::len).sum(),
    }
}

fn connected_roots_of(
    x: &Multigraph,
    ell: usize,
    mode: Mode,
    opts: &SearchOptions,
    ctl: &Control,
) -> std::result::Result<Vec<Multigraph>, ()> {
    let (_, o, _) = component_census(x);
    let n = x.vertex_count();
    if mode == Mode::Path {
        let simple = x.edges().iter().enumerate().all(|(e, &(u, v))| x.edges_between(u, v)[0] == e);
        if !simple {
            return Ok(Vec::new());
        }
    }
    let b = compute_bounds(x, ell);
    let target = Target {
        mode,
        ell,
        graph: x.clone(),
        links: n,
        next_links: x.edge_count(),
        max_m: b.max_m,
        max_n: b.max_n,
        max_degree: (mode == Mode::Link).then_some(b.max_degree),
        allow_cycles: !(opts.trees_only || opts.forests_only) && (mode == Mode::Path || o >= 1),
    };
    connected_roots(&target, ctl)
}

/// Splits `remaining` into blocks, the first block always holding one copy of
/// the first nonzero class, and picks a connected root for each block.
fn combine(
    remaining: &[usize],
    connected: &HashMap<Vec<usize>, Vec<Multigraph>>,
    partial: &mut Vec<Multigraph>,
    out: &mut BTreeMap<CanonicalForm, Multigraph>,
) {
    let Some(first) = remaining.iter().position(|&k| k > 0) else {
        let mut g = Multigraph::new(0);
        for p in partial.iter() {
            g = g.disjoint_union(p);
        }
        out.entry(canonical_form(&g)).or_insert(g);
        return;
    };
    for sub in sub_multisets(remaining) {
        if sub[first] == 0 {
            continue;
        }
        let Some(roots) = connected.get(&sub) else {
            continue;
        };
        let rest: Vec<usize> = remaining.iter().zip(&sub).map(|(a, b)| a - b).collect();
        for r in roots {
            partial.push(r.clone());
            combine(&rest, connected, partial, out);
            partial.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::metrics::subdivision;

    fn forms(gs: &[Multigraph]) -> Vec<CanonicalForm> {
        let mut f: Vec<_> = gs.iter().map(canonical_form).collect();
        f.sort();
        f
    }

    #[test]
    fn whitney_pair() {
        let set = minimal_link_roots(&Multigraph::complete(3), 1, &SearchOptions::default()).unwrap();
        assert_eq!(set.forms(), forms(&[Multigraph::complete(3), Multigraph::star(3)]));
    }

    #[test]
    fn subdivided_claw_and_hexagon() {
        let set = minimal_link_roots(&Multigraph::cycle(6), 2, &SearchOptions::default()).unwrap();
        let expect = forms(&[Multigraph::cycle(6), subdivision(&Multigraph::star(3), 2)]);
        assert_eq!(set.forms(), expect);
        let trees = SearchOptions {
            trees_only: true,
            ..Default::default()
        };
        assert_eq!(minimal_link_roots(&Multigraph::cycle(6), 2, &trees).unwrap().len(), 1);
    }

    #[test]
    fn trivial_targets() {
        let k1 = Multigraph::new(1);
        let set = minimal_link_roots(&k1, 3, &SearchOptions::default()).unwrap();
        assert_eq!(set.len(), 1);
        assert!(is_isomorphic(&set.roots[0].graph, &Multigraph::path(3)));
        let null = minimal_link_roots(&Multigraph::new(0), 2, &SearchOptions::default()).unwrap();
        assert_eq!(null.len(), 1);
        assert!(null.roots[0].graph.is_null());
        let zero = minimal_link_roots(&Multigraph::cycle(4), 0, &SearchOptions::default()).unwrap();
        assert_eq!(zero.forms(), forms(&[Multigraph::cycle(4)]));
    }

    #[test]
    fn path_roots_of_an_edge() {
        let k2 = Multigraph::path(1);
        let set = minimal_path_roots(&k2, 1, &SearchOptions::default()).unwrap();
        assert_eq!(set.forms(), forms(&[Multigraph::path(2), Multigraph::cycle(2)]));
        let set = minimal_path_roots(&k2, 3, &SearchOptions::default()).unwrap();
        assert_eq!(set.forms(), forms(&[Multigraph::path(4)]));
    }

    #[test]
    fn budget_is_reported() {
        let opts = SearchOptions {
            budget: Some(Duration::from_nanos(1)),
            ..Default::default()
        };
        let err = minimal_link_roots(&Multigraph::cycle(6), 2, &opts).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn multiset_helpers() {
        assert_eq!(sub_multisets(&[1, 2]).len(), 6);
        let h = Multigraph::empty(2).disjoint_union(&Multigraph::path(1));
        let c = component_classes(&h);
        assert_eq!(c.counts.iter().sum::<usize>(), 3);
    }
}
