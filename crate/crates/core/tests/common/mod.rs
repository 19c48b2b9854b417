#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use linkroot::canon::{canonical_form, CanonicalForm};
use linkroot::construct::{link_graph, path_graph};
use linkroot::incidence::{is_l_minimal, is_l_path_minimal};
use linkroot::walk::count_links_capped;
use linkroot::Multigraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every loopless multigraph on exactly `n` vertices with at most `max_m`
/// edges, one per isomorphism class, grouped by edge count.
pub fn all_on_n_vertices(n: usize, max_m: usize) -> Vec<Vec<Multigraph>> {
    let mut levels = vec![vec![Multigraph::new(n)]];
    for _ in 0..max_m {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in levels.last().unwrap() {
            for u in 0..n {
                for v in u + 1..n {
                    let mut h = g.clone();
                    h.add_edge(u, v).unwrap();
                    if seen.insert(canonical_form(&h)) {
                        next.push(h);
                    }
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// Every loopless multigraph without isolated vertices and with at most
/// `max_m` edges (the null graph included), one per isomorphism class.
pub fn all_without_isolated(max_m: usize) -> Vec<Multigraph> {
    let mut levels = vec![vec![Multigraph::new(0)]];
    for _ in 0..max_m {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in levels.last().unwrap() {
            let n = g.vertex_count();
            let mut push = |h: Multigraph| {
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            };
            for u in 0..n {
                for v in u + 1..n {
                    let mut h = g.clone();
                    h.add_edge(u, v).unwrap();
                    push(h);
                }
                let mut h = g.clone();
                let w = h.add_vertex();
                h.add_edge(u, w).unwrap();
                push(h);
            }
            let mut h = g.clone();
            let a = h.add_vertex();
            let b = h.add_vertex();
            h.add_edge(a, b).unwrap();
            push(h);
        }
        levels.push(next);
    }
    levels.into_iter().flatten().collect()
}

/// Minimal roots among `candidates`, keyed by the form of their link (or
/// path) graph.
pub struct NaiveRoots {
    pub by_target: BTreeMap<CanonicalForm, BTreeSet<CanonicalForm>>,
}

impl NaiveRoots {
    /// Only targets of order at most `max_target_n` are recorded.
    pub fn build(candidates: &[Multigraph], ell: usize, path_mode: bool, max_target_n: usize) -> Self {
        let mut by_target: BTreeMap<CanonicalForm, BTreeSet<CanonicalForm>> = BTreeMap::new();
        for g in candidates {
            let minimal = if path_mode { is_l_path_minimal(g, ell) } else { is_l_minimal(g, ell) };
            if !minimal || count_links_capped(g, ell, path_mode, max_target_n).is_none() {
                continue;
            }
            let h = if path_mode { path_graph(g, ell) } else { link_graph(g, ell) }
                .unwrap()
                .graph;
            by_target.entry(canonical_form(&h)).or_default().insert(canonical_form(g));
        }
        NaiveRoots { by_target }
    }

    pub fn roots_of(&self, h: &Multigraph) -> BTreeSet<CanonicalForm> {
        self.by_target.get(&canonical_form(h)).cloned().unwrap_or_default()
    }
}

/// A random multigraph with `n` vertices and `m` edges, parallel edges
/// allowed.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, m: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    if n < 2 {
        return g;
    }
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        g.add_edge(u, v).unwrap();
    }
    g
}

/// A uniformly random labelled tree on `n` vertices (Prüfer decoding).
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, x).unwrap();
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

/// The shared random corpus: 200 multigraphs with `n <= 8`, `m <= 12`.
pub fn corpus() -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1ab5);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            let m = if n < 2 { 0 } else { rng.gen_range(0..=12) };
            random_multigraph(&mut rng, n, m)
        })
        .collect()
}

pub fn forms(gs: &[Multigraph]) -> BTreeSet<CanonicalForm> {
    gs.iter().map(canonical_form).collect()
}
