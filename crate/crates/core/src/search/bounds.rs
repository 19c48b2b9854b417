//! Enumeration limits derived from the target graph, and per-root audits.

use crate::construct::partitioned_link_graph;
use crate::graph::Multigraph;
use crate::metrics::{component_census, metrics, Dist};
use crate::partition::{count_cyclic_components, part_degree_set};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub ell: usize,
    pub max_m: usize,
    pub max_n: usize,
    pub max_degree: usize,
    /// Degree cap for tree roots at vertices of eccentricity below ℓ.
    pub tree_interior_cap: usize,
    pub required_links: usize,
    pub required_next_links: usize,
    pub max_cyclic: usize,
}

pub fn compute_bounds(h: &Multigraph, ell: usize) -> SearchBounds {
    let n = h.vertex_count();
    let m = h.edge_count();
    let (c, o, _) = component_census(h);
    let delta = h.max_degree();
    if ell == 0 {
        return SearchBounds {
            ell,
            max_m: m,
            max_n: n,
            max_degree: delta,
            tree_interior_cap: delta,
            required_links: n,
            required_next_links: m,
            max_cyclic: o,
        };
    }
    SearchBounds {
        ell,
        max_m: ell * n,
        max_n: ell * n + c,
        max_degree: c.max(delta) + 1,
        tree_interior_cap: c + 1,
        required_links: n,
        required_next_links: m,
        max_cyclic: o,
    }
}

/// Every bound inequality a minimal ℓ-root `g` of `h` must satisfy; returns
/// the violated ones, rendered.
pub fn audit_root(g: &Multigraph, h: &Multigraph, ell: usize) -> Vec<String> {
    let mut bad = Vec::new();
    if ell == 0 {
        return bad;
    }
    let b = compute_bounds(h, ell);
    let (n, m, delta) = (g.vertex_count(), g.edge_count(), g.max_degree());
    if m > b.max_m {
        bad.push(format!("m = {m} > l*n(H) = {}", b.max_m));
    }
    if n > b.max_n {
        bad.push(format!("n = {n} > l*n(H) + c(H) = {}", b.max_n));
    }
    if delta > b.max_degree {
        bad.push(format!("max degree {delta} > max(c(H), max degree of H) + 1 = {}", b.max_degree));
    }
    if let Ok((_, pg)) = partitioned_link_graph(g, ell) {
        let census = count_cyclic_components(&pg);
        let (_, max_part) = part_degree_set(&pg);
        if n > ell * h.vertex_count() + census.acyclic {
            bad.push(format!("n = {n} > l*n(H) + a = {}", ell * h.vertex_count() + census.acyclic));
        }
        let tight = census.acyclic.max(max_part) + 1;
        if delta > tight {
            bad.push(format!("max degree {delta} > b + 1 = {tight}"));
        }
    }
    if g.is_tree() {
        let gm = metrics(g);
        for v in 0..n {
            if gm.eccentricity[v] < Dist::Finite(ell) && g.degree(v) > b.tree_interior_cap {
                bad.push(format!(
                    "tree vertex {v} has eccentricity below l and degree {} > c(H) + 1 = {}",
                    g.degree(v),
                    b.tree_interior_cap
                ));
            }
        }
    }
    bad
}

/// `log2` of the sanity ceiling `(ℓn + a)^(2ℓn)` on the number of minimal
/// roots, with `a` relaxed to `c(H)`.
pub fn root_count_ceiling_log2(h: &Multigraph, ell: usize) -> f64 {
    let n = h.vertex_count() as f64;
    let (c, _, _) = component_census(h);
    let base = ell as f64 * n + c as f64;
    if base <= 1.0 {
        return 0.0;
    }
    2.0 * ell as f64 * n * base.log2()
}
