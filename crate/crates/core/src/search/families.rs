//! Closed-form root families: cycles, the empty pair, and tails on trees.

use crate::construct::Mode;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::metrics::{metrics, subdivision};
use crate::tree::tree_split;

use super::RootSet;

/// Two `2s`-paths whose middle vertices are joined by an `(ℓ-s)`-path.
pub fn h_tree(s: usize, ell: usize) -> Multigraph {
    assert!(s >= 1 && ell > s, "h_tree needs 1 <= s < l");
    let q = ell - s;
    let mut g = Multigraph::path(q);
    for end in [0, q] {
        for _ in 0..2 {
            let mut prev = end;
            for _ in 0..s {
                let w = g.add_vertex();
                g.push_edge_unchecked(prev, w);
                prev = w;
            }
        }
    }
    g
}

/// Minimal ℓ-roots of `C_t`: the cycle itself, `K_{1,3}` subdivided `ℓ`
/// times when `t = 3ℓ`, and the H-shaped tree when `t = 4s`, `ℓ >= 2s + 1`.
pub fn cycle_roots(t: usize, ell: usize) -> Result<RootSet> {
    if t < 2 {
        return Err(Error::InvalidArgument(format!("cycle length {t} is below 2")));
    }
    let mut graphs = vec![Multigraph::cycle(t)];
    if ell >= 1 && t == 3 * ell {
        graphs.push(subdivision(&Multigraph::star(3), ell));
    }
    if t.is_multiple_of(4) {
        let s = t / 4;
        if ell > 2 * s {
            graphs.push(h_tree(s, ell));
        }
    }
    RootSet::from_graphs(&Multigraph::cycle(t), ell, Mode::Link, graphs)
}

/// The ℓ-path `v_0 .. v_ℓ` with an extra `i`-path hung from `v_i`.
pub fn tail_tree(ell: usize, i: usize) -> Multigraph {
    assert!(i <= ell);
    let mut g = Multigraph::path(ell);
    let mut prev = i;
    for _ in 0..i {
        let w = g.add_vertex();
        g.push_edge_unchecked(prev, w);
        prev = w;
    }
    g
}

/// Minimal ℓ-roots of `2K_1`: two disjoint ℓ-paths, and the trees
/// [`tail_tree`]`(ℓ, i)` for `1 <= i <= (ℓ-1)/2`.
pub fn pair_empty_roots(ell: usize) -> Result<RootSet> {
    let target = Multigraph::empty(2);
    if ell == 0 {
        return RootSet::from_graphs(&target, 0, Mode::Link, vec![target.clone()]);
    }
    let p = Multigraph::path(ell);
    let mut graphs = vec![p.disjoint_union(&p)];
    graphs.extend((1..=(ell - 1) / 2).map(|i| tail_tree(ell, i)));
    RootSet::from_graphs(&target, ell, Mode::Link, graphs)
}

/// `T(v, ℓ)`: a fresh ℓ-path glued by one end to `v`.
pub fn attach_tail(t: &Multigraph, v: usize, ell: usize) -> Result<Multigraph> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    t.check_vertex(v)?;
    let mut g = t.clone();
    let mut prev = v;
    for _ in 0..ell {
        let w = g.add_vertex();
        g.push_edge_unchecked(prev, w);
        prev = w;
    }
    Ok(g)
}

/// The threshold `t_v`: `T(v, ℓ)` has ℓ-link graph `T` once `ℓ >= t_v + 1`.
pub fn t_v(t: &Multigraph, v: usize) -> Result<isize> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    t.check_vertex(v)?;
    let diam = |g: &Multigraph| metrics(g).diameter.finite().unwrap_or(0) as isize;
    if t.degree(v) >= 2 {
        return Ok(diam(t));
    }
    if t.max_degree() <= 2 {
        return Ok(-1);
    }
    // walk from the leaf to the nearest branch vertex
    let (mut cur, mut edge) = (v, usize::MAX);
    loop {
        let next = t
            .incident(cur)
            .iter()
            .copied()
            .find(|&e| e != edge)
            .expect("a non-path tree reaches a branch vertex");
        (cur, edge) = (t.opposite(next, cur), next);
        if t.degree(cur) >= 3 {
            break;
        }
    }
    let split = tree_split(t, edge, cur)?;
    Ok(diam(&split.near_graph(t).graph))
}
