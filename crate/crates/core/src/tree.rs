//! Linear-time sweeps over forests and the split `T_e^u`.

use crate::error::{Error, Result};
use crate::graph::{Multigraph, Subgraph};

/// For every edge `e = (a, b)` of a forest, `reach[e] = (ra, rb)` where `ra`
/// is the eccentricity of `a` inside `T_a^e` (the side through `e`), i.e.
/// one plus the height of the far side rooted at `b`. Likewise `rb`.
///
/// Two sweeps: heights bottom-up, then the complementary heights top-down.
pub fn edge_reach(g: &Multigraph) -> Vec<(usize, usize)> {
    debug_assert!(g.is_forest());
    let n = g.vertex_count();
    let mut parent_edge = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &e in g.incident(v) {
                let w = g.opposite(e, v);
                if !seen[w] {
                    seen[w] = true;
                    parent_edge[w] = e;
                    stack.push(w);
                }
            }
        }
    }

    // down[v]: height of the subtree hanging below v
    let mut down = vec![0usize; n];
    for &v in order.iter().rev() {
        let pe = parent_edge[v];
        if pe != usize::MAX {
            let p = g.opposite(pe, v);
            down[p] = down[p].max(down[v] + 1);
        }
    }

    // up[v]: eccentricity of v through its parent edge (0 at roots)
    let mut up = vec![0usize; n];
    for &v in &order {
        let mut best = [up[v], 0usize];
        for &e in g.incident(v) {
            if e == parent_edge[v] {
                continue;
            }
            let c = g.opposite(e, v);
            let h = down[c] + 1;
            if h > best[0] {
                best = [h, best[0]];
            } else if h > best[1] {
                best[1] = h;
            }
        }
        for &e in g.incident(v) {
            if e == parent_edge[v] {
                continue;
            }
            let c = g.opposite(e, v);
            let other = if down[c] + 1 == best[0] { best[1] } else { best[0] };
            up[c] = other + 1;
        }
    }

    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| {
            if parent_edge[b] == e {
                (down[b] + 1, up[b])
            } else {
                (up[a], down[a] + 1)
            }
        })
        .collect()
}

/// Eccentricity `ecc_{T_u^e}(u)` read off an [`edge_reach`] table.
#[inline]
pub fn reach_from(g: &Multigraph, reach: &[(usize, usize)], e: usize, u: usize) -> usize {
    if g.endpoints(e).0 == u {
        reach[e].0
    } else {
        reach[e].1
    }
}

/// Eccentricity of every vertex of a forest within its own tree.
pub fn forest_eccentricities(g: &Multigraph) -> Vec<usize> {
    let reach = edge_reach(g);
    (0..g.vertex_count())
        .map(|v| {
            g.incident(v)
                .iter()
                .map(|&e| reach_from(g, &reach, e, v))
                .max()
                .unwrap_or(0)
        })
        .collect()
}

/// `T - e` split at `e = uv`: `near` is `T_e^u`, `far` is `T_e^v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSplit {
    pub edge: usize,
    pub u: usize,
    pub v: usize,
    pub near: Vec<usize>,
    pub far: Vec<usize>,
}

impl TreeSplit {
    /// `T_e^u` as a graph.
    pub fn near_graph(&self, t: &Multigraph) -> Subgraph {
        t.induced(&self.near)
    }

    /// `T_u^e = T_e^v + e`, which also contains `u`.
    pub fn through_graph(&self, t: &Multigraph) -> Subgraph {
        let mut vs = self.far.clone();
        vs.push(self.u);
        t.induced(&vs)
    }
}

pub fn tree_split(t: &Multigraph, e: usize, u: usize) -> Result<TreeSplit> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    t.check_edge(e)?;
    t.check_vertex(u)?;
    let (a, b) = t.endpoints(e);
    if u != a && u != b {
        return Err(Error::NotIncident { edge: e, vertex: u });
    }
    let v = t.opposite(e, u);
    let mut side = vec![false; t.vertex_count()];
    side[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &f in t.incident(x) {
            if f == e {
                continue;
            }
            let y = t.opposite(f, x);
            if !side[y] {
                side[y] = true;
                stack.push(y);
            }
        }
    }
    let near = (0..t.vertex_count()).filter(|&x| side[x]).collect();
    let far = (0..t.vertex_count()).filter(|&x| !side[x]).collect();
    Ok(TreeSplit {
        edge: e,
        u,
        v,
        near,
        far,
    })
}
