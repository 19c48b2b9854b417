//! Distance-based metrics, girth and component census.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::Multigraph;

/// A non-negative integer or `+inf`. `Finite(_) < Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dist {
    Finite(usize),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Dist::Infinite
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMetrics {
    pub eccentricity: Vec<Dist>,
    pub diameter: Dist,
    pub radius: Dist,
    pub girth: Dist,
    pub components: usize,
    pub cyclic_components: usize,
    pub acyclic_components: usize,
    /// Component label per vertex, labels ordered by smallest vertex.
    pub component_of: Vec<usize>,
    pub component_cyclic: Vec<bool>,
    /// Diameter of each component taken on its own.
    pub component_diameter: Vec<usize>,
}

/// BFS distances from `s`; `usize::MAX` for unreachable vertices.
pub fn bfs(g: &Multigraph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for &e in g.incident(v) {
            let w = g.opposite(e, v);
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Length of a shortest cycle; parallel edges form 2-cycles.
pub fn girth(g: &Multigraph) -> Dist {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for &e in g.incident(v) {
                if e == via[v] && v != s {
                    continue;
                }
                let w = g.opposite(e, v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Dist::Infinite
    } else {
        Dist::Finite(best)
    }
}

pub fn metrics(g: &Multigraph) -> GraphMetrics {
    let n = g.vertex_count();
    let (component_of, count) = g.component_labels();
    let mut comp_vertices = vec![0usize; count];
    let mut comp_edges = vec![0usize; count];
    for v in 0..n {
        comp_vertices[component_of[v]] += 1;
    }
    for &(u, _) in g.edges() {
        comp_edges[component_of[u]] += 1;
    }
    let component_cyclic: Vec<bool> = (0..count)
        .map(|c| comp_edges[c] >= comp_vertices[c])
        .collect();
    let cyclic = component_cyclic.iter().filter(|&&b| b).count();

    let mut component_diameter = vec![0usize; count];
    let mut within = vec![0usize; n];
    for v in 0..n {
        let d = bfs(g, v);
        let far = d.iter().copied().filter(|&x| x != usize::MAX).max().unwrap_or(0);
        within[v] = far;
        let c = component_of[v];
        component_diameter[c] = component_diameter[c].max(far);
    }
    let eccentricity: Vec<Dist> = if count <= 1 {
        within.iter().map(|&d| Dist::Finite(d)).collect()
    } else {
        vec![Dist::Infinite; n]
    };
    let (diameter, radius) = if count > 1 {
        (Dist::Infinite, Dist::Infinite)
    } else {
        (
            Dist::Finite(within.iter().copied().max().unwrap_or(0)),
            Dist::Finite(within.iter().copied().min().unwrap_or(0)),
        )
    };
    GraphMetrics {
        eccentricity,
        diameter,
        radius,
        girth: girth(g),
        components: count,
        cyclic_components: cyclic,
        acyclic_components: count - cyclic,
        component_of,
        component_cyclic,
        component_diameter,
    }
}

/// Counts `(c, o, a)`: all, cyclic and acyclic components.
pub fn component_census(g: &Multigraph) -> (usize, usize, usize) {
    let (label, count) = g.component_labels();
    let mut nv = vec![0usize; count];
    let mut ne = vec![0usize; count];
    for &c in &label {
        nv[c] += 1;
    }
    for &(u, _) in g.edges() {
        ne[label[u]] += 1;
    }
    let o = (0..count).filter(|&c| ne[c] >= nv[c]).count();
    (count, o, count - o)
}

/// Replaces every edge by an `s`-path. Edge `i` becomes edges
/// `s*i .. s*i + s - 1`, in order from its first endpoint.
pub fn subdivision(g: &Multigraph, s: usize) -> Multigraph {
    assert!(s >= 1, "subdivision needs s >= 1");
    let n = g.vertex_count();
    let mut out = Multigraph::new(n + (s - 1) * g.edge_count());
    let mut next = n;
    for &(u, v) in g.edges() {
        let mut prev = u;
        for _ in 1..s {
            out.push_edge_unchecked(prev, next);
            prev = next;
            next += 1;
        }
        out.push_edge_unchecked(prev, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_metrics() {
        for l in 0..8 {
            let m = metrics(&Multigraph::path(l));
            assert_eq!(m.diameter, Dist::Finite(l));
            assert_eq!(m.radius, Dist::Finite(l.div_ceil(2)));
            assert_eq!(m.girth, Dist::Infinite);
        }
    }

    #[test]
    fn disconnected_metrics() {
        let m = metrics(&Multigraph::empty(2));
        assert_eq!(m.radius, Dist::Infinite);
        assert_eq!(m.diameter, Dist::Infinite);
        assert_eq!((m.components, m.cyclic_components, m.acyclic_components), (2, 0, 2));
        assert!(m.eccentricity.iter().all(|d| d.is_infinite()));
    }

    #[test]
    fn cycle_metrics() {
        let m = metrics(&Multigraph::cycle(5));
        assert_eq!(m.girth, Dist::Finite(5));
        assert_eq!(m.diameter, Dist::Finite(2));
        assert_eq!(m.cyclic_components, 1);
        assert_eq!(metrics(&Multigraph::cycle(2)).girth, Dist::Finite(2));
        assert_eq!(girth(&Multigraph::complete(4)), Dist::Finite(3));
        let g = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)]).unwrap();
        assert_eq!(girth(&g), Dist::Finite(4));
        assert_eq!(component_census(&g), (2, 1, 1));
    }

    #[test]
    fn subdivisions() {
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(subdivision(&g, 1), g);
        let s = subdivision(&Multigraph::star(3), 2);
        assert_eq!((s.vertex_count(), s.edge_count()), (7, 6));
        for l in 1..5 {
            let c = subdivision(&Multigraph::cycle(3), l);
            assert!(crate::canon::is_isomorphic(&c, &Multigraph::cycle(3 * l)));
        }
        let s3 = subdivision(&g, 3);
        assert_eq!(s3.vertex_count(), 3 + 2 * 3);
        assert_eq!(s3.edge_count(), 9);
    }
}
