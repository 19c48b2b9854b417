//! Canonical labelling of multigraphs by individualisation and refinement.
//!
//! Leaves of the search tree are compared by their relabelled, sorted edge
//! lists; the smallest one is canonical. Automorphisms discovered along the
//! way prune sibling branches that lie in a common orbit.

use std::collections::HashMap;
use std::fmt;

use crate::graph::Multigraph;

/// Byte string identifying an isomorphism class.
///
/// Layout: `n` and `m` as big-endian `u32`, then `m` pairs `(u, v)` with
/// `u <= v`, sorted. Coloured forms append the colour of each label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(2 * self.0.len());
        for b in &self.0 {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    /// Rebuilds the graph encoded by an uncoloured form.
    pub fn to_graph(&self) -> Option<Multigraph> {
        let words: Vec<u32> = self
            .0
            .chunks(4)
            .map(|c| c.try_into().ok().map(u32::from_be_bytes))
            .collect::<Option<_>>()?;
        let (&n, rest) = words.split_first()?;
        let (&m, rest) = rest.split_first()?;
        if rest.len() != 2 * m as usize {
            return None;
        }
        let edges: Vec<(usize, usize)> = rest
            .chunks(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        Multigraph::from_edges(n as usize, &edges).ok()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[derive(Clone, Debug)]
pub struct Canon {
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    pub form: CanonicalForm,
}

impl Canon {
    pub fn graph(&self, g: &Multigraph) -> Multigraph {
        g.relabel(&self.labeling)
    }
}

/// A vertex bijection `a -> b` together with a matching edge bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

pub fn canonize(g: &Multigraph) -> Canon {
    canonize_coloured(g, &vec![0; g.vertex_count()])
}

/// Canonical labelling respecting a vertex colouring. Colour classes keep
/// their relative order, so label ranges are fixed per colour.
pub fn canonize_coloured(g: &Multigraph, colours: &[usize]) -> Canon {
    assert_eq!(colours.len(), g.vertex_count());
    let mut search = Search::new(g);
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (colours[v], v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(c) if colours[c[0]] == colours[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let cells = search.refine(cells);
    search.descend(cells, &mut Vec::new());
    let (edges, labeling) = search.best.expect("search visits at least one leaf");

    let coloured = colours.iter().any(|&c| c != 0);
    let mut bytes = Vec::with_capacity(8 + 8 * edges.len());
    bytes.extend_from_slice(&(g.vertex_count() as u32).to_be_bytes());
    bytes.extend_from_slice(&(g.edge_count() as u32).to_be_bytes());
    for (u, v) in edges {
        bytes.extend_from_slice(&u.to_be_bytes());
        bytes.extend_from_slice(&v.to_be_bytes());
    }
    if coloured {
        let mut by_label = vec![0usize; g.vertex_count()];
        for v in 0..g.vertex_count() {
            by_label[labeling[v]] = colours[v];
        }
        for c in by_label {
            bytes.extend_from_slice(&(c as u32).to_be_bytes());
        }
    }
    Canon {
        labeling,
        form: CanonicalForm(bytes),
    }
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    canonize(g).form
}

pub fn is_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

/// An explicit isomorphism `a -> b`, checked edge by edge before it is
/// returned.
pub fn find_isomorphism(a: &Multigraph, b: &Multigraph) -> Option<Isomorphism> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let ca = canonize(a);
    let cb = canonize(b);
    if ca.form != cb.form {
        return None;
    }
    let mut inv_b = vec![0usize; b.vertex_count()];
    for (v, &l) in cb.labeling.iter().enumerate() {
        inv_b[l] = v;
    }
    let vertex_map: Vec<usize> = ca.labeling.iter().map(|&l| inv_b[l]).collect();

    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut pool: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (f, &(u, v)) in b.edges().iter().enumerate().rev() {
        pool.entry(key(u, v)).or_default().push(f);
    }
    let mut edge_map = Vec::with_capacity(a.edge_count());
    for &(u, v) in a.edges() {
        let f = pool.get_mut(&key(vertex_map[u], vertex_map[v]))?.pop()?;
        edge_map.push(f);
    }
    let iso = Isomorphism {
        vertex_map,
        edge_map,
    };
    verify_isomorphism(a, b, &iso).then_some(iso)
}

pub fn verify_isomorphism(a: &Multigraph, b: &Multigraph, iso: &Isomorphism) -> bool {
    let n = a.vertex_count();
    if b.vertex_count() != n
        || b.edge_count() != a.edge_count()
        || iso.vertex_map.len() != n
        || iso.edge_map.len() != a.edge_count()
    {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in &iso.vertex_map {
        if w >= n || std::mem::replace(&mut hit[w], true) {
            return false;
        }
    }
    let mut hit = vec![false; b.edge_count()];
    for (e, &f) in iso.edge_map.iter().enumerate() {
        if f >= b.edge_count() || std::mem::replace(&mut hit[f], true) {
            return false;
        }
        let (u, v) = a.endpoints(e);
        let (x, y) = b.endpoints(f);
        let (mu, mv) = (iso.vertex_map[u], iso.vertex_map[v]);
        if !((mu == x && mv == y) || (mu == y && mv == x)) {
            return false;
        }
    }
    true
}

/// Orbit representative (smallest member) of every vertex under `Aut(g)`.
pub fn vertex_orbits(g: &Multigraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut rep = vec![usize::MAX; n];
    let mut seen: HashMap<CanonicalForm, usize> = HashMap::new();
    let colours_base = vec![1usize; n];
    for v in 0..n {
        let mut colours = colours_base.clone();
        colours[v] = 0;
        let form = canonize_coloured(g, &colours).form;
        rep[v] = *seen.entry(form).or_insert(v);
    }
    rep
}

/// Canonical form of `g` rooted at `root`.
pub fn rooted_form(g: &Multigraph, root: usize) -> CanonicalForm {
    let mut colours = vec![1usize; g.vertex_count()];
    colours[root] = 0;
    canonize_coloured(g, &colours).form
}

type EdgeList = Vec<(u32, u32)>;

struct Search {
    n: usize,
    nbrs: Vec<Vec<(usize, usize)>>,
    edges: Vec<(usize, usize)>,
    best: Option<(EdgeList, Vec<usize>)>,
    best_inv: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl Search {
    fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut nbrs = Vec::with_capacity(n);
        for v in 0..n {
            let mut ws: Vec<usize> = g.incident(v).iter().map(|&e| g.opposite(e, v)).collect();
            ws.sort_unstable();
            let mut grouped: Vec<(usize, usize)> = Vec::new();
            for w in ws {
                match grouped.last_mut() {
                    Some((x, k)) if *x == w => *k += 1,
                    _ => grouped.push((w, 1)),
                }
            }
            nbrs.push(grouped);
        }
        Search {
            n,
            nbrs,
            edges: g.edges().to_vec(),
            best: None,
            best_inv: Vec::new(),
            generators: Vec::new(),
        }
    }

    /// Coarsest equitable refinement; sub-cells are ordered by signature.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let mut cell_of = vec![0usize; self.n];
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<(usize, usize)>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig: Vec<(usize, usize)> =
                            self.nbrs[v].iter().map(|&(w, k)| (cell_of[w], k)).collect();
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let start = next.len();
                let mut prev: Option<&Vec<(usize, usize)>> = None;
                for (sig, v) in &keyed {
                    if prev != Some(sig) {
                        next.push(Vec::new());
                        prev = Some(sig);
                    }
                    next.last_mut().unwrap().push(*v);
                }
                changed |= next.len() - start > 1;
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !tried.is_empty() && self.same_orbit(prefix, &tried, v) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            let child = self.refine(child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            tried.push(v);
        }
    }

    fn same_orbit(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.generators {
            if prefix.iter().all(|&p| g[p] == p) {
                any = true;
                for x in 0..self.n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut lab = vec![0usize; self.n];
        for (i, c) in cells.iter().enumerate() {
            lab[c[0]] = i;
        }
        let mut edges: EdgeList = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (lab[u] as u32, lab[v] as u32);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        match &self.best {
            Some((best, _)) if edges > *best => {}
            Some((best, _)) if edges == *best => {
                let gamma: Vec<usize> = lab.iter().map(|&l| self.best_inv[l]).collect();
                if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                    self.generators.push(gamma);
                }
            }
            _ => {
                let mut inv = vec![0usize; self.n];
                for (v, &l) in lab.iter().enumerate() {
                    inv[l] = v;
                }
                self.best_inv = inv;
                self.best = Some((edges, lab));
            }
        }
    }
}
