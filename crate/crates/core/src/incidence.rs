//! ℓ-incidence, the incidence subgraph `G[ℓ]`, minimality and equivalence.

use std::fmt;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, Subgraph};
use crate::metrics::{bfs, metrics};
use crate::tree::{edge_reach, forest_eccentricities, reach_from};
use crate::walk::{closed_subwalk_girth, enumerate_links, visit_links, Link};
use crate::Dist;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    Vertex(usize),
    Edge(usize),
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Vertex(v) => write!(f, "vertex {v}"),
            Unit::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

/// Per-unit ℓ-incidence flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceFlags {
    pub vertex: Vec<bool>,
    pub edge: Vec<bool>,
}

impl IncidenceFlags {
    pub fn all(&self) -> bool {
        self.vertex.iter().chain(&self.edge).all(|&b| b)
    }

    pub fn first_missing(&self) -> Option<Unit> {
        if let Some(v) = self.vertex.iter().position(|&b| !b) {
            return Some(Unit::Vertex(v));
        }
        self.edge.iter().position(|&b| !b).map(Unit::Edge)
    }
}

/// Fast incidence test: cyclic components are wholly incident; tree
/// components use eccentricities inside the splits `T_u^e`.
pub fn incidence_flags(g: &Multigraph, ell: usize) -> IncidenceFlags {
    let n = g.vertex_count();
    let m = g.edge_count();
    if ell == 0 {
        return IncidenceFlags {
            vertex: vec![true; n],
            edge: vec![true; m],
        };
    }
    let (label, count) = g.component_labels();
    let mut nv = vec![0usize; count];
    let mut ne = vec![0usize; count];
    for &c in &label {
        nv[c] += 1;
    }
    for &(u, _) in g.edges() {
        ne[label[u]] += 1;
    }
    let cyclic: Vec<bool> = (0..count).map(|c| ne[c] >= nv[c]).collect();

    let mut vertex: Vec<bool> = (0..n).map(|v| cyclic[label[v]]).collect();
    let mut edge: Vec<bool> = g.edges().iter().map(|&(u, _)| cyclic[label[u]]).collect();

    let keep_v: Vec<bool> = (0..n).map(|v| !cyclic[label[v]]).collect();
    let keep_e: Vec<bool> = g.edges().iter().map(|&(u, _)| !cyclic[label[u]]).collect();
    let forest = g.subgraph(&keep_v, &keep_e);
    let f = &forest.graph;
    let reach = edge_reach(f);
    let mut local = vec![false; f.vertex_count()];
    for (x, flag) in local.iter_mut().enumerate() {
        let mut top = [0usize; 2];
        for &e in f.incident(x) {
            let h = reach_from(f, &reach, e, x);
            if h > top[0] {
                top = [h, top[0]];
            } else if h > top[1] {
                top[1] = h;
            }
        }
        *flag = top[0] >= ell || (top[1] > 0 && top[0] + top[1] >= ell);
    }
    for v in 0..n {
        if let Some(x) = forest.vertex_map[v] {
            vertex[v] = local[x];
        }
    }
    for e in 0..m {
        if forest.edge_map[e].is_some() {
            let (a, b) = g.endpoints(e);
            edge[e] = vertex[a] && vertex[b];
        }
    }
    IncidenceFlags { vertex, edge }
}

/// Reference test straight from the definition: mark every unit of every
/// ℓ-link. `G[0] = G`, so at ℓ = 0 every unit counts.
pub fn incidence_flags_brute(g: &Multigraph, ell: usize) -> IncidenceFlags {
    if ell == 0 {
        return IncidenceFlags {
            vertex: vec![true; g.vertex_count()],
            edge: vec![true; g.edge_count()],
        };
    }
    let mut vertex = vec![false; g.vertex_count()];
    let mut edge = vec![false; g.edge_count()];
    let _ = visit_links(g, ell, false, |seq| {
        for (i, &x) in seq.iter().enumerate() {
            if i % 2 == 0 {
                vertex[x] = true;
            } else {
                edge[x] = true;
            }
        }
        ControlFlow::Continue(())
    });
    IncidenceFlags { vertex, edge }
}

/// Units lying on some ℓ-path.
///
/// At ℓ = 0 every vertex counts, and of each bundle of parallel edges only
/// the first, since `ℙ_0(G)` is `G` with parallel edges merged.
pub fn path_incidence_flags(g: &Multigraph, ell: usize) -> IncidenceFlags {
    if ell == 0 {
        return IncidenceFlags {
            vertex: vec![true; g.vertex_count()],
            edge: g
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| g.edges_between(u, v)[0] == e)
                .collect(),
        };
    }
    let mut vertex = vec![false; g.vertex_count()];
    let mut edge = vec![false; g.edge_count()];
    let _ = visit_links(g, ell, true, |seq| {
        for (i, &x) in seq.iter().enumerate() {
            if i % 2 == 0 {
                vertex[x] = true;
            } else {
                edge[x] = true;
            }
        }
        ControlFlow::Continue(())
    });
    IncidenceFlags { vertex, edge }
}

/// Every unit lies on an ℓ-path.
pub fn is_l_path_minimal(g: &Multigraph, ell: usize) -> bool {
    path_incidence_flags(g, ell).all()
}

fn check_unit(g: &Multigraph, unit: Unit) -> Result<()> {
    match unit {
        Unit::Vertex(v) => g.check_vertex(v),
        Unit::Edge(e) => g.check_edge(e),
    }
}

pub fn is_unit_l_incident(g: &Multigraph, unit: Unit, ell: usize) -> Result<bool> {
    check_unit(g, unit)?;
    let flags = incidence_flags(g, ell);
    Ok(match unit {
        Unit::Vertex(v) => flags.vertex[v],
        Unit::Edge(e) => flags.edge[e],
    })
}

/// Some ℓ-link through `unit`, if any.
pub fn incidence_witness(g: &Multigraph, unit: Unit, ell: usize) -> Result<Option<Link>> {
    check_unit(g, unit)?;
    let mut found = None;
    let _ = visit_links(g, ell, false, |seq| {
        let hit = match unit {
            Unit::Vertex(v) => seq.iter().step_by(2).any(|&x| x == v),
            Unit::Edge(e) => seq.iter().skip(1).step_by(2).any(|&x| x == e),
        };
        if hit {
            found = Some(Link::from_seq(seq));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

#[derive(Clone, Debug)]
pub struct IncidenceReport {
    pub ell: usize,
    pub flags: IncidenceFlags,
    /// `G[ℓ]` with maps from the units of `G`.
    pub subgraph: Subgraph,
}

impl IncidenceReport {
    pub fn graph(&self) -> &Multigraph {
        &self.subgraph.graph
    }
}

pub fn incidence_subgraph(g: &Multigraph, ell: usize) -> IncidenceReport {
    let flags = incidence_flags(g, ell);
    let subgraph = g.subgraph(&flags.vertex, &flags.edge);
    IncidenceReport {
        ell,
        flags,
        subgraph,
    }
}

pub fn is_l_minimal(g: &Multigraph, ell: usize) -> bool {
    incidence_flags(g, ell).all()
}

/// `X ~ℓ Y`, decided as `X[ℓ] ≅ Y[ℓ]`.
pub fn is_l_equivalent(x: &Multigraph, y: &Multigraph, ell: usize) -> bool {
    is_isomorphic(incidence_subgraph(x, ell).graph(), incidence_subgraph(y, ell).graph())
}

/// `i_G(L, s)` for every ℓ-link and the total `i_G(ℓ, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidencePairs {
    pub per_link: Vec<(Link, usize, Dist)>,
    pub total: usize,
}

/// Counts distinct `s`-sublinks of every ℓ-link, together with the girth of
/// the projected `(ℓ-s)`-link `L^[s]`.
pub fn count_incidence_pairs(g: &Multigraph, ell: usize, s: usize) -> Result<IncidencePairs> {
    if s > ell {
        return Err(Error::LengthOrder { s, ell });
    }
    let mut per_link = Vec::new();
    let mut total = 0;
    for l in enumerate_links(g, ell) {
        let arc = l.arc();
        let subs: Vec<Link> = (0..=ell - s).map(|i| arc.sub(i, i + s).link()).collect();
        let mut distinct = subs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let girth = closed_subwalk_girth(&subs);
        total += distinct.len();
        per_link.push((l, distinct.len(), girth));
    }
    Ok(IncidencePairs { per_link, total })
}

/// A rooted tree pasted onto `vertex` of component `component`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Paste {
    pub component: usize,
    pub vertex: usize,
    /// Rooted at vertex 0.
    pub tree: Multigraph,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpansionRecipe {
    pub pastes: Vec<Paste>,
    pub additions: Vec<Multigraph>,
}

impl ExpansionRecipe {
    /// Lines `paste <component> <vertex> <tree-file>` and `add <tree-file>`;
    /// tree paths are resolved against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let mut recipe = ExpansionRecipe::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            let words: Vec<&str> = line.split_whitespace().collect();
            let load = |name: &str| -> Result<Multigraph> {
                let p: PathBuf = base.join(name);
                Multigraph::read(&p)
            };
            match words.as_slice() {
                ["paste", c, v, file] => {
                    let component = c.parse().map_err(|_| err(format!("bad component `{c}`")))?;
                    let vertex = v.parse().map_err(|_| err(format!("bad vertex `{v}`")))?;
                    recipe.pastes.push(Paste {
                        component,
                        vertex,
                        tree: load(file)?,
                    });
                }
                ["add", file] => recipe.additions.push(load(file)?),
                _ => return Err(err(format!("expected `paste C V FILE` or `add FILE`, found `{line}`"))),
            }
        }
        Ok(recipe)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Self::parse(&text, base)
    }
}

/// Grows an ℓ-minimal `g` inside its ℓ-equivalence class. Bounds are checked
/// against the components of `g` as given, before any paste.
pub fn expand_class(g: &Multigraph, ell: usize, recipe: &ExpansionRecipe) -> Result<Multigraph> {
    if !is_l_minimal(g, ell) {
        return Err(Error::NotMinimal { ell });
    }
    let gm = metrics(g);
    let mut out = g.clone();
    for (k, p) in recipe.pastes.iter().enumerate() {
        let bad = |what: String| Error::Recipe(format!("paste {k}: {what}"));
        if p.component >= gm.components {
            return Err(bad(format!("component {} does not exist", p.component)));
        }
        g.check_vertex(p.vertex)?;
        if gm.component_of[p.vertex] != p.component {
            return Err(bad(format!("vertex {} is not in component {}", p.vertex, p.component)));
        }
        if gm.component_cyclic[p.component] {
            return Err(bad("target component is cyclic".into()));
        }
        let d = gm.component_diameter[p.component];
        if ell < 4 || d < ell || d > 2 * ell - 4 {
            return Err(bad(format!("component diameter {d} is outside [l, 2l-4] for l = {ell}")));
        }
        let dist = bfs(g, p.vertex);
        let s = dist.iter().copied().filter(|&x| x != usize::MAX).max().unwrap_or(0);
        if s < ell.div_ceil(2) || s + 2 > ell {
            return Err(bad(format!("eccentricity {s} is outside [ceil(l/2), l-2] for l = {ell}")));
        }
        if !p.tree.is_tree() {
            return Err(bad("pasted graph is not a tree".into()));
        }
        let height = bfs(&p.tree, 0).into_iter().max().unwrap_or(0);
        if height + s + 1 > ell {
            return Err(bad(format!("tree height {height} exceeds l - s - 1 = {}", ell - s - 1)));
        }
        let mut map = vec![p.vertex; p.tree.vertex_count()];
        for slot in map.iter_mut().skip(1) {
            *slot = out.add_vertex();
        }
        for &(a, b) in p.tree.edges() {
            out.push_edge_unchecked(map[a], map[b]);
        }
    }
    for (k, t) in recipe.additions.iter().enumerate() {
        if !t.is_forest() {
            return Err(Error::Recipe(format!("addition {k}: not acyclic")));
        }
        let ecc = forest_eccentricities(t);
        if let Some(&d) = ecc.iter().max() {
            if d + 1 > ell {
                return Err(Error::Recipe(format!(
                    "addition {k}: component diameter {d} exceeds l - 1 = {}",
                    ell as isize - 1
                )));
            }
        }
        out = out.disjoint_union(t);
    }
    if !is_l_equivalent(&out, g, ell) {
        return Err(Error::Internal("expanded graph left the equivalence class".into()));
    }
    Ok(out)
}
