mod common;

use std::collections::BTreeSet;

use linkroot::canon::vertex_orbits;
use linkroot::construct::{link_graph, path_graph};
use linkroot::incidence::{is_l_minimal, is_l_path_minimal};
use linkroot::search::{attach_tail, audit_root, write_root_set, ROOTS_INDEX};
use linkroot::walk::count_links;
use linkroot::{
    canonical_form, find_isomorphism, is_isomorphic, minimal_link_roots, minimal_path_roots, Multigraph,
    SearchOptions,
};

use common::forms;

fn graph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edges(n, edges).unwrap()
}

#[test]
fn three_path_roots_of_four_cycle() {
    let c4 = Multigraph::cycle(4);
    let set = minimal_path_roots(&c4, 3, &SearchOptions::default()).unwrap();
    let two_digons_joined = graph(5, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (3, 4)]);
    let h_tree = graph(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]);
    let claw_with_digon = graph(6, &[(0, 3), (1, 3), (2, 3), (2, 4), (4, 5), (4, 5)]);
    let expected = forms(&[c4.clone(), two_digons_joined, h_tree, claw_with_digon]);
    assert_eq!(set.forms().into_iter().collect::<BTreeSet<_>>(), expected);
    assert_eq!(set.roots.iter().filter(|r| !r.graph.is_forest()).count(), 3);
}

#[test]
fn two_triangles_joined_by_a_path_is_not_a_root() {
    let g = graph(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]);
    assert!(count_links(&g, 3) > 4);
    let p = path_graph(&g, 3).unwrap().graph;
    assert!(p.vertex_count() > 4);
    assert!(!is_isomorphic(&p, &Multigraph::cycle(4)));
}

#[test]
fn digon_construction_gives_path_roots_of_cycles() {
    for s in 1..=2 {
        for ell in 2 * s + 1..=2 * s + 2 {
            let mut g = Multigraph::cycle(s + 1);
            let mut other = Multigraph::cycle(s + 1);
            let n = g.vertex_count();
            g = g.disjoint_union(&Multigraph::new(ell - s - 1));
            let mut prev = 0;
            for k in 0..ell - s - 1 {
                g.add_edge(prev, n + k).unwrap();
                prev = n + k;
            }
            let base = g.vertex_count();
            g = g.disjoint_union(&std::mem::replace(&mut other, Multigraph::new(0)));
            g.add_edge(prev, base).unwrap();
            assert!(is_l_path_minimal(&g, ell), "s = {s}, l = {ell}");
            let p = path_graph(&g, ell).unwrap().graph;
            assert!(is_isomorphic(&p, &Multigraph::cycle(4 * s)), "s = {s}, l = {ell}");
        }
    }
}

fn double_star(p: usize, q: usize) -> Multigraph {
    let mut g = Multigraph::new(2 + p + q);
    g.add_edge(0, 1).unwrap();
    for i in 0..p {
        g.add_edge(0, 2 + i).unwrap();
    }
    for j in 0..q {
        g.add_edge(1, 2 + p + j).unwrap();
    }
    g
}

#[test]
fn double_star_has_four_tail_attachments() {
    for (p, q) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
        let t = double_star(p, q);
        let orbits = vertex_orbits(&t);
        let reps: BTreeSet<usize> = orbits.iter().copied().collect();
        assert_eq!(reps.len(), 4, "p = {p}, q = {q}");
        for ell in 3..=5 {
            let attached: BTreeSet<_> = (0..t.vertex_count())
                .map(|v| canonical_form(&attach_tail(&t, v, ell).unwrap()))
                .collect();
            assert_eq!(attached.len(), 4, "p = {p}, q = {q}, l = {ell}");
        }
        for v in 0..t.vertex_count() {
            let g = attach_tail(&t, v, 4).unwrap();
            assert!(is_isomorphic(&link_graph(&g, 4).unwrap().graph, &t));
        }
    }
}

#[test]
fn every_root_is_sound() {
    let targets = [
        (Multigraph::cycle(5), 1),
        (Multigraph::cycle(6), 2),
        (Multigraph::path(3), 2),
        (Multigraph::star(3), 1),
        (Multigraph::cycle(2), 1),
        (Multigraph::cycle(4), 3),
        (graph(4, &[(0, 1), (2, 3)]), 2),
    ];
    for (h, ell) in targets {
        for path in [false, true] {
            let set = if path {
                minimal_path_roots(&h, ell, &SearchOptions::default())
            } else {
                minimal_link_roots(&h, ell, &SearchOptions::default())
            }
            .unwrap();
            for r in &set.roots {
                let built = if path { path_graph(&r.graph, ell) } else { link_graph(&r.graph, ell) }
                    .unwrap()
                    .graph;
                let iso = find_isomorphism(&built, &h).expect("root reproduces the target");
                for (e, &(u, v)) in built.edges().iter().enumerate() {
                    let (a, b) = h.endpoints(iso.edge_map[e]);
                    let (x, y) = (iso.vertex_map[u], iso.vertex_map[v]);
                    assert!((a, b) == (x, y) || (a, b) == (y, x));
                }
                if path {
                    assert!(is_l_path_minimal(&r.graph, ell));
                } else {
                    assert!(is_l_minimal(&r.graph, ell));
                    assert!(audit_root(&r.graph, &h, ell).is_empty());
                }
            }
        }
    }
}

#[test]
fn filters_select_by_shape() {
    let c6 = Multigraph::cycle(6);
    let all = minimal_link_roots(&c6, 2, &SearchOptions::default()).unwrap();
    let trees = minimal_link_roots(
        &c6,
        2,
        &SearchOptions {
            trees_only: true,
            ..SearchOptions::default()
        },
    )
    .unwrap();
    assert_eq!(all.len(), 2);
    assert_eq!(trees.len(), 1);
    assert!(trees.roots[0].graph.is_tree());

    let two = graph(4, &[(0, 1), (0, 1), (2, 3), (2, 3)]);
    let split = minimal_link_roots(&two, 1, &SearchOptions::default()).unwrap();
    let joined = minimal_link_roots(
        &two,
        1,
        &SearchOptions {
            connected_only: true,
            ..SearchOptions::default()
        },
    )
    .unwrap();
    assert!(joined.roots.iter().all(|r| r.graph.is_connected()));
    assert!(joined.len() < split.len());
}

#[test]
fn search_output_is_deterministic() {
    let h = Multigraph::cycle(6);
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for d in &dirs {
        let set = minimal_link_roots(&h, 2, &SearchOptions::default()).unwrap();
        let sorted: Vec<_> = {
            let mut f = set.forms();
            f.sort();
            f
        };
        assert_eq!(set.forms(), sorted);
        write_root_set(&set, d.path()).unwrap();
    }
    let listing = |p: &std::path::Path| {
        let mut names: Vec<_> = std::fs::read_dir(p).unwrap().map(|e| e.unwrap().file_name()).collect();
        names.sort();
        names
    };
    assert_eq!(listing(dirs[0].path()), listing(dirs[1].path()));
    for name in listing(dirs[0].path()) {
        let a = std::fs::read(dirs[0].path().join(&name)).unwrap();
        let b = std::fs::read(dirs[1].path().join(&name)).unwrap();
        assert_eq!(a, b, "{name:?}");
    }
    let index = std::fs::read_to_string(dirs[0].path().join(ROOTS_INDEX)).unwrap();
    assert_eq!(index.lines().count(), 3);
    for line in index.lines().skip(1) {
        let file = line.split('\t').nth(4).unwrap();
        let g = Multigraph::read(&dirs[0].path().join(file)).unwrap();
        assert_eq!(canonical_form(&g).to_hex(), line.split('\t').next().unwrap());
    }
}
