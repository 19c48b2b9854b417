use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use linkroot::{canonical_form, is_isomorphic, Multigraph, PartitionedGraph};
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linkroot"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, g: &Multigraph) -> PathBuf {
    let p = dir.join(name);
    g.write(&p).unwrap();
    p
}

fn chord() -> Multigraph {
    let mut g = Multigraph::path(4);
    g.add_edge(1, 3).unwrap();
    g
}

fn workspace() -> TempDir {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "k13.mg", &Multigraph::star(3));
    write(d.path(), "c6.mg", &Multigraph::cycle(6));
    write(d.path(), "chord.mg", &chord());
    d
}

#[test]
fn link_of_claw_is_triangle() {
    let d = workspace();
    let o = run(d.path(), &["link", "-l", "1", "k13.mg"]);
    assert_eq!(o.status.code(), Some(0));
    let g = Multigraph::parse(&stdout(&o)).unwrap();
    assert!(is_isomorphic(&g, &Multigraph::complete(3)));
}

#[test]
fn chord_graph_is_four_minimal() {
    let d = workspace();
    let o = run(d.path(), &["minimal", "-l", "4", "chord.mg"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "minimal\n");

    let o = run(d.path(), &["minimal", "-l", "4", "--path", "chord.mg"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not minimal: "));

    let o = run(d.path(), &["minimal", "-l", "3", "k13.mg"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not minimal: vertex 0\n");
}

#[test]
fn hexagon_roots_are_written() {
    let d = workspace();
    let o = run(d.path(), &["roots", "-l", "2", "c6.mg", "--out-dir", "out"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = d.path().join("out");
    let index = std::fs::read_to_string(out.join("roots.tsv")).unwrap();
    let rows: Vec<&str> = index.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    let mut found = Vec::new();
    for row in rows {
        let cols: Vec<&str> = row.split('\t').collect();
        let g = Multigraph::read(&out.join(cols[4])).unwrap();
        assert_eq!(canonical_form(&g).to_hex(), cols[0]);
        assert!(out.join(cols[5]).exists());
        found.push(g);
    }
    let spider = linkroot::metrics::subdivision(&Multigraph::star(3), 2);
    assert!(found.iter().any(|g| is_isomorphic(g, &Multigraph::cycle(6))));
    assert!(found.iter().any(|g| is_isomorphic(g, &spider)));
}

#[test]
fn equivalence_and_canon() {
    let d = workspace();
    write(d.path(), "k13b.mg", &Multigraph::from_edges(4, &[(3, 0), (3, 1), (3, 2)]).unwrap());
    write(d.path(), "empty.mg", &Multigraph::new(0));
    let a = run(d.path(), &["canon", "k13.mg"]);
    let b = run(d.path(), &["canon", "k13b.mg"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).trim(), canonical_form(&Multigraph::star(3)).to_hex());

    let o = run(d.path(), &["equiv", "-l", "3", "k13.mg", "empty.mg"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "equivalent\n"));
    let o = run(d.path(), &["equiv", "-l", "2", "k13.mg", "empty.mg"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "not equivalent\n"));
}

#[test]
fn incidence_output_reparses() {
    let d = workspace();
    let o = run(d.path(), &["incidence", "-l", "3", "k13.mg"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# v 0 0\n") && text.contains("# e 2 0\n"));
    assert!(Multigraph::parse(&text).unwrap().is_null());
}

#[test]
fn link_side_outputs() {
    let d = workspace();
    let o = run(
        d.path(),
        &[
            "link", "-l", "2", "c6.mg", "-o", "l.mg", "--dot", "l.dot", "--partitions", "l.parts",
            "--provenance", "prov",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let g = Multigraph::read(&d.path().join("l.mg")).unwrap();
    assert!(is_isomorphic(&g, &Multigraph::cycle(6)));
    let h = PartitionedGraph::read_partitions(g.clone(), &d.path().join("l.parts")).unwrap();
    assert_eq!(h.edge_parts.len(), 6);
    let dot = std::fs::read_to_string(d.path().join("l.dot")).unwrap();
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches(" -- ").count(), 6);
    let vertices = std::fs::read_to_string(d.path().join("prov.vertices.tsv")).unwrap();
    assert_eq!(vertices.lines().count(), 6);
    let edges = std::fs::read_to_string(d.path().join("prov.edges.tsv")).unwrap();
    assert_eq!(edges.lines().count(), 6);
}

#[test]
fn analyze_reports_census() {
    let d = workspace();
    let o = run(d.path(), &["analyze", "-l", "2", "k13.mg"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let field = |k: &str| {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{k}\t")))
            .unwrap_or_else(|| panic!("missing {k}"))
            .to_string()
    };
    assert_eq!(field("diameter"), "2");
    assert_eq!(field("girth"), "inf");
    assert_eq!(field("degree_set"), "{2}");
    assert_eq!(field("partitioned_cyclic"), "0");
    assert_eq!(field("link_m"), "0");
    assert_eq!(field("partitioned_acyclic"), "3");
}

#[test]
fn expand_applies_recipe() {
    let d = workspace();
    write(d.path(), "p4.mg", &Multigraph::path(4));
    write(d.path(), "claw.mg", &Multigraph::star(3));
    write(d.path(), "p3.mg", &Multigraph::path(3));
    std::fs::write(d.path().join("recipe.txt"), "paste 0 2 claw.mg\nadd p3.mg\n").unwrap();
    let o = run(d.path(), &["expand", "-l", "4", "p4.mg", "recipe.txt"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let y = Multigraph::parse(&stdout(&o)).unwrap();
    assert_eq!(y.vertex_count(), 12);
    write(d.path(), "y.mg", &y);
    let back = run(d.path(), &["incidence", "-l", "4", "y.mg"]);
    let core = Multigraph::parse(&stdout(&back)).unwrap();
    assert!(is_isomorphic(&core, &Multigraph::path(4)));
}

#[test]
fn errors_map_to_exit_codes() {
    let d = workspace();
    std::fs::write(d.path().join("bad.mg"), "mg 1\nn 2\ne 0 1\ne 1 1\n").unwrap();
    let o = run(d.path(), &["canon", "bad.mg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));

    let o = run(d.path(), &["canon", "missing.mg"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(d.path(), &["link", "k13.mg"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(d.path(), &["roots", "-l", "2", "c6.mg", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(d.path(), &["link", "-l", "3", "c6.mg", "--max-links", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));

    write(d.path(), "big.mg", &Multigraph::cycle(20));
    let o = run(d.path(), &["roots", "-l", "4", "big.mg"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn outputs_are_deterministic_and_reparse() {
    let d = workspace();
    for args in [
        vec!["link", "-l", "2", "chord.mg"],
        vec!["pathgraph", "-l", "2", "chord.mg"],
        vec!["incidence", "-l", "4", "chord.mg"],
        vec!["analyze", "-l", "1", "chord.mg"],
        vec!["roots", "-l", "1", "k13.mg", "--out-dir", "r"],
    ] {
        let a = run(d.path(), &args);
        let b = run(d.path(), &args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        if matches!(args[0], "link" | "pathgraph" | "incidence") {
            let g = Multigraph::parse(&stdout(&a)).unwrap();
            let again = Multigraph::parse(&g.to_text()).unwrap();
            assert_eq!(g, again);
        }
    }
    for entry in std::fs::read_dir(d.path().join("r")).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|e| e == "mg") {
            let text = std::fs::read_to_string(&p).unwrap();
            assert_eq!(Multigraph::parse(&text).unwrap().to_text(), text);
        }
    }
}
