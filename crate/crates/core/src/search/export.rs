//! On-disk layout of a root set: one graph file and one witness file per
//! root, plus the `roots.tsv` index.

use std::fmt::Write as _;
use std::path::Path;

use crate::construct::EdgeProvenance;
use crate::error::{Error, Result};

use super::{Root, RootSet};

pub const ROOTS_INDEX: &str = "roots.tsv";

fn witness_text(root: &Root) -> String {
    let c = &root.construction;
    let mut s = String::from("# unit\tlink-graph id\ttarget id\tsource\n");
    for (i, l) in c.vertex_links.iter().enumerate() {
        let _ = writeln!(s, "v\t{i}\t{}\t{}", root.witness.vertex_map[i], l.render());
    }
    match &c.edge_provenance {
        EdgeProvenance::Links(ls) => {
            for (i, l) in ls.iter().enumerate() {
                let _ = writeln!(s, "e\t{i}\t{}\t{}", root.witness.edge_map[i], l.render());
            }
        }
        EdgeProvenance::Pairs(ps) => {
            for (i, (a, b)) in ps.iter().enumerate() {
                let _ = writeln!(s, "e\t{i}\t{}\t{a},{b}", root.witness.edge_map[i]);
            }
        }
    }
    s
}

/// Writes `root_NNN.mg`, `root_NNN.witness.tsv` and `roots.tsv` into `dir`.
pub fn write_root_set(set: &RootSet, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut index = String::from("canon\tn\tm\tkind\tgraph\twitness\n");
    for (i, root) in set.roots.iter().enumerate() {
        let graph_name = format!("root_{i:03}.mg");
        let witness_name = format!("root_{i:03}.witness.tsv");
        root.graph.write(&dir.join(&graph_name))?;
        let wp = dir.join(&witness_name);
        std::fs::write(&wp, witness_text(root)).map_err(|e| Error::io(&wp, e))?;
        let _ = writeln!(
            index,
            "{}\t{}\t{}\t{}\t{graph_name}\t{witness_name}",
            root.form.to_hex(),
            root.graph.vertex_count(),
            root.graph.edge_count(),
            root.kind.as_str()
        );
    }
    let ip = dir.join(ROOTS_INDEX);
    std::fs::write(&ip, index).map_err(|e| Error::io(&ip, e))
}
