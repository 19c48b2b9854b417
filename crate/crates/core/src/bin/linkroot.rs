use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use linkroot::construct::{
    link_graph_capped, link_partitions, partitioned_link_graph_capped, path_graph_capped, LinkGraphResult,
    DEFAULT_LINK_CAP,
};
use linkroot::dot::{link_graph_dot, to_dot};
use linkroot::incidence::{expand_class, incidence_flags, path_incidence_flags, ExpansionRecipe};
use linkroot::partition::{count_cyclic_components, graph_degree_set};
use linkroot::search::write_root_set;
use linkroot::{
    canonical_form, incidence_subgraph, is_l_equivalent, metrics, minimal_link_roots, minimal_path_roots, Error,
    Multigraph, SearchOptions,
};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "linkroot", version, about = "Link graphs, path graphs and minimal roots of multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Link length.
    #[arg(short = 'l', long = "ell")]
    ell: usize,
    /// Input multigraph (`-` for stdin).
    input: PathBuf,
}

#[derive(Args)]
struct Output {
    /// Write the resulting graph here instead of stdout.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// Also write a DOT rendering.
    #[arg(long, value_name = "FILE")]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the ℓ-link graph.
    Link {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        out: Output,
        /// Write the vertex and edge partitions here.
        #[arg(long, value_name = "FILE")]
        partitions: Option<PathBuf>,
        /// Write PREFIX.vertices.tsv and PREFIX.edges.tsv.
        #[arg(long, value_name = "PREFIX")]
        provenance: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_LINK_CAP)]
        max_links: usize,
    },
    /// Construct the ℓ-path graph.
    Pathgraph {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        out: Output,
        #[arg(long, value_name = "PREFIX")]
        provenance: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_LINK_CAP)]
        max_links: usize,
    },
    /// Print G[ℓ], preceded by one comment line per unit of G.
    Incidence {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        out: Output,
    },
    /// Decide ℓ-minimality (or ℓ-path-minimality with --path).
    Minimal {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        path: bool,
    },
    /// Decide ℓ-equivalence of two graphs.
    Equiv {
        #[arg(short = 'l', long = "ell")]
        ell: usize,
        first: PathBuf,
        second: PathBuf,
    },
    /// Grow an ℓ-minimal graph inside its class.
    Expand {
        #[command(flatten)]
        common: Common,
        recipe: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Metrics, degree sets and the component census of the partitioned link graph.
    Analyze {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_LINK_CAP)]
        max_links: usize,
    },
    /// Enumerate minimal ℓ-roots (or ℓ-path-roots with --path).
    Roots {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        path: bool,
        #[arg(long, conflicts_with = "forests_only")]
        trees_only: bool,
        #[arg(long)]
        forests_only: bool,
        #[arg(long)]
        connected_only: bool,
        /// Wall-clock budget in seconds.
        #[arg(long, value_parser = parse_budget)]
        budget: Option<Duration>,
        #[arg(long, default_value = "roots")]
        out_dir: PathBuf,
    },
    /// Print the canonical form as hex.
    Canon { input: PathBuf },
}

fn parse_budget(s: &str) -> Result<Duration, String> {
    let secs: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !(secs > 0.0 && secs.is_finite()) {
        return Err("budget must be positive".into());
    }
    Ok(Duration::from_secs_f64(secs))
}

enum Outcome {
    Yes,
    No,
}

fn read_graph(path: &Path) -> linkroot::Result<Multigraph> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidArgument(format!("stdin: {e}")))?;
        return Multigraph::parse(&text).map_err(|e| Error::InvalidArgument(format!("stdin: {e}")));
    }
    Multigraph::read(path).map_err(|e| match e {
        Error::Parse { .. } => Error::InvalidArgument(format!("{}: {e}", path.display())),
        other => other,
    })
}

fn write_file(path: &Path, body: &str) -> linkroot::Result<()> {
    std::fs::write(path, body).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn emit(out: &Output, g: &Multigraph, prefix: &str, dot: impl FnOnce() -> String) -> linkroot::Result<()> {
    match &out.output {
        Some(p) => g.write(p)?,
        None => print!("{prefix}{}", g.to_text()),
    }
    if let Some(p) = &out.dot {
        write_file(p, &dot())?;
    }
    Ok(())
}

fn emit_construction(out: &Output, r: &LinkGraphResult, provenance: Option<&Path>) -> linkroot::Result<()> {
    emit(out, &r.graph, "", || link_graph_dot(r))?;
    if let Some(prefix) = provenance {
        r.write_provenance(prefix)?;
    }
    Ok(())
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn run(cli: Cli) -> linkroot::Result<Outcome> {
    match cli.command {
        Command::Link {
            common,
            out,
            partitions,
            provenance,
            max_links,
        } => {
            let g = read_graph(&common.input)?;
            let r = link_graph_capped(&g, common.ell, max_links)?;
            emit_construction(&out, &r, provenance.as_deref())?;
            if let Some(p) = partitions {
                let parts = link_partitions(&r);
                let pg = linkroot::PartitionedGraph::new(r.graph.clone(), parts.vertex_parts, parts.edge_parts)?;
                write_file(&p, &pg.partition_text())?;
            }
        }
        Command::Pathgraph {
            common,
            out,
            provenance,
            max_links,
        } => {
            let g = read_graph(&common.input)?;
            let r = path_graph_capped(&g, common.ell, max_links)?;
            emit_construction(&out, &r, provenance.as_deref())?;
        }
        Command::Incidence { common, out } => {
            let g = read_graph(&common.input)?;
            let rep = incidence_subgraph(&g, common.ell);
            let mut head = String::new();
            for (v, &f) in rep.flags.vertex.iter().enumerate() {
                let _ = writeln!(head, "# v {v} {}", u8::from(f));
            }
            for (e, &f) in rep.flags.edge.iter().enumerate() {
                let _ = writeln!(head, "# e {e} {}", u8::from(f));
            }
            emit(&out, rep.graph(), &head, || to_dot(rep.graph(), None, None))?;
        }
        Command::Minimal { common, path } => {
            let g = read_graph(&common.input)?;
            let flags = if path {
                path_incidence_flags(&g, common.ell)
            } else {
                incidence_flags(&g, common.ell)
            };
            return Ok(match flags.first_missing() {
                None => {
                    println!("minimal");
                    Outcome::Yes
                }
                Some(unit) => {
                    println!("not minimal: {unit}");
                    Outcome::No
                }
            });
        }
        Command::Equiv { ell, first, second } => {
            let a = read_graph(&first)?;
            let b = read_graph(&second)?;
            return Ok(if is_l_equivalent(&a, &b, ell) {
                println!("equivalent");
                Outcome::Yes
            } else {
                println!("not equivalent");
                Outcome::No
            });
        }
        Command::Expand { common, recipe, out } => {
            let g = read_graph(&common.input)?;
            let recipe = ExpansionRecipe::read(&recipe)?;
            let x = expand_class(&g, common.ell, &recipe)?;
            emit(&out, &x, "", || to_dot(&x, None, None))?;
        }
        Command::Analyze { common, max_links } => {
            let g = read_graph(&common.input)?;
            let m = metrics(&g);
            let (_, h) = partitioned_link_graph_capped(&g, common.ell, max_links)?;
            let census = count_cyclic_components(&h);
            println!("n\t{}", g.vertex_count());
            println!("m\t{}", g.edge_count());
            println!("components\t{}", m.components);
            println!("cyclic\t{}", m.cyclic_components);
            println!("acyclic\t{}", m.acyclic_components);
            println!("diameter\t{}", m.diameter);
            println!("radius\t{}", m.radius);
            println!("girth\t{}", m.girth);
            println!("max_degree\t{}", g.max_degree());
            println!("eccentricity\t{}", join(&m.eccentricity));
            println!("degree_set\t{}", join(graph_degree_set(&g)));
            println!("link_n\t{}", h.graph.vertex_count());
            println!("link_m\t{}", h.graph.edge_count());
            println!("part_degree_set\t{}", join(&census.degree_set));
            println!("part_max_degree\t{}", census.max_part_degree);
            println!("partitioned_cyclic\t{}", census.cyclic);
            println!("partitioned_acyclic\t{}", census.acyclic);
        }
        Command::Roots {
            common,
            path,
            trees_only,
            forests_only,
            connected_only,
            budget,
            out_dir,
        } => {
            let h = read_graph(&common.input)?;
            let opts = SearchOptions {
                trees_only,
                forests_only,
                connected_only,
                budget,
            };
            let set = if path {
                minimal_path_roots(&h, common.ell, &opts)?
            } else {
                minimal_link_roots(&h, common.ell, &opts)?
            };
            write_root_set(&set, &out_dir)?;
            for (i, r) in set.roots.iter().enumerate() {
                println!(
                    "root_{i:03}\t{}\t{}\t{}\t{}",
                    r.graph.vertex_count(),
                    r.graph.edge_count(),
                    r.kind.as_str(),
                    r.form.to_hex()
                );
            }
            eprintln!(
                "{} roots, {} candidates, {} pruned, {:.3}s",
                set.len(),
                set.stats.candidates,
                set.stats.pruned,
                set.stats.elapsed.as_secs_f64()
            );
        }
        Command::Canon { input } => {
            let g = read_graph(&input)?;
            println!("{}", canonical_form(&g).to_hex());
        }
    }
    Ok(Outcome::Yes)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(EXIT_NEGATIVE),
        Err(e @ Error::Budget { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
