//! `vm`: command-line front-end for vertex-minors, pivot-minors and depth parameters.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use vminor::constructions::{
    bsc_to_pivot_minor_host, clique_bound_experiment, decompose_set_pivot, hn_path_certificate, make_hn,
    sc_to_vertex_minor_host, HostWitness,
};
use vminor::depth::{bsc_depth, find_tree_model, sc_depth, tree_depth};
use vminor::graph6::{parse_lines, parse_record, to_graph6, to_record, LabelledGraph6};
use vminor::minors::{
    is_pivot_minor, is_vertex_minor, local_equivalence_orbit, MinorCertificate, DEFAULT_NODE_LIMIT,
};
use vminor::selftest::run_selftest;
use vminor::{Error, Graph, VertexSet};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(name = "vm", version, about = "Local complementation, pivot-minors and depth parameters of small graphs")]
#[command(after_help = "Graphs are read as graph6, one per line; a line may instead be a JSON record \
{\"graph6\": ..., \"labels\": [...]}. Without --graph or --file, graphs are read from stdin. \
JSON results go to stdout, one line per input graph; summaries go to stderr.\n\n\
Exit codes: 0 success, 1 negative answer, 2 usage or parse error, 3 capacity exceeded.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// A single graph in graph6.
    #[arg(long, short = 'g', conflicts_with = "file")]
    graph: Option<String>,
    /// A file of graphs, one per line ("-" for stdin).
    #[arg(long, short = 'f')]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Local complementation at a vertex; prints graph6.
    Lc {
        #[command(flatten)]
        input: Input,
        /// Vertex index, or label for labelled input.
        #[arg(long)]
        vertex: String,
    },
    /// Pivot on the edge uv; prints graph6.
    Pivot {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Local-equivalence orbit up to isomorphism.
    Orbit {
        #[command(flatten)]
        input: Input,
        /// Maximum number of classes to explore.
        #[arg(long, env = "VM_NODE_LIMIT", default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: usize,
    },
    /// Decide whether TARGET is a vertex-minor; prints a certificate.
    VertexMinor {
        #[command(flatten)]
        input: Input,
        /// The candidate minor, graph6.
        #[arg(long)]
        target: String,
    },
    /// Decide whether TARGET is a pivot-minor; prints a certificate.
    PivotMinor {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: String,
    },
    /// Exact tree-depth with a witness forest.
    TreeDepth {
        #[command(flatten)]
        input: Input,
    },
    /// Exact SC-depth with a decomposition.
    ScDepth {
        #[command(flatten)]
        input: Input,
    },
    /// Exact BSC-depth with a decomposition.
    BscDepth {
        #[command(flatten)]
        input: Input,
    },
    /// Search for a tree-model of the given depth and colour count.
    TreeModel {
        #[command(flatten)]
        input: Input,
        #[arg(long, short = 'd')]
        depth: usize,
        #[arg(long, short = 'm', visible_alias = "colors")]
        colours: usize,
    },
    /// Vertex-minor host of tree-depth at most SC-depth + 1.
    ScToHost {
        #[command(flatten)]
        input: Input,
    },
    /// Pivot-minor host of tree-depth at most 2 BSC-depth + 1.
    BscToHost {
        #[command(flatten)]
        input: Input,
    },
    /// Split the pivot on a vertex set into edge pivots.
    PivotDecompose {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex indices.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        /// Vertex to place in the last pair; defaults to the smallest in the set.
        #[arg(long)]
        s: Option<usize>,
    },
    /// The graph H_n as a labelled record.
    Hn {
        #[arg(long, short = 'n')]
        n: usize,
    },
    /// Certificate that H_n has a path with n edges as a pivot-minor.
    HnPath {
        #[arg(long, short = 'n')]
        n: usize,
    },
    /// Largest clique pivot-minor over connected graphs of bounded tree-depth.
    CliqueBound {
        #[arg(long, short = 'd')]
        d: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Use the graphs in this file instead of generating them.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check a certificate file ("-" or nothing for stdin).
    Verify { certificate: Option<PathBuf> },
    /// Run the built-in property checks.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// A failed run: exit code and message for stderr.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => EXIT_CAPACITY,
            Error::Certificate(_) => EXIT_NEGATIVE,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn read_source(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_graphs(input: &Input) -> Result<Vec<Graph>, Failure> {
    if let Some(g) = &input.graph {
        return Ok(vec![parse_record(g)?]);
    }
    let text = read_source(input.file.as_ref())?;
    let graphs = parse_lines(&text)?;
    if graphs.is_empty() {
        return Err(Failure(EXIT_USAGE, "no graphs in input".into()));
    }
    Ok(graphs)
}

fn vertex(g: &Graph, name: &str) -> Result<usize, Failure> {
    let v = match name.parse::<usize>() {
        Ok(v) => v,
        Err(_) => g
            .index_of_label(name)
            .ok_or_else(|| Failure(EXIT_USAGE, format!("no vertex labelled {name:?}")))?,
    };
    g.check_vertex(v)?;
    Ok(v)
}

/// Writes one line to stdout; a closed pipe ends the process quietly.
fn out(line: &str) {
    let mut stdout = io::stdout().lock();
    if let Err(e) = writeln!(stdout, "{line}") {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("vm: {e}");
        std::process::exit(EXIT_USAGE as i32);
    }
}

fn emit(v: &Value) {
    out(&serde_json::to_string(v).expect("serialisable"));
}

/// Runs `f` on every input graph and returns the worst exit code.
fn each_graph(input: &Input, mut f: impl FnMut(&Graph) -> Outcome) -> Outcome {
    let mut worst = 0;
    for g in read_graphs(input)? {
        let code = match f(&g) {
            Ok(c) => c,
            Err(Failure(code, msg)) => {
                eprintln!("{}: {msg}", to_graph6(&g));
                code
            }
        };
        worst = worst.max(code);
    }
    Ok(worst)
}

fn host_json(k: usize, w: &HostWitness) -> Result<Value, Failure> {
    Ok(json!({
        "depth": k,
        "host": LabelledGraph6 {
            graph6: to_graph6(&w.host),
            labels: w.host.labels().map(<[String]>::to_vec),
        },
        "forest": w.decomposition,
        "td_bound": w.td_bound,
        "certificate": w.to_certificate()?.to_json(),
    }))
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Lc { input, vertex: name } => each_graph(&input, |g| {
            out(&to_record(&g.local_complement(vertex(g, &name)?)?));
            Ok(0)
        }),
        Command::Pivot { input, u, v } => each_graph(&input, |g| {
            out(&to_record(&g.pivot_edge(vertex(g, &u)?, vertex(g, &v)?)?));
            Ok(0)
        }),
        Command::Orbit { input, node_limit } => each_graph(&input, |g| {
            let o = local_equivalence_orbit(g, node_limit)?;
            let members: Vec<Value> = o
                .members
                .iter()
                .map(|m| json!({ "graph6": to_graph6(&m.graph), "script": m.script }))
                .collect();
            eprintln!("{}: {} classes{}", to_graph6(g), members.len(), if o.truncated { " (truncated)" } else { "" });
            emit(&json!({ "size": members.len(), "truncated": o.truncated, "members": members }));
            Ok(0)
        }),
        Command::VertexMinor { input, target } => {
            let h = parse_record(&target)?;
            each_graph(&input, |g| minor_answer(is_vertex_minor(g, &h)?, g, &h, "vertex-minor"))
        }
        Command::PivotMinor { input, target } => {
            let h = parse_record(&target)?;
            each_graph(&input, |g| minor_answer(is_pivot_minor(g, &h)?, g, &h, "pivot-minor"))
        }
        Command::TreeDepth { input } => each_graph(&input, |g| {
            let (td, t) = tree_depth(g)?;
            emit(&json!({ "td": td, "witness": t }));
            Ok(0)
        }),
        Command::ScDepth { input } => each_graph(&input, |g| {
            let (k, d) = sc_depth(g)?;
            emit(&json!({ "sc_depth": k, "decomposition": d }));
            Ok(0)
        }),
        Command::BscDepth { input } => each_graph(&input, |g| {
            let (k, d) = bsc_depth(g)?;
            emit(&json!({ "bsc_depth": k, "decomposition": d }));
            Ok(0)
        }),
        Command::TreeModel { input, depth, colours } => each_graph(&input, |g| {
            let found = find_tree_model(g, depth, colours)?;
            eprintln!(
                "{}: {} TM({depth},{colours})",
                to_graph6(g),
                if found.is_some() { "in" } else { "not in" }
            );
            emit(&json!({ "d": depth, "m": colours, "member": found.is_some(), "model": found }));
            Ok(if found.is_some() { 0 } else { EXIT_NEGATIVE })
        }),
        Command::ScToHost { input } => each_graph(&input, |g| {
            let (k, d) = sc_depth(g)?;
            emit(&host_json(k, &sc_to_vertex_minor_host(&d)?)?);
            Ok(0)
        }),
        Command::BscToHost { input } => each_graph(&input, |g| {
            let (k, d) = bsc_depth(g)?;
            emit(&host_json(k, &bsc_to_pivot_minor_host(&d)?)?);
            Ok(0)
        }),
        Command::PivotDecompose { input, set, s } => each_graph(&input, |g| {
            for &v in &set {
                g.check_vertex(v)?;
            }
            let x: VertexSet = set.iter().copied().collect();
            let s = s.or_else(|| x.first()).expect("--set is required");
            let p = decompose_set_pivot(g, x, s)?;
            emit(&serde_json::to_value(p).expect("serialisable"));
            Ok(0)
        }),
        Command::Hn { n } => {
            out(&to_record(&make_hn(n)?));
            Ok(0)
        }
        Command::HnPath { n } => {
            emit(&serde_json::to_value(hn_path_certificate(n)?.to_json()).expect("serialisable"));
            Ok(0)
        }
        Command::CliqueBound { d, n_max, corpus, threads } => {
            let corpus = match corpus {
                Some(p) => Some(parse_lines(&read_source(Some(&p))?)?),
                None => None,
            };
            let r = clique_bound_experiment(d, n_max, corpus, threads)?;
            eprintln!(
                "d={d} n<={n_max}: max clique pivot-minor {} over {} graphs, bound {}",
                r.max_found, r.graphs_checked, r.bound
            );
            emit(&serde_json::to_value(&r).expect("serialisable"));
            Ok(if r.within_bound { 0 } else { EXIT_NEGATIVE })
        }
        Command::Verify { certificate } => {
            let text = read_source(certificate.as_ref())?;
            let cert = MinorCertificate::from_json_str(&text)?;
            match cert.verify() {
                Ok(()) => {
                    eprintln!("certificate verified");
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Selftest { seed } => {
            let results = run_selftest(seed);
            let mut code = 0;
            for r in &results {
                eprintln!("{} {} ({} cases)", if r.passed { "ok  " } else { "FAIL" }, r.name, r.cases);
                if !r.passed {
                    code = EXIT_NEGATIVE;
                }
            }
            emit(&serde_json::to_value(&results).expect("serialisable"));
            Ok(code)
        }
    }
}

fn minor_answer(found: Option<MinorCertificate>, g: &Graph, h: &Graph, what: &str) -> Outcome {
    match found {
        Some(c) => {
            emit(&serde_json::to_value(c.to_json()).expect("serialisable"));
            Ok(0)
        }
        None => {
            eprintln!("{} is not a {what} of {}", to_graph6(h), to_graph6(g));
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("vm: {msg}");
            ExitCode::from(code)
        }
    }
}
