use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use graphsym::distinguishing::{distinguishing_index, distinguishing_number, Determination};
use graphsym::family::{parse_graph_spec, NamedGraph};
use graphsym::format::{self, Format};
use graphsym::products::{product, ProductKind};
use graphsym::structure::{hamiltonian_path, s_partition};
use graphsym::symmetry::automorphism_group;
use graphsym::theorems::{run_all, Corpus, Verdict};
use graphsym::Budget;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "graphsym",
    version,
    about = "Graph products, automorphisms and distinguishing labelings"
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct GlobalOpts {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, env = "GRAPHSYM_SEED", default_value_t = 0)]
    seed: u64,
    /// Largest vertex count for automorphism enumeration.
    #[arg(long, global = true, env = "GRAPHSYM_AUT_BOUND")]
    aut_bound: Option<usize>,
    /// Largest vertex count for exhaustive distinguishing-number search.
    #[arg(long, global = true, env = "GRAPHSYM_EXACT_BOUND")]
    exact_bound: Option<usize>,
    /// Largest edge count for exhaustive distinguishing-index search.
    #[arg(long, global = true, env = "GRAPHSYM_EXACT_EDGE_BOUND")]
    exact_edge_bound: Option<usize>,
    /// Random labelings tried per label count above the exact bounds.
    #[arg(long, global = true, env = "GRAPHSYM_TRIALS")]
    trials: Option<usize>,
}

impl GlobalOpts {
    fn budget(&self, base: Budget) -> Budget {
        Budget {
            seed: self.seed,
            aut_vertices: self.aut_bound.unwrap_or(base.aut_vertices),
            exact_vertices: self.exact_bound.unwrap_or(base.exact_vertices),
            exact_edges: self.exact_edge_bound.unwrap_or(base.exact_edges),
            trials: self.trials.unwrap_or(base.trials),
            ..base
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Cartesian,
    Direct,
    Strong,
}

#[derive(Subcommand)]
enum Verb {
    /// Product of two graphs.
    Product {
        #[arg(long, value_enum)]
        op: Op,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: OutFormat,
    },
    /// Order of the automorphism group.
    Autgroup {
        graph: String,
        /// Print every element in one-line image notation.
        #[arg(long)]
        elements: bool,
    },
    /// Distinguishing number.
    Distnum { graph: String },
    /// Distinguishing index.
    Distidx { graph: String },
    /// Whether no two vertices share a closed neighborhood.
    Sthin { graph: String },
    /// Hamiltonian path search.
    Traceable { graph: String },
    /// Run every check over a corpus.
    Verify {
        /// Run all checks (the only mode).
        #[arg(long)]
        all: bool,
        #[arg(long)]
        corpus: Option<String>,
    },
}

/// Reads a graph from a file, stdin (`-`), or inline shorthand/graph6 text.
fn load(arg: &str) -> Result<NamedGraph> {
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else if Path::new(arg).exists() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    parse_graph_spec(&text).with_context(|| format!("parsing graph `{arg}`"))
}

fn determination_text<L>(d: &Determination<L>, witness: impl Fn(&L) -> String) -> String {
    let mut s = match d.bounds() {
        None => return "undefined (an automorphism fixes every edge)".into(),
        Some((lo, hi)) if lo == hi => format!("{lo}"),
        Some((lo, hi)) => format!("[{lo}, {hi}]"),
    };
    s.push_str(&format!(" ({})", d.mode_name()));
    if let Some(r) = d.reason() {
        s.push_str(&format!(
            "\nlower bound: {}",
            serde_json::to_value(r).unwrap_or(Value::Null)
        ));
    }
    if let Some(w) = d.witness() {
        s.push_str(&format!("\nwitness: {}", witness(w)));
    }
    s
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Returns the text or JSON output and whether every verification passed.
fn run(cli: &Cli) -> Result<(String, bool)> {
    let opts = &cli.opts;
    let budget = opts.budget(Budget::default());
    let out = match &cli.verb {
        Verb::Product { op, a, b, format } => {
            let kind = match op {
                Op::Cartesian => ProductKind::Cartesian,
                Op::Direct => ProductKind::Direct,
                Op::Strong => ProductKind::Strong,
            };
            let (a, b) = (load(a)?, load(b)?);
            let g = product(kind, &a.graph, &b.graph);
            let fmt = match format {
                OutFormat::Graph6 => Format::Graph6,
                OutFormat::Edgelist => Format::EdgeList,
            };
            let text = String::from_utf8(format::serialize(&g, fmt)).expect("formats are ASCII");
            if opts.json {
                json!({
                    "op": format!("{:?}", kind).to_lowercase(),
                    "orders": [a.graph.n(), b.graph.n()],
                    "vertices": g.n(),
                    "edges": g.edge_count(),
                    "graph6": format::to_graph6(&g),
                })
                .to_string()
            } else {
                text.trim_end().to_string()
            }
        }
        Verb::Autgroup { graph, elements } => {
            let g = load(graph)?;
            let group = automorphism_group(&g.graph, &budget)?;
            if opts.json {
                let mut v = json!({ "order": group.order() });
                if *elements {
                    v["elements"] = json!(group
                        .elements()
                        .iter()
                        .map(|p| p.image())
                        .collect::<Vec<_>>());
                }
                v.to_string()
            } else {
                let mut s = format!("order {}", group.order());
                if *elements {
                    for p in group.elements() {
                        s.push_str(&format!("\n{p}"));
                    }
                }
                s
            }
        }
        Verb::Distnum { graph } => {
            let g = load(graph)?;
            let d = distinguishing_number(&g.graph, &budget)?;
            if opts.json {
                serde_json::to_string(&d)?
            } else {
                format!("D = {}", determination_text(&d, |w| join(w.labels())))
            }
        }
        Verb::Distidx { graph } => {
            let g = load(graph)?;
            let d = distinguishing_index(&g.graph, &budget)?;
            if opts.json {
                serde_json::to_string(&d)?
            } else {
                let edges = |w: &graphsym::distinguishing::EdgeLabeling| {
                    w.iter()
                        .map(|((u, v), l)| format!("{u}-{v}:{l}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                format!("D′ = {}", determination_text(&d, edges))
            }
        }
        Verb::Sthin { graph } => {
            let g = load(graph)?;
            let p = s_partition(&g.graph);
            let thin = p.classes.len() == g.graph.n();
            if opts.json {
                json!({ "s_thin": thin, "classes": p.classes }).to_string()
            } else {
                let mut s = format!("S-thin: {thin}");
                for c in p.classes.iter().filter(|c| c.len() > 1) {
                    s.push_str(&format!("\nclass: {}", join(c)));
                }
                s
            }
        }
        Verb::Traceable { graph } => {
            let g = load(graph)?;
            let path = hamiltonian_path(&g.graph, &budget)?;
            if opts.json {
                json!({ "traceable": path.is_some(), "path": path }).to_string()
            } else {
                match path {
                    Some(p) => format!("traceable: true\npath: {}", join(&p)),
                    None => "traceable: false".into(),
                }
            }
        }
        Verb::Verify { all: _, corpus } => {
            let corpus = match corpus {
                Some(path) => {
                    let text =
                        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
                    Corpus::parse(&text).with_context(|| format!("parsing corpus {path}"))?
                }
                None => Corpus::standard(),
            };
            let reports = run_all(&corpus, &opts.budget(Budget::harness()));
            let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
            let (pass, fail, na, inc) = (
                count(Verdict::Pass),
                count(Verdict::Fail),
                count(Verdict::NotApplicable),
                count(Verdict::Inconclusive),
            );
            let out = if opts.json {
                json!({
                    "reports": reports,
                    "summary": { "pass": pass, "fail": fail, "not_applicable": na, "inconclusive": inc },
                })
                .to_string()
            } else {
                let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
                lines.push(format!(
                    "{} checks: {pass} pass, {fail} fail, {na} not applicable, {inc} inconclusive",
                    reports.len()
                ));
                lines.join("\n")
            };
            return Ok((out, fail == 0));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, passed)) => {
            let mut stdout = io::stdout().lock();
            let _ = writeln!(stdout, "{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
