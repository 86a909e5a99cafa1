use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use arbogray::error::Error;
use arbogray::format::{arborescence_line, delta_text, flip_graph_dot, gray_path_json, parse_path};
use arbogray::instances::InstanceSpec;
use arbogray::oracle::{
    build_flip_graph_with_budget, find_hamiltonian_cycle, find_hamiltonian_path, verify_arc_lists,
    enumerate_arborescences_with_budget, SearchBudget, DEFAULT_ENUMERATION_BUDGET, DEFAULT_SEARCH_BUDGET,
};
use arbogray::parity;
use arbogray::strategy::{StrategyContext, StrategyRegistry};

const EXIT_VERIFY_FAILED: u8 = 5;

/// Pivot Gray codes and flip graphs of rooted digraph arborescences.
///
/// Instances are graph files ("n m root" then one "tail head" line per arc)
/// or generated: bidirected-cycle:N, bidirected-complete:N,
/// random-tournament:N:SEED, fig-graph13, fig-bipartite7, fig-flipG1,
/// fig-contraction, intro-3vertex.
///
/// Exit codes: 1 malformed input, 2 precondition refused, 3 budget exceeded,
/// 4 internal inconsistency, 5 verification failed.
#[derive(Parser)]
#[command(name = "arbogray", version)]
struct Cli {
    #[command(flatten)]
    budgets: Budgets,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Budgets {
    /// Most arborescences any enumeration may produce [env: ARBOGRAY_BUDGET]
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Largest flip graph handed to Hamiltonian search
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_BUDGET)]
    search_budget: usize,
}

impl Budgets {
    fn enumeration(&self) -> Result<usize> {
        if let Some(b) = self.budget {
            return Ok(b);
        }
        match std::env::var("ARBOGRAY_BUDGET") {
            Ok(v) => v
                .parse()
                .map_err(|_| Error::Parse {
                    line: 0,
                    message: format!("ARBOGRAY_BUDGET={v:?} is not a count"),
                })
                .map_err(Into::into),
            Err(_) => Ok(DEFAULT_ENUMERATION_BUDGET),
        }
    }

    fn search(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.search_budget,
            ..SearchBudget::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print an instance in the graph file format.
    Show { instance: String },
    /// Count and list all arborescences.
    Enumerate { instance: String },
    /// Summarise the flip graph, optionally writing it as DOT.
    Flipgraph {
        instance: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Where the node legend goes; defaults to the DOT path plus ".legend"
        #[arg(long, requires = "dot")]
        legend: Option<PathBuf>,
    },
    /// Build a pivot Gray code. JSON goes to stdout unless a file is given.
    Graycode {
        instance: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        delta: Option<PathBuf>,
        /// On an internal inconsistency search exhaustively and report a counterexample
        #[arg(long)]
        fallback_bruteforce: bool,
        /// Search the flip graph exhaustively when the construction does not apply
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value = "clique-support")]
        strategy: String,
    },
    /// Check a path (JSON or delta text, "-" for stdin) against an instance.
    Verify { instance: String, path: String },
    /// Sign classes, signed Laplacian determinant and parity verdicts.
    Parity { instance: String },
    /// Exhaustive Hamiltonian path or cycle search in the flip graph.
    Hamsearch {
        instance: String,
        #[arg(long)]
        cycle: bool,
    },
    /// List the registered Gray code strategies.
    Strategies,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Parse { .. } | Error::InvalidGraph(_) | Error::UnknownArc(_)) => 1,
        Some(Error::Precondition(_) | Error::IllegalFlip { .. } | Error::NoCompletion | Error::NoHamiltonianPath) => 2,
        Some(Error::Budget { .. }) => 3,
        Some(Error::Inconsistency { provenance, .. }) => {
            eprintln!("provenance:");
            for p in provenance {
                eprintln!("  {p}");
            }
            4
        }
        None => 1,
    }
}

fn load(instance: &str) -> Result<arbogray::digraph::DiGraph> {
    Ok(InstanceSpec::parse(instance)?.generate()?)
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let budget = cli.budgets.enumeration()?;
    let search = cli.budgets.search();
    match cli.command {
        Command::Show { instance } => print!("{}", load(&instance)?.to_text()),
        Command::Enumerate { instance } => {
            let g = load(&instance)?;
            let all = enumerate_arborescences_with_budget(&g, budget)?;
            println!("count {}", all.len());
            for a in &all {
                println!("{}", arborescence_line(a));
            }
        }
        Command::Flipgraph { instance, dot, legend } => {
            let g = load(&instance)?;
            let fg = build_flip_graph_with_budget(&g, budget)?;
            let ones = (0..fg.len()).filter(|&i| fg.degree(i) == 1).count();
            println!("nodes {}", fg.len());
            println!("edges {}", fg.edge_count());
            println!("bipartite {}", fg.bipartition().is_some());
            println!("degree-one {ones}");
            if let Some(path) = dot {
                let (text, key) = flip_graph_dot(&fg);
                let legend = legend.unwrap_or_else(|| {
                    let mut p = path.clone().into_os_string();
                    p.push(".legend");
                    p.into()
                });
                write(&path, &text)?;
                write(&legend, &key)?;
            }
        }
        Command::Graycode {
            instance,
            json,
            delta,
            fallback_bruteforce,
            oracle,
            strategy,
        } => {
            let g = load(&instance)?;
            let registry = StrategyRegistry::default();
            let ctx = StrategyContext {
                fallback_bruteforce,
                enumeration_budget: budget,
                search,
            };
            let name = if oracle && !g.is_clique_support_minus_root() { "bruteforce" } else { strategy.as_str() };
            let outcome = registry.generate(name, &g, &ctx)?;
            if let Some(bundle) = &outcome.counterexample {
                eprintln!("counterexample: {}", serde_json::to_string_pretty(bundle)?);
            }
            let text = gray_path_json(&outcome.path);
            if let Some(p) = &delta {
                write(p, &delta_text(&outcome.path))?;
            }
            match &json {
                Some(p) => write(p, &text)?,
                None if delta.is_none() => println!("{text}"),
                None => {}
            }
            eprintln!("{} arborescences", outcome.path.len());
        }
        Command::Verify { instance, path } => {
            let g = load(&instance)?;
            let text = if path == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
                s
            } else {
                std::fs::read_to_string(&path).with_context(|| format!("reading {path}"))?
            };
            let lists = parse_path(&text)?;
            let report = verify_arc_lists(&g, &lists);
            print!("{report}");
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
            }
        }
        Command::Parity { instance } => {
            let g = load(&instance)?;
            let report = parity::analyze(&g)?;
            println!("arborescences {}", report.total);
            println!("classes {} {}", report.positive, report.negative);
            println!("determinant {}", report.determinant);
            println!("weights");
            for (id, w) in &report.weighting.weight {
                let a = g.arc(*id).expect("weighted arcs exist");
                println!("  {id} {}->{} {w:+}", a.tail, a.head);
            }
            for v in &report.verdicts {
                println!("verdict: {v}");
            }
        }
        Command::Hamsearch { instance, cycle } => {
            let g = load(&instance)?;
            let fg = build_flip_graph_with_budget(&g, budget)?;
            let adj = fg.neighbour_lists();
            let found = if cycle { find_hamiltonian_cycle(&adj, search)? } else { find_hamiltonian_path(&adj, search)? };
            match found {
                None => println!("none"),
                Some(order) => {
                    println!("{} {}", if cycle { "cycle" } else { "path" }, order.len());
                    for i in order {
                        println!("{}", arborescence_line(&fg.nodes[i]));
                    }
                }
            }
        }
        Command::Strategies => {
            for s in StrategyRegistry::default().iter() {
                println!("{:<16}{}", s.name(), s.description());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
