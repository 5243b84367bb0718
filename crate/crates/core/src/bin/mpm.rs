//! `mpm`: solve, check and generate maximum priority matching instances.
//!
//! Exit codes: 0 success, 1 input/parse error, 2 verification failure,
//! 3 oracle budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use priority_matching::bench::{run_scaling, ScalingConfig, BENCH_HEADER};
use priority_matching::driver::two_priority_graph;
use priority_matching::io::{
    forest_to_dot, generate_random, matching_to_dot, parse_graph, parse_matching, parse_vertex_set,
    render_graph, render_matching, verify_matching, PrioritySpec,
};
use priority_matching::oracle::summarize;
use priority_matching::{
    max_priority_matching, max_priority_matching_observed, EnumerationBudget, ForestView, Graph,
    Observer, SearchEvent,
};

#[derive(Parser)]
#[command(
    name = "mpm",
    version,
    about = "Maximum priority matchings in general graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a graph file and print the matching file.
    Solve {
        file: PathBuf,
        /// Vertex-set file; solve the two-priority problem for that set instead.
        #[arg(long, value_name = "SETFILE")]
        two_priority: Option<PathBuf>,
        /// Print search events to stderr.
        #[arg(long)]
        trace: bool,
        /// Write the final matching as Graphviz DOT.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Print the best score found by exhaustive enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        #[arg(long, default_value_t = 20)]
        max_edges: usize,
    },
    /// Check a matching file against a graph file (exit 2 if invalid).
    Verify { graph: PathBuf, matching: PathBuf },
    /// Emit a seeded random graph file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// `full`, `uniform:1,2,..` or `weights:1=w1,2=w2,..`
        #[arg(long, default_value = "full")]
        priorities: String,
    },
    /// Time solves on random graphs with m = edge_factor * n.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "500,1000,2000,4000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        edge_factor: usize,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
    /// Replay a solve, printing one line per search event.
    Trace {
        file: PathBuf,
        #[arg(long, value_name = "SETFILE")]
        two_priority: Option<PathBuf>,
        /// Write a DOT snapshot of the search forest after every event.
        #[arg(long, value_name = "DIR")]
        dot_dir: Option<PathBuf>,
    },
}

enum Failure {
    Input(anyhow::Error),
    Verify(String),
    Budget(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path, two_priority: Option<&Path>) -> Result<Graph> {
    let graph = parse_graph(&read(path)?).with_context(|| path.display().to_string())?;
    Ok(match two_priority {
        Some(set_path) => {
            let set = parse_vertex_set(&read(set_path)?, graph.n())
                .with_context(|| set_path.display().to_string())?;
            two_priority_graph(&graph, &set)
        }
        None => graph,
    })
}

struct TraceWriter<'a> {
    out: &'a mut dyn std::io::Write,
    dot_dir: Option<&'a Path>,
    step: usize,
    error: Option<std::io::Error>,
}

impl Observer for TraceWriter<'_> {
    fn on_event(&mut self, event: &SearchEvent, forest: &dyn ForestView) {
        if self.error.is_some() {
            return;
        }
        self.step += 1;
        let mut result = writeln!(self.out, "{event}");
        if let (Ok(()), Some(dir)) = (&result, self.dot_dir) {
            let file = dir.join(format!("step-{:05}.dot", self.step));
            result = fs::write(file, forest_to_dot(forest, &event.to_string()));
        }
        if let Err(e) = result {
            self.error = Some(e);
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    match cli.command {
        Command::Solve {
            file,
            two_priority,
            trace,
            dot,
        } => {
            let graph = load_graph(&file, two_priority.as_deref())?;
            let report = if trace {
                let mut stderr = std::io::stderr();
                let mut writer = TraceWriter {
                    out: &mut stderr,
                    dot_dir: None,
                    step: 0,
                    error: None,
                };
                max_priority_matching_observed(&graph, &mut writer)
            } else {
                max_priority_matching(&graph)
            };
            print!("{}", render_matching(&graph, &report.matching));
            if let Some(out) = dot {
                fs::write(&out, matching_to_dot(&graph, &report.matching))
                    .with_context(|| format!("writing {}", out.display()))?;
            }
        }
        Command::Oracle {
            file,
            max_vertices,
            max_edges,
        } => {
            let graph = load_graph(&file, None)?;
            let budget = EnumerationBudget {
                max_vertices,
                max_edges,
                ..Default::default()
            };
            let summary = summarize(&graph, &budget).map_err(|e| Failure::Budget(e.to_string()))?;
            println!("s {}", summary.best_score);
        }
        Command::Verify { graph, matching } => {
            let g = load_graph(&graph, None)?;
            let file = parse_matching(&read(&matching)?)
                .with_context(|| matching.display().to_string())?;
            verify_matching(&g, &file).map_err(|e| Failure::Verify(e.to_string()))?;
            println!("ok");
        }
        Command::Gen {
            n,
            m,
            seed,
            priorities,
        } => {
            let spec: PrioritySpec = priorities.parse().map_err(anyhow::Error::from)?;
            let graph = generate_random(n, m, &spec, seed).map_err(anyhow::Error::from)?;
            print!("{}", render_graph(&graph));
        }
        Command::Bench {
            sizes,
            seed,
            edge_factor,
            repeats,
        } => {
            let config = ScalingConfig {
                sizes,
                edge_factor,
                seed,
                repeats,
                ..Default::default()
            };
            println!("{BENCH_HEADER}");
            run_scaling(&config, |r| {
                println!("{r}");
            })
            .map_err(anyhow::Error::from)?;
        }
        Command::Trace {
            file,
            two_priority,
            dot_dir,
        } => {
            let graph = load_graph(&file, two_priority.as_deref())?;
            if let Some(dir) = &dot_dir {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            let mut lock = stdout.lock();
            let mut writer = TraceWriter {
                out: &mut lock,
                dot_dir: dot_dir.as_deref(),
                step: 0,
                error: None,
            };
            let report = max_priority_matching_observed(&graph, &mut writer);
            if let Some(e) = writer.error {
                return Err(anyhow::Error::from(e).context("writing trace").into());
            }
            print!("{}", render_matching(&graph, &report.matching));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("oracle budget exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}
