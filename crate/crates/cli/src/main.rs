use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod io;

use io::Failure;

/// Weakly modular graphs from the command line. Graph files hold `n m` on
/// the first line and one edge `u v` per line; `#` starts a comment.
#[derive(Parser, Debug)]
#[command(name = "wmgraph", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Graph file.
    #[arg(long, required_unless_present = "manifest")]
    pub graph: Option<PathBuf>,
    /// File listing one graph path per line; the verb runs on each.
    #[arg(long, conflicts_with = "graph")]
    pub manifest: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Write the resulting graph file here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print a JSON object instead of the graph file.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verdicts for every family of the hierarchy, with witnesses.
    Recognize {
        #[command(flatten)]
        input: GraphInput,
        /// Accepted for uniformity; reports are always JSON.
        #[arg(long)]
        json: bool,
    },
    /// Gated hull of a vertex set.
    Hull {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Barycentric graph of an swm-graph, optionally iterated.
    Gstar {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Thickening of an swm-graph, or its partial version up to distance k.
    Thicken {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Normal Boolean-gated path between two vertices of an swm-graph.
    Normalpath {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Second pair `q,y`: also checks that the paths from `from` to `to`
        /// and from `q` to `y` fellow-travel.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        fellow: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
    },
    /// Minimum 0-extension: exact search, the 2-approximation, or both.
    Zeroext {
        #[arg(long)]
        graph: PathBuf,
        /// Instance JSON file.
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = commands::ZeroExtMode::Both)]
        mode: commands::ZeroExtMode,
        /// Vertex used for rounding.
        #[arg(long, default_value_t = 0)]
        anchor: usize,
        /// Largest number of assignments to enumerate.
        #[arg(long, default_value_t = wmgraph::zero_ext::DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        json: bool,
    },
    /// Hyperbolicity parameters and the bounds relating them.
    Hyperbolicity {
        #[command(flatten)]
        input: GraphInput,
        /// Largest grid side searched.
        #[arg(long, default_value_t = wmgraph::analysis::DEFAULT_GRID_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Seeded BFS order and a check that its prefixes are isometric.
    Bfs {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        base: usize,
        /// Check this comma-separated order instead of building one.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
    },
    /// Disc filling of a closed walk in a meshed graph.
    Fill {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated closed walk; the start need not be repeated.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Ball in the universal cover of the triangle-square complex.
    Cover {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
        #[arg(long)]
        radius: usize,
        /// Largest number of vertices in one layer.
        #[arg(long, default_value_t = wmgraph::cover::DEFAULT_LAYER_CAP)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Diagonal extension after k rounds, or its fixpoint and rank.
    Diag {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Most rounds tried when looking for the fixpoint.
        #[arg(long, default_value_t = 64)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Write a named graph.
    Generate {
        #[command(subcommand)]
        kind: commands::Kind,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("wmgraph: {message}");
            ExitCode::from(code)
        }
    }
}
