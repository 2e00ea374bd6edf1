mod cache;
mod commands;
mod error;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use turan_core::constructions::NamedId;

#[derive(Parser)]
#[command(name = "turan", version, about = "Generalized Turán numbers of graphs with bounded matching number")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clique counts of a graph6 string or expression.
    Count {
        graph: String,
        /// Print only N(K_r).
        #[arg(long)]
        r: Option<usize>,
        /// Largest clique size in the printed vector.
        #[arg(long)]
        rmax: Option<usize>,
    },
    /// Matching number, a maximum matching and a Tutte–Berge barrier.
    Matching { graph: String },
    /// Whether a graph avoids the forbidden family.
    Free {
        graph: String,
        #[command(flatten)]
        forbid: ForbidArgs,
    },
    /// Emit one of the constructions G1..G6 as graph6 with its clique counts.
    Construct {
        id: NamedId,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Closed-form values.
    #[command(subcommand)]
    Formula(FormulaCommand),
    /// Exhaustive search for ex(n, K_r, family), answered from the cache when possible.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        forbid: ForbidArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Print the record as JSON.
        #[arg(long)]
        json: bool,
        /// Neither read nor write the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Run one harness check.
    Verify {
        check: CheckId,
        #[command(flatten)]
        params: VerifyArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Append the report as one JSON line to this file.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Merge manifests of reports into one JSON document or CSV table.
    Report {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FormulaCommand {
    /// max{e(T_k(2s+1)), e(T_{k-1}(s) ∨ I_{n-s})}.
    AlonFrankl {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
    /// Lower and upper bound for a bipartite forbidden graph.
    Thm14 {
        /// The bipartite graph; alternatively give --p and --q.
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Best of G1, G2 (even paths).
    Thm15(NamedArgs),
    /// Best of the applicable G3..G6 (odd paths).
    Thm16(NamedArgs),
    /// The two hub graphs built on kK_{2p-1}.
    Q11 {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct NamedArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Default)]
struct ForbidArgs {
    /// Forbidden graph; repeat for a family. `M<k>` bounds the matching number by k-1.
    #[arg(long = "forbid")]
    forbid: Vec<String>,
    /// Matching number bound.
    #[arg(long)]
    s: Option<usize>,
}

#[derive(Args, Clone, Copy)]
struct SearchArgs {
    /// Worker threads, 0 for all cores.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Depth at which the search tree is split into tasks.
    #[arg(long, default_value_t = 8)]
    split_depth: usize,
    /// Prune subtrees that cannot beat the best value found.
    #[arg(long)]
    prune: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Values of n: `7`, `5..8` (inclusive) or `5,7,9`.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// The forbidden graph F.
    #[arg(long)]
    f: Option<String>,
    /// Graphs of the family (prop3.2) or of the search to inspect.
    #[arg(long = "forbid")]
    forbid: Vec<String>,
    /// Property families for `lemmas`; all when omitted.
    #[arg(long = "family")]
    families: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckId {
    #[value(name = "alon-frankl")]
    AlonFrankl,
    #[value(name = "thm1.2")]
    Thm12,
    #[value(name = "q1.1")]
    Q11,
    #[value(name = "thm1.5")]
    Thm15,
    #[value(name = "thm1.6")]
    Thm16,
    #[value(name = "thm1.4")]
    Thm14,
    #[value(name = "lemmas")]
    Lemmas,
    #[value(name = "prop3.2")]
    Prop32,
    #[value(name = "inspect")]
    Inspect,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("turan: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
