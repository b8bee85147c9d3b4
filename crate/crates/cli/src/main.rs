//! `liecps`: batch verification of complex product structures and the
//! structures they induce.
//!
//! Exit status: 0 when every requested check passes, 1 when a check fails,
//! 2 when the input is malformed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod input;
mod output;

use input::Source;
use output::Sink;

#[derive(Parser, Debug)]
#[command(name = "liecps", version, about = "Exact checks for complex product structures on real Lie algebras")]
struct Cli {
    /// Print the JSON report instead of a table.
    #[arg(long, global = true)]
    machine: bool,
    /// Write the produced structure document to this path.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a complex product structure and print its eigenspaces.
    VerifyCps(Source),
    /// Induced left-symmetric products on the eigenspaces, or check a product.
    Lsa {
        #[command(flatten)]
        source: Source,
        /// Check this product document instead.
        #[arg(long, value_name = "PATH")]
        product: Option<PathBuf>,
    },
    /// Matched pair of the eigenspaces, or check a matched pair document.
    MatchedPair {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "PATH")]
        pair: Option<PathBuf>,
    },
    /// Bicrossproduct of a matched pair.
    Bicross {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "PATH")]
        pair: Option<PathBuf>,
    },
    /// aff(A) with its complex product structure, for a left-symmetric product A.
    Aff {
        /// Product document.
        product: PathBuf,
    },
    /// The canonical torsion-free connection.
    Connection {
        #[command(flatten)]
        source: Source,
        /// Report nonzero torsion entries.
        #[arg(long)]
        torsion: bool,
        /// Report nonzero curvature entries.
        #[arg(long)]
        curvature: bool,
        /// Require the connection to be flat.
        #[arg(long)]
        flat: bool,
        /// Include full torsion and curvature tensors.
        #[arg(long)]
        full: bool,
    },
    /// Induced hypercomplex structure on the realified complexification.
    Hypercomplex {
        #[command(flatten)]
        source: Source,
        /// Check this hypercomplex document instead.
        #[arg(long, value_name = "PATH")]
        check: Option<PathBuf>,
    },
    /// Iterate the complexification k times.
    Iterate {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Largest dimension allowed.
        #[arg(long, default_value_t = liecps::hypercomplex::DEFAULT_CAP)]
        cap: usize,
    },
    /// Invariant forms and suites attached to a structure.
    Forms {
        #[command(flatten)]
        source: Source,
        /// Symmetric Gram matrix (JSON list of rows) for the metric suite.
        #[arg(long, value_name = "PATH")]
        metric: Option<PathBuf>,
        /// 2-form document for the hypersymplectic suite.
        #[arg(long, value_name = "PATH")]
        hypersymplectic: Option<PathBuf>,
        /// 1- or 2-form document to differentiate.
        #[arg(long, value_name = "PATH")]
        differential: Option<PathBuf>,
    },
    /// Stored examples.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List catalog keys.
    List,
    /// Print one entry.
    Show(Source),
    /// Run every stored check, optionally for one key.
    Verify {
        key: Option<String>,
        /// Sample parameters for the families (defaults to 0, 1, -1, 1/2, 3).
        #[arg(long = "t", value_name = "P/Q", allow_hyphen_values = true)]
        t: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let sink = Sink { command: name, machine: cli.machine, out: cli.out.as_deref() };
    let result = match cli.command {
        Command::VerifyCps(s) => commands::verify_cps(&s),
        Command::Lsa { source, product } => commands::lsa(&source, product.as_deref()),
        Command::MatchedPair { source, pair } => commands::matched_pair(&source, pair.as_deref()),
        Command::Bicross { source, pair } => commands::bicross(&source, pair.as_deref()),
        Command::Aff { product } => commands::aff(&product),
        Command::Connection { source, torsion, curvature, flat, full } => {
            commands::connection(&source, commands::ConnectionFlags { torsion, curvature, flat, full })
        }
        Command::Hypercomplex { source, check } => commands::hypercomplex(&source, check.as_deref()),
        Command::Iterate { source, k, cap } => commands::iterate(&source, k, cap),
        Command::Forms { source, metric, hypersymplectic, differential } => {
            commands::forms(&source, metric.as_deref(), hypersymplectic.as_deref(), differential.as_deref())
        }
        Command::Catalog(CatalogCommand::List) => commands::catalog_list(),
        Command::Catalog(CatalogCommand::Show(s)) => commands::catalog_show(&s),
        Command::Catalog(CatalogCommand::Verify { key, t }) => commands::catalog_verify(key.as_deref(), &t),
    };
    sink.emit(result)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::VerifyCps(_) => "verify-cps",
        Command::Lsa { .. } => "lsa",
        Command::MatchedPair { .. } => "matched-pair",
        Command::Bicross { .. } => "bicross",
        Command::Aff { .. } => "aff",
        Command::Connection { .. } => "connection",
        Command::Hypercomplex { .. } => "hypercomplex",
        Command::Iterate { .. } => "iterate",
        Command::Forms { .. } => "forms",
        Command::Catalog(CatalogCommand::List) => "catalog list",
        Command::Catalog(CatalogCommand::Show(_)) => "catalog show",
        Command::Catalog(CatalogCommand::Verify { .. }) => "catalog verify",
    }
}
