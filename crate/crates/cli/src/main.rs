use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nzflow::graph_core::Format;
use nzflow::proof_lab::Status;
use nzflow_cli::{certify_report, emit, info_line, load_graph, scan, Failure, RunConfig, EXIT_OK, EXIT_UNRESOLVED};

/// Nowhere-zero 5-flow certificates for bridgeless cubic graphs.
#[derive(Parser)]
#[command(name = "nzflow", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, size, cubicity, bridgelessness and girth.
    Info {
        path: PathBuf,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Certify one graph; exits 3 when no flow could be established.
    Certify {
        path: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Certify every file of a directory, in file-name order.
    Scan {
        dir: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    /// Input format (graph6 or edge-list); guessed from the extension otherwise.
    #[arg(long)]
    format: Option<Format>,
    /// Largest cycle-space dimension the exhaustive Z_5 search accepts.
    #[arg(long, default_value_t = RunConfig::default().max_bf_dim)]
    max_bf_dim: usize,
    /// Largest order for the exhaustive balance cross-check.
    #[arg(long, default_value_t = RunConfig::default().max_balance_n)]
    max_balance_n: usize,
    /// Largest order for which minimum 2-factors are enumerated.
    #[arg(long, default_value_t = RunConfig::default().max_oddness_n)]
    max_oddness_n: usize,
    /// Worker threads (1 = sequential, 0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random vertex sets per minimum 2-factor for the counting checks.
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock timings (makes reports non-reproducible).
    #[arg(long)]
    timings: bool,
}

impl Opts {
    fn config(&self) -> RunConfig {
        RunConfig {
            format: self.format,
            max_bf_dim: self.max_bf_dim,
            max_balance_n: self.max_balance_n,
            max_oddness_n: self.max_oddness_n,
            jobs: self.jobs,
            seed: self.seed,
            samples: self.samples,
            timings: self.timings,
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Info { path, format } => {
            println!("{}", info_line(&load_graph(&path, format)?));
            Ok(EXIT_OK)
        }
        Command::Certify { path, opts } => {
            let cfg = opts.config();
            let g = load_graph(&path, cfg.format)?;
            let report = cfg.install(|| certify_report(&g, &cfg))?;
            emit(&report, opts.out.as_deref())?;
            Ok(match report.certificate.status {
                Status::Certified => EXIT_OK,
                Status::Unresolved => EXIT_UNRESOLVED,
            })
        }
        Command::Scan { dir, opts } => {
            let report = scan(&dir, &opts.config())?;
            emit(&report, opts.out.as_deref())?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code as u8)
        }
    }
}
