use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use brkga::harness::{run_pareto, run_solve, run_sweep, Grid, RunConfig};
use brkga::BrkgaError;

/// Seeded BRKGA experiment runner.
///
/// Set BRKGA_THREADS to cap the worker threads used for decoding.
#[derive(Parser)]
#[command(name = "brkga", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single-objective run; writes trace.csv and best.txt.
    Solve {
        config: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// One run per cell of a cartesian parameter grid; writes sweep.csv.
    Sweep {
        config: PathBuf,
        #[arg(long)]
        grid: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Multi-objective run; also writes pareto.tsv.
    Pareto {
        config: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out_dir: Option<PathBuf>,
    #[arg(long)]
    quiet: bool,
}

fn load(config: &Path, common: &Common) -> Result<RunConfig, BrkgaError> {
    let mut run = RunConfig::from_file(config)?;
    if let Some(s) = common.seed {
        run.brkga.seed = s;
    }
    if let Some(d) = &common.out_dir {
        run.output.out_dir = d.clone();
    }
    run.quiet |= common.quiet;
    Ok(run)
}

fn execute(cmd: Command) -> Result<(), BrkgaError> {
    match cmd {
        Command::Solve { config, common } => run_solve(&load(&config, &common)?).map(drop),
        Command::Pareto { config, common } => run_pareto(&load(&config, &common)?).map(drop),
        Command::Sweep {
            config,
            grid,
            common,
        } => {
            let run = load(&config, &common)?;
            run_sweep(&run, &Grid::from_file(&grid)?).map(drop)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Ok(t) = std::env::var("BRKGA_THREADS") {
        match t.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: BRKGA_THREADS must be a positive integer, got `{t}`");
                return ExitCode::from(1);
            }
        }
    }
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_io() { 2 } else { 1 })
        }
    }
}
