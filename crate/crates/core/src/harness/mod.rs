//! Experiment harness: config and instance files, the full solver loop
//! with its triggers, and CSV reports.
//!
//! The `run_*` functions back the `brkga` binary's commands; each loads
//! the instance named by the config, runs, and writes its reports under
//! the output directory.

mod config;
mod instance;
mod pareto;
mod report;
mod solve;
mod sweep;
mod trace;

use std::fs;

pub use config::{
    ControlMode, OutputSettings, ParetoSettings, QSettings, RunConfig, ScheduleSettings,
    StopRules,
};
pub use instance::{parse_instance, parse_instance_str, Instance, Problem, ProblemKind};
pub use pareto::{mp_config, solve_pareto, ParetoOutcome};
pub use report::{best_file_contents, write_pareto, write_report};
pub use solve::{solve, solve_observed, SolveOutcome, StopReason};
pub use sweep::{csv_row, Grid};
pub use trace::{Event, RunTrace, TraceRecord};

use crate::error::{BrkgaError, Result};
use crate::fmt::sig9;

/// Reads the run's instance and wraps it in a decoder.
pub fn load_problem(run: &RunConfig, multi_objective: bool) -> Result<Problem> {
    Problem::new(parse_instance(&run.instance, run.problem)?, multi_objective)
}

fn prepare_out_dir(run: &RunConfig) -> Result<()> {
    let dir = &run.output.out_dir;
    fs::create_dir_all(dir).map_err(|e| BrkgaError::io(dir, e))
}

fn progress(run: &RunConfig) -> impl FnMut(&TraceRecord) + '_ {
    move |r: &TraceRecord| {
        if !run.quiet && (r.generation.is_multiple_of(100) || !r.events.is_empty()) {
            eprintln!(
                "gen {:>6}  best {:>14}  mean {:>14}  {}",
                r.generation,
                sig9(r.best),
                sig9(r.mean),
                r.event_tag()
            );
        }
    }
}

/// `solve`: single-objective run writing the trace and best-solution files.
pub fn run_solve(run: &RunConfig) -> Result<SolveOutcome> {
    let problem = load_problem(run, false)?;
    let out = solve_observed(run, &problem, progress(run))?;
    prepare_out_dir(run)?;
    write_report(
        &out.trace,
        &out.best,
        out.solution.as_deref(),
        &run.output.resolve(&run.output.trace_file),
        &run.output.resolve(&run.output.best_file),
    )?;
    if !run.quiet {
        eprintln!(
            "best {} after {} generations",
            best_values(&out.best),
            out.trace.len() - 1
        );
    }
    Ok(out)
}

/// `pareto`: multi-objective run additionally writing the archive.
pub fn run_pareto(run: &RunConfig) -> Result<ParetoOutcome> {
    let problem = load_problem(run, true)?;
    let out = solve_pareto(run, &problem)?;
    prepare_out_dir(run)?;
    write_report(
        &out.trace,
        &out.best,
        out.solution.as_deref(),
        &run.output.resolve(&run.output.trace_file),
        &run.output.resolve(&run.output.best_file),
    )?;
    write_pareto(&out.state.archive, &run.output.resolve(&run.output.pareto_file))?;
    if !run.quiet {
        eprintln!(
            "archive holds {} points after {} generations",
            out.state.archive.len(),
            out.state.generation
        );
    }
    Ok(out)
}

/// `sweep`: one single-objective run per grid cell, one CSV row each.
/// Returns the CSV text.
pub fn run_sweep(run: &RunConfig, grid: &Grid) -> Result<String> {
    let configs = grid.configs(run)?;
    let mut csv = grid.csv_header();
    csv.push('\n');
    for (cell, cfg) in grid.cells().iter().zip(&configs) {
        let problem = load_problem(cfg, false)?;
        let out = solve(cfg, &problem)?;
        let row = csv_row(cell, out.best.score().primary(), out.trace.len() as u64 - 1);
        if !run.quiet {
            eprintln!("{row}");
        }
        csv.push_str(&row);
        csv.push('\n');
    }
    prepare_out_dir(run)?;
    report::write_file(&run.output.resolve(&run.output.sweep_file), &csv)?;
    Ok(csv)
}

fn best_values(best: &crate::chromosome::Individual) -> String {
    let v: Vec<String> = best.score().values().iter().map(|x| sig9(*x)).collect();
    v.join(" ")
}
