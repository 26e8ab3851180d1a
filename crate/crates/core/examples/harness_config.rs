//! Driving the experiment harness from code: an INI config and instance
//! file, a traced run with an observer, and a small parameter sweep.
//!
//! cargo run --example harness_config

use brkga::harness::{load_problem, run_solve, run_sweep, solve_observed, Grid, RunConfig};
use std::path::Path;

const INSTANCE: &str = "\
# single machine, processing time and due date per job
8
3 6
5 20
2 4
7 30
4 12
6 25
1 2
5 18
";

const CONFIG: &str = "\
[problem]
kind = smtt
instance = jobs.txt

[evolution]
p = 40
p_e = 8
p_m = 4
islands = 2
migration_interval = 10
seed = 11

[triggers]
stall_shake = 15
stall_reset = 45

[stopping]
max_generations = 60

[output]
quiet = true
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("brkga-harness-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join("jobs.txt"), INSTANCE)?;
    std::fs::write(dir.join("run.ini"), CONFIG)?;

    let mut run = RunConfig::from_file(&dir.join("run.ini"))?;
    run.output.out_dir = dir.clone();

    let problem = load_problem(&run, false)?;
    let out = solve_observed(&run, &problem, |rec| {
        if !rec.events.is_empty() {
            println!("gen {:3} best {} [{}]", rec.generation, rec.best, rec.event_tag());
        }
    })?;
    println!("stopped by {:?} with tardiness {}", out.stop, out.best.score().primary());

    run_solve(&run)?;
    for f in [&run.output.trace_file, &run.output.best_file] {
        println!("wrote {}", run.output.resolve(f).display());
    }

    let grid = Grid::parse(Path::new("grid"), "p_e = 4, 8\nrho = 0.6, 0.8\n")?;
    print!("{}", run_sweep(&run, &grid)?);

    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}
