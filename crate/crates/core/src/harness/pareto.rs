use std::time::Instant;

use crate::chromosome::Individual;
use crate::decoder::Decoder;
use crate::diversity::StallCounter;
use crate::error::Result;
use crate::mo::{mp_brkga_generation, mp_brkga_init, MpBrkgaConfig, MpState};
use crate::population::Ranking;

use super::config::RunConfig;
use super::solve::{record, should_stop, StopReason};
use super::trace::{Event, RunTrace};

#[derive(Debug, Clone)]
pub struct ParetoOutcome {
    /// Final islands and archive.
    pub state: MpState,
    /// Best individual ever decoded on the first objective.
    pub best: Individual,
    pub solution: Option<Vec<usize>>,
    pub trace: RunTrace,
    pub stop: StopReason,
}

/// The multi-population configuration implied by `run`.
pub fn mp_config(run: &RunConfig, n: usize) -> Result<MpBrkgaConfig> {
    let mut cfg = MpBrkgaConfig::new(
        run.brkga_for(n)?,
        run.pareto.pi_islands,
        run.pareto.pool_mix_interval,
    );
    cfg.archive_capacity = run.pareto.archive_capacity;
    cfg.archive_objective_dedup = run.pareto.archive_objective_dedup;
    Ok(cfg)
}

/// Multi-objective run. Trace rows cover every island on the first
/// objective; pool-mixing generations are tagged `migrate`. Shake, reset,
/// path-relinking and parameter control are not applied.
pub fn solve_pareto<D: Decoder + ?Sized>(run: &RunConfig, decoder: &D) -> Result<ParetoOutcome> {
    run.stop.validate()?;
    let cfg = mp_config(run, decoder.num_genes())?;
    let ranking = Ranking::primary(decoder);
    let sense = decoder.senses()[0];

    let mut state = mp_brkga_init(&cfg, decoder)?;
    let mut best = state.islands().next().expect("at least one island").best().clone();
    for pop in state.islands() {
        if ranking.is_better(pop.best(), &best) {
            best = pop.best().clone();
        }
    }
    let mut stall = StallCounter::new();
    stall.seed(best.score());
    let mut trace = RunTrace::default();
    trace.records.push(record(0, state.islands(), sense, Vec::new(), 0)?);

    let started = Instant::now();
    let stop = loop {
        if let Some(reason) = should_stop(run, state.generation + 1, stall.stall(), started) {
            break reason;
        }
        state = mp_brkga_generation(&state, &cfg, decoder)?;
        for pop in state.islands() {
            if ranking.is_better(pop.best(), &best) {
                best = pop.best().clone();
            }
        }
        stall.observe(best.score(), sense);
        let mixed = state.pi.len() > 1 && state.generation % cfg.pool_mix_interval == 0;
        let events = if mixed { vec![Event::Migrate] } else { Vec::new() };
        trace.records.push(record(
            state.generation,
            state.islands(),
            sense,
            events,
            stall.stall(),
        )?);
    };
    let solution = decoder.describe(&best.chromosome[..cfg.base.n]);
    Ok(ParetoOutcome {
        state,
        best,
        solution,
        trace,
        stop,
    })
}
