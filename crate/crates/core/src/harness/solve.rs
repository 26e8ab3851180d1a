use std::time::Instant;

use rayon::prelude::*;

use crate::chromosome::{Individual, Sense};
use crate::config::BrkgaConfig;
use crate::control::{abrkga_tick, apply_population_resize, QController, ScheduleBounds};
use crate::decoder::Decoder;
use crate::diversity::{migrate, population_diversity, reset_population, shake, StallCounter};
use crate::error::Result;
use crate::ipr::{ipr, pick_ipr_pair, Metric};
use crate::population::{init_population, Population, Ranking};
use crate::rng::{Phase, RngStream};

use super::config::{ControlMode, RunConfig};
use super::trace::{Event, RunTrace, TraceRecord};

/// Why a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    MaxGenerations,
    MaxStall,
    WallClock,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    /// Best individual ever decoded on the first objective.
    pub best: Individual,
    /// Decoded solution of `best`, when the decoder describes one.
    pub solution: Option<Vec<usize>>,
    pub trace: RunTrace,
    pub stop: StopReason,
}

/// Checks the stopping rules before generation `next_gen` is evolved.
pub(crate) fn should_stop(
    run: &RunConfig,
    next_gen: u64,
    stall: u64,
    started: Instant,
) -> Option<StopReason> {
    if run.stop.max_generations.is_some_and(|g| next_gen > g) {
        return Some(StopReason::MaxGenerations);
    }
    if run.stop.max_stall.is_some_and(|s| stall >= s) {
        return Some(StopReason::MaxStall);
    }
    if run
        .stop
        .wall_clock_seconds
        .is_some_and(|w| started.elapsed().as_secs_f64() >= w)
    {
        return Some(StopReason::WallClock);
    }
    None
}

/// Trace statistics over a set of islands on the first objective.
pub(crate) fn record<'a>(
    generation: u64,
    islands: impl Iterator<Item = &'a Population>,
    sense: Sense,
    events: Vec<Event>,
    stall: u64,
) -> Result<TraceRecord> {
    let mut best: Option<f64> = None;
    let mut total = 0.0;
    let mut count = 0usize;
    let mut diversity = 0.0;
    let mut k = 0usize;
    for pop in islands {
        let b = pop.best().score().primary();
        if best.is_none_or(|cur| sense.is_better(b, cur)) {
            best = Some(b);
        }
        total += pop.mean_primary() * pop.len() as f64;
        count += pop.len();
        diversity += population_diversity(pop)?;
        k += 1;
    }
    Ok(TraceRecord {
        generation,
        best: best.unwrap_or(f64::NAN),
        mean: total / count.max(1) as f64,
        diversity: diversity / k.max(1) as f64,
        events,
        stall,
    })
}

fn apply_schedule<D: Decoder + ?Sized>(
    islands: Vec<Population>,
    cfg: &mut BrkgaConfig,
    bounds: &ScheduleBounds,
    base_min_distance: f64,
    generation: u64,
    decoder: &D,
) -> Result<Vec<Population>> {
    let snap = abrkga_tick(generation, bounds);
    cfg.p = snap.p;
    cfg.p_e = snap.p_e;
    cfg.p_m = snap.p_m;
    cfg.elite_min_distance = base_min_distance * snap.alpha;
    cfg.validate()?;
    islands
        .into_iter()
        .enumerate()
        .map(|(k, pop)| {
            let mut rng = RngStream::for_phase(cfg.seed, k, generation, Phase::Control);
            let mut out = apply_population_resize(&pop, snap.p, decoder, &mut rng)?;
            out.set_sizes(snap.p_e, snap.p_m)?;
            Ok(out)
        })
        .collect()
}

/// Runs the configured solver on `decoder`.
pub fn solve<D: Decoder + ?Sized>(run: &RunConfig, decoder: &D) -> Result<SolveOutcome> {
    solve_observed(run, decoder, |_| {})
}

/// Like [`solve`], calling `observer` with every trace record as it is made.
///
/// Each generation: parameter control, evolution of every island,
/// migration, path-relinking, then shake or reset on the stall counter.
/// Shake and reset fire whenever the stall counter reaches a positive
/// multiple of their thresholds; reset wins when both are due.
pub fn solve_observed<D, F>(run: &RunConfig, decoder: &D, mut observer: F) -> Result<SolveOutcome>
where
    D: Decoder + ?Sized,
    F: FnMut(&TraceRecord),
{
    run.stop.validate()?;
    let mut cfg = run.brkga_for(decoder.num_genes())?;
    let n = cfg.n;
    let seed = cfg.seed;
    let ranking = Ranking::primary(decoder);
    let sense = decoder.senses()[0];
    let base_min_distance = cfg.elite_min_distance;

    let bounds = match run.control {
        ControlMode::Schedule => Some(run.schedule.resolve(&cfg, &run.stop)?),
        _ => None,
    };
    let mut qctl = match run.control {
        ControlMode::QLearning => Some(QController::new(
            run.q.learning_rate,
            run.q.discount,
            run.q.eta0,
            run.q.decay,
        )?),
        _ => None,
    };
    if let Some(b) = &bounds {
        let snap = abrkga_tick(0, b);
        cfg.p = snap.p;
        cfg.p_e = snap.p_e;
        cfg.p_m = snap.p_m;
        cfg.elite_min_distance = base_min_distance * snap.alpha;
        cfg.validate()?;
    }

    let mut islands: Vec<Population> = (0..cfg.num_islands)
        .map(|k| {
            let mut rng = RngStream::for_phase(seed, k, 0, Phase::Init);
            init_population(&cfg, decoder, &[], &mut rng)
        })
        .collect::<Result<_>>()?;

    let mut incumbent = islands[0].best().clone();
    let improve = |inc: &mut Individual, cand: &Individual| {
        if ranking.is_better(cand, inc) {
            *inc = cand.clone();
        }
    };
    for pop in &islands[1..] {
        improve(&mut incumbent, pop.best());
    }
    let mut stall = StallCounter::new();
    stall.seed(incumbent.score());

    let mut trace = RunTrace::default();
    let first = record(0, islands.iter(), sense, Vec::new(), 0)?;
    observer(&first);
    trace.records.push(first);

    let started = Instant::now();
    let mut generation = 0u64;
    let stop = loop {
        if let Some(reason) = should_stop(run, generation + 1, stall.stall(), started) {
            break reason;
        }
        generation += 1;
        let g = generation;
        let mut events = Vec::new();

        if let Some(b) = &bounds {
            islands = apply_schedule(islands, &mut cfg, b, base_min_distance, g, decoder)?;
        }
        let previous_best = incumbent.score().primary();
        if let Some(q) = qctl.as_mut() {
            let mut rng = RngStream::for_phase(seed, 0, g, Phase::Control);
            q.choose(stall.stall(), g, &mut cfg, &mut rng)?;
            cfg.validate()?;
            for pop in islands.iter_mut() {
                pop.set_sizes(cfg.p_e, cfg.p_m)?;
            }
        }

        islands = islands
            .par_iter()
            .enumerate()
            .map(|(k, pop)| {
                let mut rng = RngStream::for_phase(seed, k, g, Phase::Evolve);
                crate::evolve::evolve_generation(pop, &cfg, decoder, &mut rng)
            })
            .collect::<Result<_>>()?;
        for pop in &islands {
            improve(&mut incumbent, pop.best());
        }

        if islands.len() > 1
            && cfg.migration_interval > 0
            && cfg.migration_count > 0
            && g.is_multiple_of(cfg.migration_interval)
        {
            migrate(&mut islands, cfg.migration_count)?;
            events.push(Event::Migrate);
        }

        if let Some(iv) = cfg.ipr_interval {
            if islands.len() > 1 && g.is_multiple_of(iv) {
                let mut rng = RngStream::for_phase(seed, 0, g, Phase::Ipr);
                let metric = Metric::for_variant(cfg.ipr_variant);
                let found = pick_ipr_pair(&islands, n, cfg.ipr_min_distance, metric, &mut rng)?
                    .map(|pair| {
                        ipr(
                            pair.base,
                            pair.guide,
                            cfg.ipr_variant,
                            cfg.ipr_block_size,
                            cfg.ipr_depth,
                            decoder,
                            &ranking,
                        )
                        .map(|r| (pair.base_island, r.best))
                    })
                    .transpose()?;
                if let Some((island, winner)) = found {
                    events.push(Event::Ipr);
                    improve(&mut incumbent, &winner);
                    let pop = &mut islands[island];
                    let worst_elite = pop.elite_size() - 1;
                    let already = pop.members().iter().any(|m| m.chromosome == winner.chromosome);
                    if run.ipr_replace
                        && !already
                        && ranking.is_better(&winner, &pop.members()[worst_elite])
                    {
                        pop.members_mut()[worst_elite] = winner;
                        pop.sort();
                    }
                }
            }
        }

        stall.observe(incumbent.score(), sense);
        if let Some(q) = qctl.as_mut() {
            let reward = QController::reward(previous_best, incumbent.score().primary(), sense);
            q.learn(reward, stall.stall());
        }

        let s = stall.stall();
        let due = |t: Option<u64>| s > 0 && t.is_some_and(|t| s.is_multiple_of(t));
        if due(cfg.stall_reset) {
            islands = (0..islands.len())
                .map(|k| {
                    let mut rng = RngStream::for_phase(seed, k, g, Phase::Reset);
                    let mut pop = reset_population(&cfg, decoder, &mut rng)?;
                    pop.set_generation(g);
                    Ok(pop)
                })
                .collect::<Result<_>>()?;
            events.push(Event::Reset);
        } else if due(cfg.stall_shake) {
            islands = islands
                .iter()
                .enumerate()
                .map(|(k, pop)| {
                    let mut rng = RngStream::for_phase(seed, k, g, Phase::Shake);
                    shake(pop, cfg.shake_intensity, &cfg, decoder, &mut rng)
                })
                .collect::<Result<_>>()?;
            events.push(Event::Shake);
        }
        if events.iter().any(|e| matches!(e, Event::Reset | Event::Shake)) {
            for pop in &islands {
                improve(&mut incumbent, pop.best());
            }
        }

        let rec = record(g, islands.iter(), sense, events, stall.stall())?;
        observer(&rec);
        trace.records.push(rec);
    };

    let solution = decoder.describe(&incumbent.chromosome[..n]);
    Ok(SolveOutcome {
        best: incumbent,
        solution,
        trace,
        stop,
    })
}
