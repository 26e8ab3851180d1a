//! Multi-population multi-objective evolution.
//!
//! One single-objective island per objective (the Ω islands) evolves with
//! the classical step. Each all-objective island (the Π islands) mates from
//! an elite pool made of its own Pareto-ranked elite, the current best of
//! every Ω island and any elites imported from the other Π islands at the
//! last pool-mixing event. Offspring and mutants always survive.

use rand::RngCore;
use rayon::prelude::*;

use crate::chromosome::{Chromosome, Individual};
use crate::config::BrkgaConfig;
use crate::decoder::{decode_batch, evaluate, Decoder};
use crate::error::{BrkgaError, Result};
use crate::evolve::{breed, evolve_generation};
use crate::population::{init_population_ranked, random_member, Population, Ranking};
use crate::rng::{Phase, RngStream};

use super::archive::ParetoArchive;

#[derive(Debug, Clone)]
pub struct MpBrkgaConfig {
    /// Parameters shared by every island.
    pub base: BrkgaConfig,
    /// Number of all-objective islands.
    pub pi_count: usize,
    /// Generations between pool-mixing events.
    pub pool_mix_interval: u64,
    pub archive_capacity: Option<usize>,
    /// Keep one chromosome per archived objective vector.
    pub archive_objective_dedup: bool,
}

impl MpBrkgaConfig {
    pub fn new(base: BrkgaConfig, pi_count: usize, pool_mix_interval: u64) -> Self {
        MpBrkgaConfig {
            base,
            pi_count,
            pool_mix_interval,
            archive_capacity: None,
            archive_objective_dedup: true,
        }
    }

    pub fn validate(&self, objectives: usize) -> Result<()> {
        self.base.validate()?;
        if objectives == 0 {
            return Err(BrkgaError::config("at least one objective required"));
        }
        if self.pool_mix_interval == 0 {
            return Err(BrkgaError::config("pool mixing interval must be at least 1"));
        }
        Ok(())
    }
}

/// Islands, pending pool imports and the Pareto archive.
#[derive(Debug, Clone)]
pub struct MpState {
    /// One island per objective, in objective order.
    pub omega: Vec<Population>,
    pub pi: Vec<Population>,
    /// Elites imported into each Π pool at the last mixing event.
    pub imports: Vec<Vec<Individual>>,
    pub archive: ParetoArchive,
    pub generation: u64,
}

impl MpState {
    /// Island index used for random streams: Ω islands first, then Π.
    fn stream_island(omega_len: usize, pi_index: usize) -> usize {
        omega_len + pi_index
    }

    pub fn islands(&self) -> impl Iterator<Item = &Population> {
        self.omega.iter().chain(&self.pi)
    }
}

fn dedup_by_chromosome(items: Vec<Individual>) -> Vec<Individual> {
    let mut out: Vec<Individual> = Vec::with_capacity(items.len());
    for it in items {
        if !out.iter().any(|o| o.chromosome == it.chromosome) {
            out.push(it);
        }
    }
    out
}

/// Builds the initial islands and archive.
pub fn mp_brkga_init<D: Decoder + ?Sized>(config: &MpBrkgaConfig, decoder: &D) -> Result<MpState> {
    let senses = decoder.senses().to_vec();
    config.validate(senses.len())?;
    let base = &config.base;
    let m = senses.len();
    let omega = (0..m)
        .map(|j| {
            let ranking = Ranking::Objective {
                index: j,
                sense: senses[j],
            };
            let mut rng = RngStream::for_phase(base.seed, j, 0, Phase::Init);
            init_population_ranked(base, decoder, ranking, &[], &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    let pi = (0..config.pi_count)
        .map(|i| {
            let ranking = Ranking::Pareto {
                senses: senses.clone(),
            };
            let island = MpState::stream_island(m, i);
            let mut rng = RngStream::for_phase(base.seed, island, 0, Phase::Init);
            init_population_ranked(base, decoder, ranking, &[], &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut archive = ParetoArchive::new(senses)
        .with_objective_dedup(config.archive_objective_dedup)
        .with_capacity_limit(config.archive_capacity);
    for pop in omega.iter().chain(&pi) {
        for ind in pop.members() {
            archive.insert(ind);
        }
    }
    Ok(MpState {
        omega,
        imports: vec![Vec::new(); pi.len()],
        pi,
        archive,
        generation: 0,
    })
}

/// One Π-island generation mating from its elite pool.
fn evolve_pi_island<D: Decoder + ?Sized>(
    pop: &Population,
    omega_bests: &[Individual],
    imports: &[Individual],
    config: &BrkgaConfig,
    decoder: &D,
    rng: &mut RngStream,
) -> Result<Population> {
    let p_e = config.p_e;
    let mut pool: Vec<Individual> = pop.elite().to_vec();
    pool.extend_from_slice(omega_bests);
    pool.extend_from_slice(imports);
    let pool = dedup_by_chromosome(pool);
    let order = pop.ranking().order(&pool);
    let elite: Vec<Individual> = order.into_iter().take(p_e).map(|i| pool[i].clone()).collect();

    let mut mating: Vec<Individual> = elite.clone();
    mating.extend_from_slice(pop.non_elite());
    let elite_idx: Vec<usize> = (0..elite.len()).collect();
    let rest_idx: Vec<usize> = (elite.len()..mating.len()).collect();

    let generation = pop.generation() + 1;
    let mut next = elite;
    let mutants: Vec<Chromosome> = (0..config.p_m).map(|_| random_member(config, rng)).collect();
    next.extend(decode_batch(decoder, mutants).map_err(|e| e.at_generation(generation))?);
    let offspring_seed = rng.next_u64();
    let offspring: Vec<Individual> = (0..config.offspring())
        .into_par_iter()
        .map(|i| {
            let mut child_rng = RngStream::new(offspring_seed, i as u64);
            let child = breed(&mating, &elite_idx, &rest_idx, config, &mut child_rng)?;
            evaluate(decoder, child)
        })
        .collect::<Result<_>>()
        .map_err(|e| e.at_generation(generation))?;
    next.extend(offspring);
    let mut out = Population::from_members(next, p_e, config.p_m, pop.ranking().clone())?;
    out.set_generation(generation);
    Ok(out)
}

/// Advances every island by one generation, mixes the Π pools when due and
/// archives every member of the new populations.
pub fn mp_brkga_generation<D: Decoder + ?Sized>(
    state: &MpState,
    config: &MpBrkgaConfig,
    decoder: &D,
) -> Result<MpState> {
    let base = &config.base;
    let generation = state.generation + 1;
    let m = state.omega.len();

    let omega: Vec<Population> = state
        .omega
        .par_iter()
        .enumerate()
        .map(|(j, pop)| {
            let mut rng = RngStream::for_phase(base.seed, j, generation, Phase::Evolve);
            evolve_generation(pop, base, decoder, &mut rng)
        })
        .collect::<Result<_>>()?;

    let omega_bests: Vec<Individual> = state.omega.iter().map(|p| p.best().clone()).collect();
    let pi: Vec<Population> = state
        .pi
        .par_iter()
        .enumerate()
        .map(|(i, pop)| {
            let island = MpState::stream_island(m, i);
            let mut rng = RngStream::for_phase(base.seed, island, generation, Phase::Evolve);
            evolve_pi_island(pop, &omega_bests, &state.imports[i], base, decoder, &mut rng)
        })
        .collect::<Result<_>>()?;

    let mut imports = vec![Vec::new(); pi.len()];
    if pi.len() > 1 && generation.is_multiple_of(config.pool_mix_interval) {
        for (i, slot) in imports.iter_mut().enumerate() {
            let merged: Vec<Individual> = pi
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .flat_map(|(_, p)| p.elite().iter().cloned())
                .collect();
            *slot = dedup_by_chromosome(merged);
        }
    }

    let mut archive = state.archive.clone();
    for pop in omega.iter().chain(&pi) {
        for ind in pop.members() {
            archive.insert(ind);
        }
    }
    Ok(MpState {
        omega,
        pi,
        imports,
        archive,
        generation,
    })
}
