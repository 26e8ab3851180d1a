use std::cmp::Ordering;

use crate::chromosome::{new_random_chromosome, Chromosome, Individual, Sense};
use crate::config::{BrkgaConfig, CONTROL_GENES};
use crate::decoder::{decode_batch, Decoder};
use crate::error::{BrkgaError, Result};
use crate::mo::{crowding_distance, non_dominated_sort};
use crate::rng::RngStream;

/// How members of a population are ordered best-first.
#[derive(Debug, Clone, PartialEq)]
pub enum Ranking {
    /// By a single objective.
    Objective { index: usize, sense: Sense },
    /// By non-dominated front, then by descending crowding distance.
    Pareto { senses: Vec<Sense> },
}

impl Ranking {
    /// Ranks by the decoder's first objective.
    pub fn primary<D: Decoder + ?Sized>(decoder: &D) -> Self {
        Ranking::Objective {
            index: 0,
            sense: decoder.senses()[0],
        }
    }

    /// Stable best-first order of `members` as a permutation of indices.
    pub fn order(&self, members: &[Individual]) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..members.len()).collect();
        match self {
            Ranking::Objective { index, sense } => {
                idx.sort_by(|&a, &b| {
                    sense.compare(
                        members[a].score().value(*index),
                        members[b].score().value(*index),
                    )
                });
            }
            Ranking::Pareto { senses } => {
                let fits: Vec<&[f64]> = members.iter().map(|m| m.score().values()).collect();
                let fronts = non_dominated_sort(&fits, senses);
                let mut front_of = vec![0usize; members.len()];
                let mut crowd = vec![0.0f64; members.len()];
                for (f, front) in fronts.iter().enumerate() {
                    let pts: Vec<&[f64]> = front.iter().map(|&i| fits[i]).collect();
                    for (&i, d) in front.iter().zip(crowding_distance(&pts)) {
                        front_of[i] = f;
                        crowd[i] = d;
                    }
                }
                idx.sort_by(|&a, &b| {
                    front_of[a]
                        .cmp(&front_of[b])
                        .then_with(|| crowd[b].total_cmp(&crowd[a]))
                });
            }
        }
        idx
    }

    /// Compares two individuals in isolation. For Pareto ranking this is a
    /// dominance check: `Less` iff `a` dominates `b`.
    pub fn compare(&self, a: &Individual, b: &Individual) -> Ordering {
        match self {
            Ranking::Objective { index, sense } => {
                sense.compare(a.score().value(*index), b.score().value(*index))
            }
            Ranking::Pareto { senses } => {
                let (fa, fb) = (a.score().values(), b.score().values());
                if crate::mo::dominates_values(fa, fb, senses) {
                    Ordering::Less
                } else if crate::mo::dominates_values(fb, fa, senses) {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            }
        }
    }

    /// True when `a` is strictly better than `b`.
    pub fn is_better(&self, a: &Individual, b: &Individual) -> bool {
        self.compare(a, b) == Ordering::Less
    }
}

/// A best-first sorted collection of decoded individuals.
#[derive(Debug, Clone)]
pub struct Population {
    members: Vec<Individual>,
    elite_size: usize,
    mutant_size: usize,
    ranking: Ranking,
    generation: u64,
}

impl Population {
    /// Builds a population from decoded members and sorts it.
    pub fn from_members(
        members: Vec<Individual>,
        elite_size: usize,
        mutant_size: usize,
        ranking: Ranking,
    ) -> Result<Self> {
        if members.iter().any(|m| !m.is_decoded()) {
            return Err(BrkgaError::invalid("population members must be decoded"));
        }
        check_sizes(members.len(), elite_size, mutant_size)?;
        let mut pop = Population {
            members,
            elite_size,
            mutant_size,
            ranking,
            generation: 0,
        };
        pop.sort();
        Ok(pop)
    }

    pub(crate) fn sort(&mut self) {
        let order = self.ranking.order(&self.members);
        let mut slots: Vec<Option<Individual>> = self.members.drain(..).map(Some).collect();
        self.members = order
            .into_iter()
            .map(|i| slots[i].take().expect("order is a permutation"))
            .collect();
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub(crate) fn members_mut(&mut self) -> &mut Vec<Individual> {
        &mut self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn best(&self) -> &Individual {
        &self.members[0]
    }

    pub fn elite_size(&self) -> usize {
        self.elite_size
    }

    pub fn mutant_size(&self) -> usize {
        self.mutant_size
    }

    pub fn ranking(&self) -> &Ranking {
        &self.ranking
    }

    /// Generations evolved since initialization.
    pub fn generation(&self) -> u64 {
        self.generation
    }

    pub(crate) fn set_generation(&mut self, generation: u64) {
        self.generation = generation;
    }

    pub fn elite(&self) -> &[Individual] {
        &self.members[..self.elite_size]
    }

    pub fn non_elite(&self) -> &[Individual] {
        &self.members[self.elite_size..]
    }

    /// Splits into `(elite, non_elite)` without copying.
    pub fn partition(&self) -> (&[Individual], &[Individual]) {
        self.members.split_at(self.elite_size)
    }

    /// Changes the elite and mutant counts for subsequent generations.
    pub fn set_sizes(&mut self, elite_size: usize, mutant_size: usize) -> Result<()> {
        check_sizes(self.members.len(), elite_size, mutant_size)?;
        self.elite_size = elite_size;
        self.mutant_size = mutant_size;
        Ok(())
    }

    /// Mean of the first objective over all members.
    pub fn mean_primary(&self) -> f64 {
        self.members.iter().map(|m| m.score().primary()).sum::<f64>() / self.len() as f64
    }
}

fn check_sizes(p: usize, p_e: usize, p_m: usize) -> Result<()> {
    if p_e == 0 || 2 * p_e >= p || p_e + p_m >= p {
        return Err(BrkgaError::invalid(format!(
            "sizes violate 1 <= p_e < p/2 and p_e + p_m < p (p = {p}, p_e = {p_e}, p_m = {p_m})"
        )));
    }
    Ok(())
}

/// A fresh random chromosome of the configured length.
pub(crate) fn random_member(config: &BrkgaConfig, rng: &mut RngStream) -> Chromosome {
    new_random_chromosome(config.chromosome_len(), rng).expect("validated config has n >= 1")
}

/// Initial population ranked by the decoder's first objective.
pub fn init_population<D: Decoder + ?Sized>(
    config: &BrkgaConfig,
    decoder: &D,
    warm_starts: &[Chromosome],
    rng: &mut RngStream,
) -> Result<Population> {
    init_population_ranked(config, decoder, Ranking::primary(decoder), warm_starts, rng)
}

/// Initial population of `p` decoded members: the warm starts verbatim,
/// then random chromosomes.
///
/// In self-adaptive mode each warm start receives two random control genes.
pub fn init_population_ranked<D: Decoder + ?Sized>(
    config: &BrkgaConfig,
    decoder: &D,
    ranking: Ranking,
    warm_starts: &[Chromosome],
    rng: &mut RngStream,
) -> Result<Population> {
    config.validate()?;
    check_decoder(config, decoder)?;
    if warm_starts.len() > config.p {
        return Err(BrkgaError::invalid(format!(
            "{} warm starts exceed population size {}",
            warm_starts.len(),
            config.p
        )));
    }
    let mut chromosomes = Vec::with_capacity(config.p);
    for (i, w) in warm_starts.iter().enumerate() {
        if w.len() != config.n {
            return Err(BrkgaError::invalid(format!(
                "warm start {i} has {} keys, expected {}",
                w.len(),
                config.n
            )));
        }
        let mut keys = w.keys().to_vec();
        if config.self_adaptive {
            keys.extend((0..CONTROL_GENES).map(|_| rng.next_key()));
        }
        chromosomes.push(Chromosome::from_keys_unchecked(keys));
    }
    while chromosomes.len() < config.p {
        chromosomes.push(random_member(config, rng));
    }
    let members = decode_batch(decoder, chromosomes)?;
    Population::from_members(members, config.p_e, config.p_m, ranking)
}

pub(crate) fn check_decoder<D: Decoder + ?Sized>(config: &BrkgaConfig, decoder: &D) -> Result<()> {
    if decoder.num_genes() != config.n {
        return Err(BrkgaError::config(format!(
            "decoder reads {} genes but config has n = {}",
            decoder.num_genes(),
            config.n
        )));
    }
    if decoder.num_objectives() == 0 {
        return Err(BrkgaError::config("decoder declares no objectives"));
    }
    Ok(())
}
