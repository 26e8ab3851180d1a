//! Operators against premature convergence and the metrics that trigger them.

use crate::chromosome::{Chromosome, Fitness, Individual, Sense};
use crate::config::BrkgaConfig;
use crate::decoder::{decode_batch, Decoder};
use crate::error::{BrkgaError, Result};
use crate::population::{init_population, random_member, Population};
use crate::rng::RngStream;

/// Generations since the incumbent last strictly improved.
#[derive(Debug, Clone, Default)]
pub struct StallCounter {
    generations_since_improvement: u64,
    best_ever: Option<Fitness>,
}

impl StallCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stall(&self) -> u64 {
        self.generations_since_improvement
    }

    pub fn best_ever(&self) -> Option<&Fitness> {
        self.best_ever.as_ref()
    }

    /// Records the first observation without counting a generation.
    pub fn seed(&mut self, fitness: &Fitness) {
        if self.best_ever.is_none() {
            self.best_ever = Some(fitness.clone());
        }
    }

    /// Feeds one generation's best on the first objective. Returns whether
    /// it strictly improved the incumbent.
    pub fn observe(&mut self, fitness: &Fitness, sense: Sense) -> bool {
        let improved = match &self.best_ever {
            None => true,
            Some(b) => sense.is_better(fitness.primary(), b.primary()),
        };
        if improved {
            self.best_ever = Some(fitness.clone());
            self.generations_since_improvement = 0;
        } else {
            self.generations_since_improvement += 1;
        }
        improved
    }
}

/// A fully re-randomized population.
pub fn reset_population<D: Decoder + ?Sized>(
    config: &BrkgaConfig,
    decoder: &D,
    rng: &mut RngStream,
) -> Result<Population> {
    init_population(config, decoder, &[], rng)
}

/// Number of perturbation moves per elite for intensity `beta` over `n` genes.
pub fn shake_moves(beta: f64, n: usize) -> usize {
    // tolerance keeps products like 0.3 * 10 from rounding up to 4
    (beta * n as f64 - 1e-9).ceil().max(0.0) as usize
}

/// Applies `moves` random moves to the first `n` keys: each move either
/// resamples one key or swaps two positions, with equal probability.
pub fn perturb(keys: &mut [f64], n: usize, moves: usize, rng: &mut RngStream) {
    for _ in 0..moves {
        if rng.chance(0.5) {
            let i = rng.below(n);
            keys[i] = rng.next_key();
        } else {
            let i = rng.below(n);
            let j = rng.below(n);
            keys.swap(i, j);
        }
    }
}

/// Perturbs every elite chromosome and replaces all non-elite members with
/// fresh random chromosomes.
///
/// In self-adaptive mode each elite uses the intensity stored in its own
/// second control gene instead of `beta`.
pub fn shake<D: Decoder + ?Sized>(
    pop: &Population,
    beta: f64,
    config: &BrkgaConfig,
    decoder: &D,
    rng: &mut RngStream,
) -> Result<Population> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(BrkgaError::invalid(format!("shake intensity {beta} outside [0, 1]")));
    }
    let n = config.n;
    let mut kept = Vec::new();
    let mut fresh = Vec::new();
    for m in pop.elite() {
        let b = if config.self_adaptive {
            m.chromosome[n + 1]
        } else {
            beta
        };
        let moves = shake_moves(b, n);
        if moves == 0 {
            kept.push(m.clone());
            continue;
        }
        let mut c = m.chromosome.clone();
        perturb(c.keys_mut(), n, moves, rng);
        fresh.push(c);
    }
    for _ in pop.elite_size()..pop.len() {
        fresh.push(random_member(config, rng));
    }
    kept.extend(decode_batch(decoder, fresh)?);
    let mut out = Population::from_members(
        kept,
        pop.elite_size(),
        pop.mutant_size(),
        pop.ranking().clone(),
    )?;
    out.set_generation(pop.generation());
    Ok(out)
}

/// Ring migration: the best `count` of island `k` replace the worst `count`
/// of island `k + 1 (mod K)`.
pub fn migrate(islands: &mut [Population], count: usize) -> Result<()> {
    if let Some(p) = islands.iter().find(|p| count > p.elite_size()) {
        return Err(BrkgaError::invalid(format!(
            "cannot migrate {count} individuals with an elite of {}",
            p.elite_size()
        )));
    }
    let k = islands.len();
    if k < 2 || count == 0 {
        return Ok(());
    }
    let emigrants: Vec<Vec<Individual>> = islands
        .iter()
        .map(|p| p.members()[..count].to_vec())
        .collect();
    for (src, migrants) in emigrants.into_iter().enumerate() {
        let dst = &mut islands[(src + 1) % k];
        let members = dst.members_mut();
        let keep = members.len() - count;
        members.truncate(keep);
        members.extend(migrants);
        dst.sort();
    }
    Ok(())
}

/// Mean absolute difference between keys.
pub fn mean_abs_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>() / a.len().max(1) as f64
}

/// Greedy best-first elite selection that skips members closer than
/// `min_dist` to an already selected one. Shortfalls are filled with the
/// best skipped members. Returns ranks in ascending order.
pub fn elite_diversity_filter<F>(
    sorted_members: &[Individual],
    elite_size: usize,
    min_dist: f64,
    metric: F,
) -> Vec<usize>
where
    F: Fn(&Chromosome, &Chromosome) -> f64,
{
    let target = elite_size.min(sorted_members.len());
    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    let mut skipped = Vec::new();
    for (i, m) in sorted_members.iter().enumerate() {
        if chosen.len() == target {
            break;
        }
        let far = chosen
            .iter()
            .all(|&j| metric(&m.chromosome, &sorted_members[j].chromosome) >= min_dist);
        if far {
            chosen.push(i);
        } else {
            skipped.push(i);
        }
    }
    let shortfall = target - chosen.len();
    chosen.extend(skipped.into_iter().take(shortfall));
    chosen.sort_unstable();
    chosen
}

/// Mean over member pairs of the mean absolute key difference.
pub fn population_diversity(pop: &Population) -> Result<f64> {
    let chroms: Vec<&[f64]> = pop.members().iter().map(|m| m.chromosome.keys()).collect();
    chromosome_diversity(&chroms)
}

/// [`population_diversity`] over bare key vectors.
///
/// Per gene, the pairwise absolute differences are summed in
/// `O(p log p)` from the sorted column.
pub fn chromosome_diversity(chroms: &[&[f64]]) -> Result<f64> {
    let p = chroms.len();
    if p < 2 {
        return Err(BrkgaError::invalid("diversity needs at least two members"));
    }
    let n = chroms[0].len();
    let mut total = 0.0;
    let mut column = vec![0.0; p];
    for g in 0..n {
        for (slot, c) in column.iter_mut().zip(chroms) {
            *slot = c[g];
        }
        column.sort_by(f64::total_cmp);
        total += column
            .iter()
            .enumerate()
            .map(|(j, &x)| x * (2.0 * j as f64 - (p as f64 - 1.0)))
            .sum::<f64>();
    }
    let pairs = (p * (p - 1) / 2) as f64;
    Ok(total / pairs / n as f64)
}
