//! One BRKGA generation and its crossover operators.

use rand::RngCore;
use rayon::prelude::*;

use crate::chromosome::{Chromosome, Individual};
use crate::config::{BiasKind, BrkgaConfig, ParentPool};
use crate::control::self_adaptive_rho;
use crate::decoder::{decode_batch, evaluate, Decoder};
use crate::diversity::{elite_diversity_filter, mean_abs_distance};
use crate::error::{BrkgaError, Result};
use crate::population::{check_decoder, random_member, Population};
use crate::rng::RngStream;

/// Parametrized uniform crossover: each gene comes from `elite` with
/// probability `rho`, otherwise from `other`.
pub fn biased_uniform_crossover(
    elite: &Chromosome,
    other: &Chromosome,
    rho: f64,
    rng: &mut RngStream,
) -> Result<Chromosome> {
    if elite.len() != other.len() {
        return Err(BrkgaError::invalid(format!(
            "parent lengths differ: {} vs {}",
            elite.len(),
            other.len()
        )));
    }
    if !(rho > 0.5 && rho <= 1.0) {
        return Err(BrkgaError::invalid(format!("rho = {rho} outside (0.5, 1]")));
    }
    let keys = elite
        .iter()
        .zip(other.iter())
        .map(|(&e, &o)| if rng.chance(rho) { e } else { o })
        .collect();
    Ok(Chromosome::from_keys_unchecked(keys))
}

/// Weight of the parent at 1-based `rank`.
pub fn rank_bias_weight(rank: usize, kind: BiasKind) -> Result<f64> {
    if rank == 0 {
        return Err(BrkgaError::invalid("ranks start at 1"));
    }
    let r = rank as f64;
    Ok(match kind {
        BiasKind::Constant => 1.0,
        BiasKind::Linear => 1.0 / r,
        BiasKind::LogInverse => 1.0 / (r + 1.0).ln(),
        BiasKind::Quadratic => r.powi(-2),
        BiasKind::Exponential => (-r).exp(),
    })
}

/// Multi-parent crossover over rank-ordered parents (best first).
pub fn multi_parent_crossover(
    parents: &[&Chromosome],
    bias: BiasKind,
    rng: &mut RngStream,
) -> Result<Chromosome> {
    let weights: Vec<f64> = (1..=parents.len())
        .map(|r| rank_bias_weight(r, bias))
        .collect::<Result<_>>()?;
    weighted_crossover(parents, &weights, rng)
}

/// Gene-wise crossover where parent `j` contributes with probability
/// `weights[j] / sum(weights)`.
pub fn weighted_crossover(
    parents: &[&Chromosome],
    weights: &[f64],
    rng: &mut RngStream,
) -> Result<Chromosome> {
    let first = parents
        .first()
        .ok_or_else(|| BrkgaError::invalid("multi-parent crossover needs a parent"))?;
    if weights.len() != parents.len() {
        return Err(BrkgaError::invalid("one weight per parent required"));
    }
    if parents.iter().any(|p| p.len() != first.len()) {
        return Err(BrkgaError::invalid("parent lengths differ"));
    }
    if parents.len() == 1 {
        return Ok((*first).clone());
    }
    let total: f64 = weights.iter().sum();
    let keys = (0..first.len())
        .map(|i| {
            let target = rng.next_key() * total;
            let mut acc = 0.0;
            for (p, w) in parents.iter().zip(weights) {
                acc += w;
                if target < acc {
                    return p[i];
                }
            }
            parents[parents.len() - 1][i]
        })
        .collect();
    Ok(Chromosome::from_keys_unchecked(keys))
}

/// Samples `pi_e` elite and `pi_t - pi_e` other parents without replacement,
/// returned best-first.
pub fn select_parents<'a>(
    pop: &'a Population,
    pi_t: usize,
    pi_e: usize,
    pool: ParentPool,
    rng: &mut RngStream,
) -> Result<Vec<&'a Individual>> {
    let elite: Vec<usize> = (0..pop.elite_size()).collect();
    let rest: Vec<usize> = (pop.elite_size()..pop.len()).collect();
    let idx = select_parent_indices(&elite, &rest, pi_t, pi_e, pool, rng)?;
    Ok(idx.into_iter().map(|i| &pop.members()[i]).collect())
}

/// Index-level parent selection over an explicit elite / non-elite split.
/// Indices are population ranks, so ascending order is best-first.
pub(crate) fn select_parent_indices(
    elite: &[usize],
    rest: &[usize],
    pi_t: usize,
    pi_e: usize,
    pool: ParentPool,
    rng: &mut RngStream,
) -> Result<Vec<usize>> {
    if pi_e == 0 || pi_e > elite.len() || pi_t <= pi_e {
        return Err(BrkgaError::invalid(format!(
            "cannot draw {pi_e} elite parents of {pi_t} from {} elites",
            elite.len()
        )));
    }
    let others = pi_t - pi_e;
    let mut chosen: Vec<usize> = rng
        .sample_distinct(elite.len(), pi_e)
        .into_iter()
        .map(|i| elite[i])
        .collect();
    match pool {
        ParentPool::NonElite => {
            if others > rest.len() {
                return Err(BrkgaError::invalid(format!(
                    "cannot draw {others} non-elite parents from {}",
                    rest.len()
                )));
            }
            chosen.extend(rng.sample_distinct(rest.len(), others).into_iter().map(|i| rest[i]));
        }
        ParentPool::Entire => {
            let remaining: Vec<usize> = elite
                .iter()
                .chain(rest)
                .copied()
                .filter(|i| !chosen.contains(i))
                .collect();
            if others > remaining.len() {
                return Err(BrkgaError::invalid("population too small for pi_t parents"));
            }
            chosen.extend(
                rng.sample_distinct(remaining.len(), others)
                    .into_iter()
                    .map(|i| remaining[i]),
            );
        }
    }
    chosen.sort_unstable();
    Ok(chosen)
}

/// Elite and non-elite rank indices for the next mating round.
pub(crate) fn mating_split(pop: &Population, config: &BrkgaConfig) -> (Vec<usize>, Vec<usize>) {
    let elite = if config.elite_min_distance > 0.0 {
        elite_diversity_filter(
            pop.members(),
            config.p_e,
            config.elite_min_distance,
            |a: &Chromosome, b: &Chromosome| mean_abs_distance(a, b),
        )
    } else {
        (0..config.p_e).collect()
    };
    let rest = (0..pop.len()).filter(|i| !elite.contains(i)).collect();
    (elite, rest)
}

/// Produces one offspring chromosome from the mating pool.
pub(crate) fn breed(
    members: &[Individual],
    elite: &[usize],
    rest: &[usize],
    config: &BrkgaConfig,
    rng: &mut RngStream,
) -> Result<Chromosome> {
    let parents = select_parent_indices(
        elite,
        rest,
        config.pi_t,
        config.pi_e,
        config.second_parent_pool,
        rng,
    )?;
    if config.is_two_parent() {
        let e = &members[parents[0]].chromosome;
        let o = &members[parents[1]].chromosome;
        let rho = if config.self_adaptive {
            self_adaptive_rho(o, config.n)?
        } else {
            config.rho
        };
        biased_uniform_crossover(e, o, rho, rng)
    } else {
        let chroms: Vec<&Chromosome> = parents.iter().map(|&i| &members[i].chromosome).collect();
        multi_parent_crossover(&chroms, config.bias_kind, rng)
    }
}

/// Advances `pop` by one generation: elite copies, fresh mutants and
/// crossover offspring, decoded and re-sorted. `pop` is left untouched.
pub fn evolve_generation<D: Decoder + ?Sized>(
    pop: &Population,
    config: &BrkgaConfig,
    decoder: &D,
    rng: &mut RngStream,
) -> Result<Population> {
    config.validate()?;
    check_decoder(config, decoder)?;
    if pop.len() != config.p {
        return Err(BrkgaError::invalid(format!(
            "population has {} members, config expects {}",
            pop.len(),
            config.p
        )));
    }
    let generation = pop.generation() + 1;
    let (elite, rest) = mating_split(pop, config);

    let mut next: Vec<Individual> = elite.iter().map(|&i| pop.members()[i].clone()).collect();
    let mutants: Vec<Chromosome> = (0..config.p_m).map(|_| random_member(config, rng)).collect();
    next.extend(decode_batch(decoder, mutants).map_err(|e| e.at_generation(generation))?);

    let offspring_seed = rng.next_u64();
    let offspring: Vec<Individual> = (0..config.offspring())
        .into_par_iter()
        .map(|i| {
            let mut child_rng = RngStream::new(offspring_seed, i as u64);
            let child = breed(pop.members(), &elite, &rest, config, &mut child_rng)?;
            evaluate(decoder, child)
        })
        .collect::<Result<_>>()
        .map_err(|e| e.at_generation(generation))?;
    next.extend(offspring);

    let mut out = Population::from_members(next, config.p_e, config.p_m, pop.ranking().clone())?;
    out.set_generation(generation);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromosome::Sense;
    use crate::decoder::FnDecoder;
    use crate::population::init_population;

    fn chrom(v: &[f64]) -> Chromosome {
        Chromosome::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rho_one_copies_elite() {
        let e = chrom(&[0.1, 0.2, 0.3]);
        let o = chrom(&[0.7, 0.8, 0.9]);
        let c = biased_uniform_crossover(&e, &o, 1.0, &mut RngStream::new(1, 1)).unwrap();
        assert_eq!(c, e);
    }

    #[test]
    fn crossover_replays() {
        let e = chrom(&[0.1; 20]);
        let o = chrom(&[0.9; 20]);
        let a = biased_uniform_crossover(&e, &o, 0.7, &mut RngStream::new(5, 2)).unwrap();
        let b = biased_uniform_crossover(&e, &o, 0.7, &mut RngStream::new(5, 2)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn crossover_length_mismatch() {
        let r = biased_uniform_crossover(
            &chrom(&[0.1]),
            &chrom(&[0.1, 0.2]),
            0.7,
            &mut RngStream::new(0, 0),
        );
        assert!(r.is_err());
    }

    #[test]
    fn bias_weights() {
        assert_eq!(rank_bias_weight(1, BiasKind::Constant).unwrap(), 1.0);
        assert_eq!(rank_bias_weight(2, BiasKind::Quadratic).unwrap(), 0.25);
        assert_eq!(rank_bias_weight(4, BiasKind::Linear).unwrap(), 0.25);
        let li = rank_bias_weight(1, BiasKind::LogInverse).unwrap();
        assert!((li - 1.0 / std::f64::consts::LN_2).abs() < 1e-12);
        assert_eq!(rank_bias_weight(1, BiasKind::Exponential).unwrap(), (-1.0f64).exp());
        assert!(rank_bias_weight(0, BiasKind::Constant).is_err());
    }

    #[test]
    fn single_parent_is_copied() {
        let p = chrom(&[0.3, 0.6]);
        let c = multi_parent_crossover(&[&p], BiasKind::Linear, &mut RngStream::new(0, 0)).unwrap();
        assert_eq!(c, p);
        assert!(multi_parent_crossover(&[], BiasKind::Linear, &mut RngStream::new(0, 0)).is_err());
    }

    fn sum_decoder(n: usize) -> FnDecoder<impl Fn(&[f64]) -> Vec<f64> + Sync> {
        FnDecoder::new(n, vec![Sense::Minimize], |k: &[f64]| vec![k.iter().sum()])
    }

    #[test]
    fn parent_membership() {
        let cfg = BrkgaConfig::new(3, 10, 3, 2).unwrap();
        let d = sum_decoder(3);
        let pop = init_population(&cfg, &d, &[], &mut RngStream::new(1, 0)).unwrap();
        let mut rng = RngStream::new(2, 0);
        for _ in 0..50 {
            let ps = select_parents(&pop, 2, 1, ParentPool::NonElite, &mut rng).unwrap();
            assert_eq!(ps.len(), 2);
            assert!(pop.elite().iter().any(|e| std::ptr::eq(e, ps[0])));
            assert!(pop.non_elite().iter().any(|e| std::ptr::eq(e, ps[1])));
        }
        let all = select_parents(&pop, 4, 3, ParentPool::NonElite, &mut rng).unwrap();
        for (a, b) in all[..3].iter().zip(pop.elite()) {
            assert!(std::ptr::eq(*a, b));
        }
        assert!(select_parents(&pop, 5, 4, ParentPool::NonElite, &mut rng).is_err());
    }

    #[test]
    fn entire_pool_parents_are_distinct() {
        let cfg = BrkgaConfig::new(3, 6, 2, 1).unwrap();
        let d = sum_decoder(3);
        let pop = init_population(&cfg, &d, &[], &mut RngStream::new(1, 0)).unwrap();
        let mut rng = RngStream::new(2, 0);
        for _ in 0..50 {
            let ps = select_parents(&pop, 6, 2, ParentPool::Entire, &mut rng).unwrap();
            assert_eq!(ps.len(), 6);
            for w in ps.windows(2) {
                assert!(!std::ptr::eq(w[0], w[1]));
                assert!(w[0].score().primary() <= w[1].score().primary());
            }
        }
    }

    #[test]
    fn counts_and_elitism() {
        let cfg = BrkgaConfig::new(4, 3, 1, 1).unwrap();
        assert_eq!(cfg.offspring(), 1);
        let d = sum_decoder(4);
        let pop = init_population(&cfg, &d, &[], &mut RngStream::new(1, 0)).unwrap();
        let next = evolve_generation(&pop, &cfg, &d, &mut RngStream::new(1, 1)).unwrap();
        assert_eq!(next.len(), 3);
        assert!(next.members().iter().any(|m| m.chromosome == pop.best().chromosome));
        assert!(next.best().score().primary() <= pop.best().score().primary());
        assert_eq!(next.generation(), 1);
    }

    #[test]
    fn input_population_unchanged() {
        let cfg = BrkgaConfig::new(4, 10, 2, 2).unwrap();
        let d = sum_decoder(4);
        let pop = init_population(&cfg, &d, &[], &mut RngStream::new(1, 0)).unwrap();
        let snapshot = pop.members().to_vec();
        let _ = evolve_generation(&pop, &cfg, &d, &mut RngStream::new(1, 1)).unwrap();
        assert_eq!(pop.members(), &snapshot[..]);
    }

    #[test]
    fn decoder_error_names_generation() {
        let cfg = BrkgaConfig::new(1, 4, 1, 1).unwrap();
        let d = FnDecoder::new(1, vec![Sense::Minimize], |_: &[f64]| vec![1.0]);
        let pop = init_population(&cfg, &d, &[], &mut RngStream::new(0, 0)).unwrap();
        let bad = FnDecoder::new(1, vec![Sense::Minimize], |_: &[f64]| vec![f64::NAN]);
        let err = evolve_generation(&pop, &cfg, &bad, &mut RngStream::new(0, 1)).unwrap_err();
        assert!(matches!(err, BrkgaError::Generation { generation: 1, .. }));
    }
}
