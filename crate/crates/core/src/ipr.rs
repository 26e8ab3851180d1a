//! Implicit path-relinking in key space.
//!
//! The walk splits the problem genes into contiguous blocks and greedily
//! moves the current chromosome toward the guide one block at a time,
//! keeping the best decoded point seen. The indicator variant copies guide
//! keys; the permutation variant reorders the current keys of a block so
//! their relative order matches the guide's.

use crate::chromosome::{Chromosome, Individual};
use crate::config::IprVariant;
use crate::decoder::{evaluate, Decoder};
use crate::diversity::mean_abs_distance;
use crate::error::{BrkgaError, Result};
use crate::population::{Population, Ranking};
use crate::rng::RngStream;

fn check_len(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(BrkgaError::invalid(format!(
            "chromosome lengths differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

/// Positions whose indicator `key >= theta` differs between `a` and `b`.
pub fn hamming_theta_distance(a: &[f64], b: &[f64], theta: f64) -> Result<usize> {
    check_len(a, b)?;
    if !(theta > 0.0 && theta < 1.0) {
        return Err(BrkgaError::invalid(format!("theta = {theta} outside (0, 1)")));
    }
    Ok(a.iter()
        .zip(b)
        .filter(|(x, y)| (**x >= theta) != (**y >= theta))
        .count())
}

/// Index pairs ordered differently by the stable ascending argsorts of `a`
/// and `b`.
pub fn kendall_tau_distance(a: &[f64], b: &[f64]) -> Result<usize> {
    check_len(a, b)?;
    let n = a.len();
    let mut d = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            // for i < j, i precedes j in the stable argsort iff key_i <= key_j
            if (a[i] <= a[j]) != (b[i] <= b[j]) {
                d += 1;
            }
        }
    }
    Ok(d)
}

/// Distance used to gate path-relinking and elite filtering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric {
    MeanAbs,
    Hamming { theta: f64 },
    KendallTau,
}

impl Metric {
    /// The natural metric for a path-relinking variant.
    pub fn for_variant(variant: IprVariant) -> Self {
        match variant {
            IprVariant::Permutation => Metric::KendallTau,
            IprVariant::Indicator => Metric::Hamming { theta: 0.5 },
        }
    }

    pub fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        match *self {
            Metric::MeanAbs => mean_abs_distance(a, b),
            Metric::Hamming { theta } => {
                hamming_theta_distance(a, b, theta).expect("equal lengths and valid theta") as f64
            }
            Metric::KendallTau => kendall_tau_distance(a, b).expect("equal lengths") as f64,
        }
    }
}

/// A base/guide pair drawn from two different islands.
#[derive(Debug, Clone, Copy)]
pub struct IprPair<'a> {
    pub base_island: usize,
    pub base: &'a Individual,
    pub guide_island: usize,
    pub guide: &'a Individual,
    pub distance: f64,
}

/// Draws elite pairs from distinct islands until one is at least `min_dist`
/// apart under `metric`, giving up after `K * p_e` attempts.
///
/// The metric sees only the first `genes` keys.
pub fn pick_ipr_pair<'a>(
    islands: &'a [Population],
    genes: usize,
    min_dist: f64,
    metric: Metric,
    rng: &mut RngStream,
) -> Result<Option<IprPair<'a>>> {
    let k = islands.len();
    if k < 2 {
        return Err(BrkgaError::NotApplicable(
            "path-relinking pairs need at least two islands".into(),
        ));
    }
    let budget = k * islands.iter().map(|p| p.elite_size()).max().unwrap_or(1);
    for _ in 0..budget {
        let a = rng.below(k);
        let b = (a + 1 + rng.below(k - 1)) % k;
        let base = &islands[a].elite()[rng.below(islands[a].elite_size())];
        let guide = &islands[b].elite()[rng.below(islands[b].elite_size())];
        let d = metric.distance(&base.chromosome[..genes], &guide.chromosome[..genes]);
        if d >= min_dist && d > 0.0 {
            return Ok(Some(IprPair {
                base_island: a,
                base,
                guide_island: b,
                guide,
                distance: d,
            }));
        }
    }
    Ok(None)
}

/// Outcome of one path-relinking walk.
#[derive(Debug, Clone)]
pub struct IprResult {
    /// Best individual seen on the walk, the base included.
    pub best: Individual,
    /// Chromosome after each adoption step.
    pub path: Vec<Chromosome>,
    pub decodes: usize,
}

/// Moves `keys[start..end]` one block toward `guide`.
fn transform_block(keys: &mut [f64], guide: &[f64], start: usize, end: usize, variant: IprVariant) {
    match variant {
        IprVariant::Indicator => keys[start..end].copy_from_slice(&guide[start..end]),
        IprVariant::Permutation => {
            let mut values = keys[start..end].to_vec();
            values.sort_by(f64::total_cmp);
            let mut positions: Vec<usize> = (start..end).collect();
            positions.sort_by(|&i, &j| guide[i].total_cmp(&guide[j]));
            for (pos, v) in positions.into_iter().zip(values) {
                keys[pos] = v;
            }
        }
    }
}

/// Greedy block-adoption walk from `base` toward `guide`.
///
/// Blocks of `block_size` contiguous problem genes are adopted one per step;
/// at each step every remaining block that would change the chromosome is
/// tried and the best-ranked candidate is kept. The walk stops after
/// `ceil(depth * blocks)` adoptions or when no block changes anything.
#[allow(clippy::too_many_arguments)]
pub fn ipr<D: Decoder + ?Sized>(
    base: &Individual,
    guide: &Individual,
    variant: IprVariant,
    block_size: usize,
    depth: f64,
    decoder: &D,
    ranking: &Ranking,
) -> Result<IprResult> {
    check_len(&base.chromosome, &guide.chromosome)?;
    if !base.is_decoded() {
        return Err(BrkgaError::invalid("path-relinking base must be decoded"));
    }
    let n = decoder.num_genes();
    if block_size == 0 || block_size > n {
        return Err(BrkgaError::invalid(format!(
            "block size {block_size} outside 1..={n}"
        )));
    }
    if !(0.0..=1.0).contains(&depth) {
        return Err(BrkgaError::invalid(format!("depth {depth} outside [0, 1]")));
    }
    let blocks = n.div_ceil(block_size);
    let steps = (depth * blocks as f64 - 1e-9).ceil().max(0.0) as usize;

    let mut best = base.clone();
    let mut current = base.chromosome.clone();
    let mut remaining: Vec<usize> = (0..blocks).collect();
    let mut path = Vec::new();
    let mut decodes = 0;
    for _ in 0..steps {
        let mut step_best: Option<(usize, Individual)> = None;
        for (slot, &blk) in remaining.iter().enumerate() {
            let start = blk * block_size;
            let end = (start + block_size).min(n);
            let mut keys = current.keys().to_vec();
            transform_block(&mut keys, &guide.chromosome, start, end, variant);
            if keys[start..end] == current[start..end] {
                continue;
            }
            let cand = evaluate(decoder, Chromosome::from_keys_unchecked(keys))?;
            decodes += 1;
            let better = match &step_best {
                None => true,
                Some((_, b)) => ranking.is_better(&cand, b),
            };
            if better {
                step_best = Some((slot, cand));
            }
        }
        let Some((slot, adopted)) = step_best else {
            break;
        };
        remaining.remove(slot);
        current = adopted.chromosome.clone();
        path.push(current.clone());
        if ranking.is_better(&adopted, &best) {
            best = adopted;
        }
    }
    Ok(IprResult {
        best,
        path,
        decodes,
    })
}
