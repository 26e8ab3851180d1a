//! Online parameter control: deterministic A-BRKGA-style schedules,
//! self-adaptive control genes and a tabular Q-learning controller.

use std::collections::HashMap;

use crate::chromosome::{new_random_chromosome, Chromosome, Sense};
use crate::config::{BrkgaConfig, CONTROL_GENES};
use crate::decoder::{decode_batch, Decoder};
use crate::error::{BrkgaError, Result};
use crate::population::Population;
use crate::rng::RngStream;

/// Endpoints of the linear parameter schedules.
#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleBounds {
    pub p_max: usize,
    pub p_min: usize,
    pub pe_min: usize,
    pub pe_max: usize,
    pub pm_max: usize,
    pub pm_min: usize,
    pub alpha_max: f64,
    pub alpha_min: f64,
    pub g_max: u64,
}

impl ScheduleBounds {
    /// Checks that every interpolated snapshot will satisfy the population
    /// invariants, so the schedule never needs to clamp.
    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(BrkgaError::config(m.to_string()));
        if self.p_max < self.p_min || self.pe_max < self.pe_min || self.pm_max < self.pm_min {
            return fail("schedule bounds need max >= min");
        }
        if !(self.alpha_min <= self.alpha_max) || self.alpha_min < 0.0 || self.alpha_max > 1.0 {
            return fail("alpha bounds must satisfy 0 <= alpha_min <= alpha_max <= 1");
        }
        if self.g_max == 0 {
            return fail("g_max must be positive");
        }
        if self.pe_min == 0 || self.pm_min == 0 {
            return fail("elite and mutant counts must stay positive");
        }
        if 2 * self.pe_max >= self.p_min {
            return fail("pe_max must stay below p_min / 2");
        }
        if self.pe_max + self.pm_max >= self.p_min {
            return fail("pe_max + pm_max must stay below p_min");
        }
        Ok(())
    }
}

/// Parameters emitted by [`abrkga_tick`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSnapshot {
    pub p: usize,
    pub p_e: usize,
    pub p_m: usize,
    pub alpha: f64,
}

fn lerp_count(from: usize, to: usize, t: f64) -> usize {
    (from as f64 + (to as f64 - from as f64) * t).round() as usize
}

/// Linear schedule at generation `gen`: `p`, `p_m` and `alpha` fall from
/// their maxima to their minima while `p_e` rises. Generations past
/// `g_max` hold the final values.
pub fn abrkga_tick(gen: u64, bounds: &ScheduleBounds) -> ParamSnapshot {
    let t = (gen.min(bounds.g_max) as f64) / bounds.g_max as f64;
    let p = lerp_count(bounds.p_max, bounds.p_min, t);
    let mut p_e = lerp_count(bounds.pe_min, bounds.pe_max, t);
    let mut p_m = lerp_count(bounds.pm_max, bounds.pm_min, t);
    // no-ops for validated bounds
    p_e = p_e.clamp(1, (p - 1) / 2);
    p_m = p_m.clamp(1, p - 1 - p_e);
    ParamSnapshot {
        p,
        p_e,
        p_m,
        alpha: bounds.alpha_max + (bounds.alpha_min - bounds.alpha_max) * t,
    }
}

/// Truncates the worst members or appends fresh random ones to reach
/// `new_p`, then re-sorts.
pub fn apply_population_resize<D: Decoder + ?Sized>(
    pop: &Population,
    new_p: usize,
    decoder: &D,
    rng: &mut RngStream,
) -> Result<Population> {
    if new_p < pop.elite_size() + pop.mutant_size() + 1 || new_p < 2 {
        return Err(BrkgaError::invalid(format!(
            "population of {new_p} cannot hold {} elites and {} mutants",
            pop.elite_size(),
            pop.mutant_size()
        )));
    }
    let mut members = pop.members().to_vec();
    if new_p < members.len() {
        members.truncate(new_p);
    } else if new_p > members.len() {
        let len = members[0].chromosome.len();
        let fresh: Vec<Chromosome> = (members.len()..new_p)
            .map(|_| new_random_chromosome(len, rng))
            .collect::<Result<_>>()?;
        members.extend(decode_batch(decoder, fresh)?);
    }
    let mut out = Population::from_members(
        members,
        pop.elite_size(),
        pop.mutant_size(),
        pop.ranking().clone(),
    )?;
    out.set_generation(pop.generation());
    Ok(out)
}

fn control_gene(parent: &Chromosome, n: usize, offset: usize) -> Result<f64> {
    if parent.len() != n + CONTROL_GENES {
        return Err(BrkgaError::NotApplicable(format!(
            "self-adaptive mode needs {} keys, chromosome has {}",
            n + CONTROL_GENES,
            parent.len()
        )));
    }
    Ok(parent[n + offset])
}

/// Crossover probability carried by a non-elite parent: `0.65 + 0.15 g`
/// for its first control gene `g`.
pub fn self_adaptive_rho(non_elite_parent: &Chromosome, n: usize) -> Result<f64> {
    Ok(0.65 + 0.15 * control_gene(non_elite_parent, n, 0)?)
}

/// Shake intensity carried in the second control gene.
pub fn self_adaptive_beta(chromosome: &Chromosome, n: usize) -> Result<f64> {
    control_gene(chromosome, n, 1)
}

/// Tabular action values with an exponentially decaying exploration rate.
#[derive(Debug, Clone)]
pub struct QTable {
    values: HashMap<(usize, usize), f64>,
    num_actions: usize,
    pub learning_rate: f64,
    pub discount: f64,
    pub eta0: f64,
    pub decay: f64,
}

impl QTable {
    pub fn new(
        num_actions: usize,
        learning_rate: f64,
        discount: f64,
        eta0: f64,
        decay: f64,
    ) -> Result<Self> {
        if !(learning_rate > 0.0 && learning_rate <= 1.0) {
            return Err(BrkgaError::config("learning rate outside (0, 1]"));
        }
        if !(0.0..=1.0).contains(&discount) {
            return Err(BrkgaError::config("discount outside [0, 1]"));
        }
        if !(eta0 > 0.0 && eta0 <= 1.0) {
            return Err(BrkgaError::config("eta0 outside (0, 1]"));
        }
        if !(decay > 0.0) {
            return Err(BrkgaError::config("decay must be positive"));
        }
        Ok(QTable {
            values: HashMap::new(),
            num_actions,
            learning_rate,
            discount,
            eta0,
            decay,
        })
    }

    pub fn num_actions(&self) -> usize {
        self.num_actions
    }

    /// Unvisited pairs read as zero.
    pub fn get(&self, state: usize, action: usize) -> f64 {
        self.values.get(&(state, action)).copied().unwrap_or(0.0)
    }

    pub fn set(&mut self, state: usize, action: usize, value: f64) {
        self.values.insert((state, action), value);
    }

    /// Exploration probability at step `t`.
    pub fn eta(&self, t: u64) -> f64 {
        if t == 0 {
            return self.eta0;
        }
        self.eta0 * (-self.decay * t as f64).exp()
    }

    fn best_action(&self, state: usize) -> usize {
        (0..self.num_actions)
            .fold((0, f64::NEG_INFINITY), |(ba, bv), a| {
                let v = self.get(state, a);
                if v > bv {
                    (a, v)
                } else {
                    (ba, bv)
                }
            })
            .0
    }

    fn max_value(&self, state: usize) -> f64 {
        (0..self.num_actions)
            .map(|a| self.get(state, a))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// One Q-learning step toward `reward + discount * max Q(next, .)`.
pub fn q_update(q: &mut QTable, state: usize, action: usize, reward: f64, next_state: usize) {
    let old = q.get(state, action);
    let target = reward
        + if q.num_actions > 0 {
            q.discount * q.max_value(next_state)
        } else {
            0.0
        };
    q.set(state, action, old + q.learning_rate * (target - old));
}

/// Eta-greedy choice: random with probability `eta(t)`, otherwise the
/// highest-valued action (lowest index on ties).
pub fn q_select_action(q: &QTable, state: usize, t: u64, rng: &mut RngStream) -> Result<usize> {
    if q.num_actions == 0 {
        return Err(BrkgaError::invalid("action set is empty"));
    }
    let explore = rng.next_key() < q.eta(t);
    Ok(if explore {
        rng.below(q.num_actions)
    } else {
        q.best_action(state)
    })
}

/// Discrete levels the controller chooses between.
const RHO_LEVELS: [f64; 3] = [0.6, 0.7, 0.8];
const ELITE_LEVELS: [f64; 3] = [0.10, 0.15, 0.20];
const MUTANT_LEVELS: [f64; 3] = [0.05, 0.10, 0.15];

/// Q-learning controller over crossover probability and the elite and
/// mutant fractions. States bucket the stall counter.
#[derive(Debug, Clone)]
pub struct QController {
    table: QTable,
    pending: Option<(usize, usize)>,
}

/// Controller settings for one generation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QAction {
    pub rho: f64,
    pub elite_fraction: f64,
    pub mutant_fraction: f64,
}

impl QController {
    pub const NUM_STATES: usize = 4;
    pub const NUM_ACTIONS: usize = 27;

    pub fn new(learning_rate: f64, discount: f64, eta0: f64, decay: f64) -> Result<Self> {
        Ok(QController {
            table: QTable::new(Self::NUM_ACTIONS, learning_rate, discount, eta0, decay)?,
            pending: None,
        })
    }

    pub fn table(&self) -> &QTable {
        &self.table
    }

    /// Stall buckets `{0}, {1..=5}, {6..=20}, {21..}`.
    pub fn state_of(stall: u64) -> usize {
        match stall {
            0 => 0,
            1..=5 => 1,
            6..=20 => 2,
            _ => 3,
        }
    }

    pub fn action(index: usize) -> QAction {
        QAction {
            rho: RHO_LEVELS[index / 9],
            elite_fraction: ELITE_LEVELS[(index / 3) % 3],
            mutant_fraction: MUTANT_LEVELS[index % 3],
        }
    }

    /// Picks an action for generation `t` and writes it into `config`.
    pub fn choose(
        &mut self,
        stall: u64,
        t: u64,
        config: &mut BrkgaConfig,
        rng: &mut RngStream,
    ) -> Result<QAction> {
        let s = Self::state_of(stall);
        let a = q_select_action(&self.table, s, t, rng)?;
        self.pending = Some((s, a));
        let act = Self::action(a);
        apply_action(&act, config)?;
        Ok(act)
    }

    /// Relative improvement of the first objective, clamped to `[0, 1]`.
    pub fn reward(previous_best: f64, new_best: f64, sense: Sense) -> f64 {
        let gain = sense.to_min(previous_best) - sense.to_min(new_best);
        if gain <= 0.0 {
            return 0.0;
        }
        if previous_best == 0.0 {
            return 1.0;
        }
        (gain / previous_best.abs()).clamp(0.0, 1.0)
    }

    /// Credits the last chosen action.
    pub fn learn(&mut self, reward: f64, new_stall: u64) {
        if let Some((s, a)) = self.pending.take() {
            q_update(&mut self.table, s, a, reward, Self::state_of(new_stall));
        }
    }
}

/// Converts fractions to counts that respect the config invariants.
fn apply_action(act: &QAction, config: &mut BrkgaConfig) -> Result<()> {
    let p = config.p;
    let lo = config.pi_e.max(config.migration_count).max(1);
    let hi = (p - 1) / 2;
    let p_e = ((act.elite_fraction * p as f64).round() as usize).clamp(lo.min(hi), hi);
    let p_m = ((act.mutant_fraction * p as f64).round() as usize).clamp(1, p - 1 - p_e);
    config.rho = act.rho;
    config.p_e = p_e;
    config.p_m = p_m;
    config.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds() -> ScheduleBounds {
        ScheduleBounds {
            p_max: 200,
            p_min: 100,
            pe_min: 10,
            pe_max: 30,
            pm_max: 40,
            pm_min: 10,
            alpha_max: 0.9,
            alpha_min: 0.1,
            g_max: 100,
        }
    }

    #[test]
    fn tick_endpoints_and_midpoint() {
        let b = bounds();
        b.validate().unwrap();
        let s0 = abrkga_tick(0, &b);
        assert_eq!((s0.p, s0.p_e, s0.p_m, s0.alpha), (200, 10, 40, 0.9));
        let s1 = abrkga_tick(100, &b);
        assert_eq!((s1.p, s1.p_e, s1.p_m), (100, 30, 10));
        assert!((s1.alpha - 0.1).abs() < 1e-12);
        assert_eq!(abrkga_tick(50, &b).p, 150);
        assert_eq!(abrkga_tick(500, &b), s1);
    }

    #[test]
    fn invalid_bounds_rejected() {
        let mut b = bounds();
        b.pe_max = 50;
        assert!(b.validate().is_err());
        let mut b = bounds();
        b.p_min = 300;
        assert!(b.validate().is_err());
    }

    #[test]
    fn rho_mapping() {
        let c = Chromosome::new(vec![0.5, 0.5, 0.0, 0.3]).unwrap();
        assert_eq!(self_adaptive_rho(&c, 2).unwrap(), 0.65);
        assert_eq!(self_adaptive_beta(&c, 2).unwrap(), 0.3);
        let c = Chromosome::new(vec![0.5, 0.5, 1.0 - 1e-12, 0.0]).unwrap();
        assert!((self_adaptive_rho(&c, 2).unwrap() - 0.80).abs() < 1e-9);
        let plain = Chromosome::new(vec![0.5, 0.5]).unwrap();
        assert!(matches!(
            self_adaptive_rho(&plain, 2),
            Err(BrkgaError::NotApplicable(_))
        ));
    }

    #[test]
    fn q_update_arithmetic() {
        let mut q = QTable::new(2, 0.5, 0.0, 1.0, 1.0).unwrap();
        q_update(&mut q, 0, 1, 1.0, 0);
        assert_eq!(q.get(0, 1), 0.5);
        q.set(1, 0, 4.0);
        q_update(&mut q, 1, 0, 0.0, 0);
        assert_eq!(q.get(1, 0), 2.0);
    }

    #[test]
    fn q_update_is_deterministic() {
        let run = || {
            let mut q = QTable::new(3, 0.3, 0.8, 1.0, 1.0).unwrap();
            q_update(&mut q, 0, 2, 0.7, 1);
            q_update(&mut q, 1, 0, 0.2, 0);
            q.get(1, 0)
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn selection_policy() {
        let mut q = QTable::new(2, 0.5, 0.5, 1.0, 1e9).unwrap();
        q.set(0, 0, 2.0);
        q.set(0, 1, 1.0);
        let mut rng = RngStream::new(0, 0);
        for t in 1..50 {
            assert_eq!(q_select_action(&q, 0, t, &mut rng).unwrap(), 0);
        }
        // eta0 = 1 at t = 0 explores: both actions appear
        let seen: std::collections::HashSet<usize> = (0..200)
            .map(|_| q_select_action(&q, 0, 0, &mut rng).unwrap())
            .collect();
        assert_eq!(seen.len(), 2);
        let empty = QTable::new(0, 0.5, 0.5, 1.0, 1.0).unwrap();
        assert!(q_select_action(&empty, 0, 0, &mut rng).is_err());
    }

    #[test]
    fn greedy_ties_pick_lowest_index() {
        let q = QTable::new(4, 0.5, 0.5, 1.0, 1e9).unwrap();
        assert_eq!(q_select_action(&q, 3, 5, &mut RngStream::new(0, 0)).unwrap(), 0);
    }

    #[test]
    fn eta_decays_strictly() {
        let q = QTable::new(2, 0.5, 0.5, 0.8, 0.01).unwrap();
        for t in 0..100 {
            assert!(q.eta(t + 1) < q.eta(t));
            assert!(q.eta(t) <= 0.8 && q.eta(t) > 0.0);
        }
    }

    #[test]
    fn controller_actions_keep_config_valid() {
        let mut cfg = BrkgaConfig::new(5, 20, 3, 2).unwrap();
        for a in 0..QController::NUM_ACTIONS {
            apply_action(&QController::action(a), &mut cfg).unwrap();
        }
        assert_eq!(QController::state_of(0), 0);
        assert_eq!(QController::state_of(5), 1);
        assert_eq!(QController::state_of(20), 2);
        assert_eq!(QController::state_of(21), 3);
    }

    #[test]
    fn reward_is_clamped_relative_gain() {
        assert_eq!(QController::reward(10.0, 8.0, Sense::Minimize), 0.2);
        assert_eq!(QController::reward(10.0, 12.0, Sense::Minimize), 0.0);
        assert_eq!(QController::reward(10.0, 12.0, Sense::Maximize), 0.2);
        assert_eq!(QController::reward(10.0, -50.0, Sense::Minimize), 1.0);
    }
}
