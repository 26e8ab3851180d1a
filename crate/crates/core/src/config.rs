use crate::error::{BrkgaError, Result};

/// Rank-based weighting used by multi-parent crossover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiasKind {
    Constant,
    Linear,
    LogInverse,
    Quadratic,
    Exponential,
}

/// Where non-elite parents are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParentPool {
    NonElite,
    Entire,
}

/// Path-relinking flavour; must match the decoder family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IprVariant {
    Permutation,
    Indicator,
}

/// Evolution parameters.
///
/// Fields are public so controllers can adjust them between generations;
/// every operation re-checks [`BrkgaConfig::validate`] before use.
#[derive(Debug, Clone, PartialEq)]
pub struct BrkgaConfig {
    /// Problem genes seen by the decoder.
    pub n: usize,
    /// Population size per island.
    pub p: usize,
    pub p_e: usize,
    pub p_m: usize,
    /// Probability of inheriting a gene from the elite parent.
    pub rho: f64,
    /// Total parents per mating.
    pub pi_t: usize,
    /// Elite parents per mating.
    pub pi_e: usize,
    pub bias_kind: BiasKind,
    pub second_parent_pool: ParentPool,
    pub num_islands: usize,
    /// Generations between migrations, `0` disables.
    pub migration_interval: u64,
    pub migration_count: usize,
    pub seed: u64,
    /// Shake whenever the stall counter reaches a multiple of this.
    pub stall_shake: Option<u64>,
    /// Reset whenever the stall counter reaches a multiple of this.
    pub stall_reset: Option<u64>,
    /// Generations between path-relinking attempts.
    pub ipr_interval: Option<u64>,
    pub ipr_min_distance: f64,
    pub ipr_variant: IprVariant,
    pub ipr_block_size: usize,
    pub ipr_depth: f64,
    /// Fraction of genes perturbed per elite during a shake.
    pub shake_intensity: f64,
    /// Carry crossover probability and shake intensity as two extra genes.
    pub self_adaptive: bool,
    /// Minimum distance between copied elites, `0` disables the filter.
    pub elite_min_distance: f64,
}

/// Extra genes appended in self-adaptive mode.
pub const CONTROL_GENES: usize = 2;

impl BrkgaConfig {
    /// Classical single-island configuration with two-parent crossover.
    pub fn new(n: usize, p: usize, p_e: usize, p_m: usize) -> Result<Self> {
        let cfg = BrkgaConfig {
            n,
            p,
            p_e,
            p_m,
            rho: 0.7,
            pi_t: 2,
            pi_e: 1,
            bias_kind: BiasKind::Linear,
            second_parent_pool: ParentPool::NonElite,
            num_islands: 1,
            migration_interval: 0,
            migration_count: 1,
            seed: 0,
            stall_shake: None,
            stall_reset: None,
            ipr_interval: None,
            ipr_min_distance: 0.0,
            ipr_variant: IprVariant::Permutation,
            ipr_block_size: 1,
            ipr_depth: 1.0,
            shake_intensity: 0.2,
            self_adaptive: false,
            elite_min_distance: 0.0,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(BrkgaError::config(m));
        if self.n == 0 {
            return fail("n must be positive".into());
        }
        if self.p_e == 0 || 2 * self.p_e >= self.p {
            return fail(format!(
                "elite size must satisfy 1 <= p_e < p/2 (p_e = {}, p = {})",
                self.p_e, self.p
            ));
        }
        if self.p_m == 0 {
            return fail("p_m must be positive".into());
        }
        if self.p_e + self.p_m >= self.p {
            return fail(format!(
                "p_e + p_m must leave room for offspring ({} + {} >= {})",
                self.p_e, self.p_m, self.p
            ));
        }
        if !(self.rho > 0.5 && self.rho <= 1.0) {
            return fail(format!("rho = {} outside (0.5, 1]", self.rho));
        }
        if !(1 <= self.pi_e && self.pi_e < self.pi_t && self.pi_t <= self.p) {
            return fail(format!(
                "parent counts must satisfy 1 <= pi_e < pi_t <= p (pi_e = {}, pi_t = {})",
                self.pi_e, self.pi_t
            ));
        }
        if self.pi_e > self.p_e {
            return fail(format!("pi_e = {} exceeds p_e = {}", self.pi_e, self.p_e));
        }
        if self.second_parent_pool == ParentPool::NonElite
            && self.pi_t - self.pi_e > self.p - self.p_e
        {
            return fail("not enough non-elite members for pi_t - pi_e parents".into());
        }
        if self.num_islands == 0 {
            return fail("at least one island required".into());
        }
        if self.migration_count > self.p_e {
            return fail(format!(
                "migration_count = {} exceeds p_e = {}",
                self.migration_count, self.p_e
            ));
        }
        if !(0.0..=1.0).contains(&self.shake_intensity) {
            return fail(format!(
                "shake intensity {} outside [0, 1]",
                self.shake_intensity
            ));
        }
        if self.ipr_block_size == 0 || self.ipr_block_size > self.n {
            return fail(format!(
                "ipr block size must lie in 1..={} (got {})",
                self.n, self.ipr_block_size
            ));
        }
        if !(0.0..=1.0).contains(&self.ipr_depth) {
            return fail(format!("ipr depth {} outside [0, 1]", self.ipr_depth));
        }
        if !(self.ipr_min_distance >= 0.0) || !(self.elite_min_distance >= 0.0) {
            return fail("distance thresholds must be non-negative".into());
        }
        if self.ipr_interval.is_some() && self.num_islands < 2 {
            return fail("path-relinking needs at least two islands".into());
        }
        if [self.stall_shake, self.stall_reset, self.ipr_interval].contains(&Some(0)) {
            return fail("trigger intervals must be positive when set".into());
        }
        Ok(())
    }

    /// Chromosome length including control genes.
    pub fn chromosome_len(&self) -> usize {
        if self.self_adaptive {
            self.n + CONTROL_GENES
        } else {
            self.n
        }
    }

    /// Number of crossover offspring per generation.
    pub fn offspring(&self) -> usize {
        self.p - self.p_e - self.p_m
    }

    /// True when mating uses the classical elite/non-elite pair.
    pub fn is_two_parent(&self) -> bool {
        self.pi_t == 2 && self.pi_e == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        let c = BrkgaConfig::new(10, 100, 15, 10).unwrap();
        assert_eq!(c.offspring(), 75);
        assert!(c.is_two_parent());
    }

    #[test]
    fn elite_must_be_below_half() {
        assert!(BrkgaConfig::new(5, 10, 5, 1).is_err());
        assert!(BrkgaConfig::new(5, 10, 4, 1).is_ok());
    }

    #[test]
    fn needs_room_for_offspring() {
        assert!(BrkgaConfig::new(5, 3, 1, 1).is_ok());
        assert!(BrkgaConfig::new(5, 3, 1, 2).is_err());
    }

    #[test]
    fn rho_range() {
        let mut c = BrkgaConfig::new(5, 10, 2, 2).unwrap();
        c.rho = 0.5;
        assert!(c.validate().is_err());
        c.rho = 1.0;
        assert!(c.validate().is_ok());
    }

    #[test]
    fn parent_counts() {
        let mut c = BrkgaConfig::new(5, 10, 2, 2).unwrap();
        c.pi_t = 3;
        c.pi_e = 3;
        assert!(c.validate().is_err());
        c.pi_e = 2;
        assert!(c.validate().is_ok());
        c.pi_t = 4;
        c.pi_e = 3;
        assert!(c.validate().is_err());
    }

    #[test]
    fn migration_and_shake_limits() {
        let mut c = BrkgaConfig::new(5, 10, 2, 2).unwrap();
        c.migration_count = 3;
        assert!(c.validate().is_err());
        c.migration_count = 2;
        c.shake_intensity = 1.5;
        assert!(c.validate().is_err());
    }

    #[test]
    fn ipr_needs_islands() {
        let mut c = BrkgaConfig::new(5, 10, 2, 2).unwrap();
        c.ipr_interval = Some(10);
        assert!(c.validate().is_err());
        c.num_islands = 2;
        assert!(c.validate().is_ok());
    }

    #[test]
    fn control_genes_extend_length() {
        let mut c = BrkgaConfig::new(5, 10, 2, 2).unwrap();
        assert_eq!(c.chromosome_len(), 5);
        c.self_adaptive = true;
        assert_eq!(c.chromosome_len(), 7);
    }
}
