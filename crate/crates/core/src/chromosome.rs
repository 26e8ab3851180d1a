use std::cmp::Ordering;
use std::ops::Deref;

use crate::error::{BrkgaError, Result};
use crate::rng::RngStream;

/// A fixed-length vector of random keys, each in `[0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Chromosome(Vec<f64>);

impl Chromosome {
    /// Wraps `keys`, rejecting any key outside `[0, 1)`.
    pub fn new(keys: Vec<f64>) -> Result<Self> {
        if keys.is_empty() {
            return Err(BrkgaError::invalid("chromosome must hold at least one key"));
        }
        if let Some((i, k)) = keys
            .iter()
            .enumerate()
            .find(|(_, k)| !(0.0..1.0).contains(*k))
        {
            return Err(BrkgaError::invalid(format!(
                "key {i} = {k} lies outside [0, 1)"
            )));
        }
        Ok(Chromosome(keys))
    }

    /// Internal constructor for keys already known to be in range.
    pub(crate) fn from_keys_unchecked(keys: Vec<f64>) -> Self {
        debug_assert!(keys.iter().all(|k| (0.0..1.0).contains(k)));
        Chromosome(keys)
    }

    pub fn keys(&self) -> &[f64] {
        &self.0
    }

    pub(crate) fn keys_mut(&mut self) -> &mut [f64] {
        &mut self.0
    }

    pub fn into_keys(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for Chromosome {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

/// `n` keys drawn independently and uniformly from `[0, 1)`.
pub fn new_random_chromosome(n: usize, rng: &mut RngStream) -> Result<Chromosome> {
    if n == 0 {
        return Err(BrkgaError::invalid("chromosome length must be positive"));
    }
    Ok(Chromosome((0..n).map(|_| rng.next_key()).collect()))
}

/// Optimization direction of one objective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Minimize,
    Maximize,
}

impl Sense {
    /// Orders `a` before `b` when `a` is better.
    pub fn compare(self, a: f64, b: f64) -> Ordering {
        match self {
            Sense::Minimize => a.total_cmp(&b),
            Sense::Maximize => b.total_cmp(&a),
        }
    }

    pub fn is_better(self, a: f64, b: f64) -> bool {
        match self {
            Sense::Minimize => a < b,
            Sense::Maximize => a > b,
        }
    }

    /// Maps a value into minimization form.
    pub fn to_min(self, v: f64) -> f64 {
        match self {
            Sense::Minimize => v,
            Sense::Maximize => -v,
        }
    }
}

/// Objective values of a decoded chromosome. Always finite, at least one.
#[derive(Debug, Clone, PartialEq)]
pub struct Fitness(Vec<f64>);

impl Fitness {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(BrkgaError::invalid("fitness needs at least one objective"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(BrkgaError::Decode(format!(
                "non-finite fitness {values:?}"
            )));
        }
        Ok(Fitness(values))
    }

    pub fn single(value: f64) -> Result<Self> {
        Self::new(vec![value])
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn value(&self, objective: usize) -> f64 {
        self.0[objective]
    }

    /// First objective.
    pub fn primary(&self) -> f64 {
        self.0[0]
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// A chromosome with its cached fitness, present iff decoded.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub chromosome: Chromosome,
    fitness: Option<Fitness>,
}

impl Individual {
    pub fn undecoded(chromosome: Chromosome) -> Self {
        Individual {
            chromosome,
            fitness: None,
        }
    }

    pub fn decoded(chromosome: Chromosome, fitness: Fitness) -> Self {
        Individual {
            chromosome,
            fitness: Some(fitness),
        }
    }

    pub fn is_decoded(&self) -> bool {
        self.fitness.is_some()
    }

    pub fn fitness(&self) -> Option<&Fitness> {
        self.fitness.as_ref()
    }

    /// Fitness of an individual that lives in a population.
    ///
    /// Population members are always decoded.
    pub fn score(&self) -> &Fitness {
        self.fitness
            .as_ref()
            .expect("population members are always decoded")
    }
}
