//! The decoder contract.
//!
//! A decoder maps the first [`Decoder::num_genes`] keys of a chromosome to a
//! fitness vector. Decoders must be deterministic and side-effect-free, and
//! are called concurrently from the rayon pool.

use rayon::prelude::*;

use crate::chromosome::{Chromosome, Fitness, Individual, Sense};
use crate::error::{BrkgaError, Result};

pub trait Decoder: Sync {
    /// Number of keys the decoder reads.
    fn num_genes(&self) -> usize;

    /// Direction of each objective; its length is the objective dimension.
    fn senses(&self) -> &[Sense];

    fn decode(&self, keys: &[f64]) -> Result<Fitness>;

    /// Human-readable solution as a list of indices (tour, selected items...).
    fn describe(&self, _keys: &[f64]) -> Option<Vec<usize>> {
        None
    }

    /// Post-decode improvement slot. May rewrite `keys` in place (keeping
    /// them in `[0, 1)`) and return the improved fitness.
    fn improve(&self, _keys: &mut [f64], fitness: Fitness) -> Result<Fitness> {
        Ok(fitness)
    }

    fn num_objectives(&self) -> usize {
        self.senses().len()
    }
}

impl<D: Decoder + ?Sized> Decoder for &D {
    fn num_genes(&self) -> usize {
        (**self).num_genes()
    }
    fn senses(&self) -> &[Sense] {
        (**self).senses()
    }
    fn decode(&self, keys: &[f64]) -> Result<Fitness> {
        (**self).decode(keys)
    }
    fn describe(&self, keys: &[f64]) -> Option<Vec<usize>> {
        (**self).describe(keys)
    }
    fn improve(&self, keys: &mut [f64], fitness: Fitness) -> Result<Fitness> {
        (**self).improve(keys, fitness)
    }
}

/// Adapts a closure returning one or more objective values.
pub struct FnDecoder<F> {
    genes: usize,
    senses: Vec<Sense>,
    f: F,
}

impl<F> FnDecoder<F>
where
    F: Fn(&[f64]) -> Vec<f64> + Sync,
{
    pub fn new(genes: usize, senses: Vec<Sense>, f: F) -> Self {
        FnDecoder { genes, senses, f }
    }
}

impl<F> Decoder for FnDecoder<F>
where
    F: Fn(&[f64]) -> Vec<f64> + Sync,
{
    fn num_genes(&self) -> usize {
        self.genes
    }

    fn senses(&self) -> &[Sense] {
        &self.senses
    }

    fn decode(&self, keys: &[f64]) -> Result<Fitness> {
        Fitness::new((self.f)(keys))
    }
}

/// Decodes one chromosome, enforcing the contract on the result.
pub fn evaluate<D: Decoder + ?Sized>(decoder: &D, mut chromosome: Chromosome) -> Result<Individual> {
    let n = decoder.num_genes();
    if chromosome.len() < n {
        return Err(BrkgaError::invalid(format!(
            "chromosome has {} keys, decoder needs {n}",
            chromosome.len()
        )));
    }
    let fitness = decoder.decode(&chromosome[..n])?;
    if fitness.dim() != decoder.num_objectives() {
        return Err(BrkgaError::Decode(format!(
            "decoder declared {} objectives but returned {}",
            decoder.num_objectives(),
            fitness.dim()
        )));
    }
    let fitness = decoder.improve(&mut chromosome.keys_mut()[..n], fitness)?;
    if chromosome.iter().any(|k| !(0.0..1.0).contains(k)) {
        return Err(BrkgaError::Decode(
            "improvement step moved a key outside [0, 1)".into(),
        ));
    }
    Ok(Individual::decoded(chromosome, fitness))
}

/// Decodes a batch in parallel; output order matches input order.
pub fn decode_batch<D: Decoder + ?Sized>(
    decoder: &D,
    chromosomes: Vec<Chromosome>,
) -> Result<Vec<Individual>> {
    chromosomes
        .into_par_iter()
        .map(|c| evaluate(decoder, c))
        .collect()
}
