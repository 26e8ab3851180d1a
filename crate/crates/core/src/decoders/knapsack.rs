use crate::chromosome::{Fitness, Sense};
use crate::decoder::Decoder;
use crate::error::{BrkgaError, Result};

use super::expect_len;

/// 0/1 knapsack with one value vector per objective.
#[derive(Debug, Clone, PartialEq)]
pub struct KnapsackInstance {
    pub weights: Vec<u64>,
    /// `values[k][i]`: value of item `i` under objective `k`.
    pub values: Vec<Vec<u64>>,
    pub capacity: u64,
}

impl KnapsackInstance {
    pub fn new(weights: Vec<u64>, values: Vec<u64>, capacity: u64) -> Result<Self> {
        Self::multi(weights, vec![values], capacity)
    }

    pub fn multi(weights: Vec<u64>, values: Vec<Vec<u64>>, capacity: u64) -> Result<Self> {
        if weights.is_empty() {
            return Err(BrkgaError::invalid("knapsack needs at least one item"));
        }
        if values.is_empty() || values.iter().any(|v| v.len() != weights.len()) {
            return Err(BrkgaError::invalid("value and weight vectors must have equal lengths"));
        }
        if capacity == 0 {
            return Err(BrkgaError::invalid("capacity must be positive"));
        }
        if weights.contains(&0) || values.iter().flatten().any(|&v| v == 0) {
            return Err(BrkgaError::invalid("weights and values must be positive"));
        }
        Ok(KnapsackInstance {
            weights,
            values,
            capacity,
        })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn num_objectives(&self) -> usize {
        self.values.len()
    }

    /// Objective values of `selected`.
    pub fn totals(&self, selected: &[usize]) -> Vec<u64> {
        self.values
            .iter()
            .map(|v| selected.iter().map(|&i| v[i]).sum())
            .collect()
    }

    pub fn weight(&self, selected: &[usize]) -> u64 {
        selected.iter().map(|&i| self.weights[i]).sum()
    }
}

/// Greedy scan by descending key (ties by index), packing every item that
/// still fits. Returns the selected items in ascending index order.
pub fn knapsack_select(keys: &[f64], inst: &KnapsackInstance) -> Result<Vec<usize>> {
    expect_len(keys, inst.len())?;
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[b].total_cmp(&keys[a]));
    let mut room = inst.capacity;
    let mut selected = Vec::new();
    for i in order {
        if inst.weights[i] <= room {
            room -= inst.weights[i];
            selected.push(i);
        }
    }
    selected.sort_unstable();
    Ok(selected)
}

/// Selected items and total value under the first objective.
pub fn knapsack_decode(keys: &[f64], inst: &KnapsackInstance) -> Result<(Vec<usize>, u64)> {
    let selected = knapsack_select(keys, inst)?;
    let value = inst.totals(&selected)[0];
    Ok((selected, value))
}

/// Value maximization, one objective per value vector.
#[derive(Debug, Clone)]
pub struct KnapsackDecoder {
    instance: KnapsackInstance,
    senses: Vec<Sense>,
}

impl KnapsackDecoder {
    pub fn new(instance: KnapsackInstance) -> Self {
        let senses = vec![Sense::Maximize; instance.num_objectives()];
        KnapsackDecoder { instance, senses }
    }

    pub fn instance(&self) -> &KnapsackInstance {
        &self.instance
    }
}

impl Decoder for KnapsackDecoder {
    fn num_genes(&self) -> usize {
        self.instance.len()
    }

    fn senses(&self) -> &[Sense] {
        &self.senses
    }

    fn decode(&self, keys: &[f64]) -> Result<Fitness> {
        let selected = knapsack_select(keys, &self.instance)?;
        Fitness::new(
            self.instance
                .totals(&selected)
                .into_iter()
                .map(|v| v as f64)
                .collect(),
        )
    }

    fn describe(&self, keys: &[f64]) -> Option<Vec<usize>> {
        knapsack_select(keys, &self.instance).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_traced_instance() {
        let inst = KnapsackInstance::new(vec![2, 3, 4], vec![3, 4, 5], 5).unwrap();
        let (sel, v) = knapsack_decode(&[0.9, 0.1, 0.5], &inst).unwrap();
        assert_eq!(sel, vec![0, 1]);
        assert_eq!(v, 7);
        // exhaustive check that 7 is optimal
        let best = (0u32..8)
            .filter_map(|mask| {
                let s: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
                (inst.weight(&s) <= 5).then(|| inst.totals(&s)[0])
            })
            .max()
            .unwrap();
        assert_eq!(best, 7);
    }

    #[test]
    fn roomy_knapsack_takes_everything() {
        let inst = KnapsackInstance::new(vec![2, 3, 4], vec![1, 1, 1], 9).unwrap();
        assert_eq!(knapsack_decode(&[0.3, 0.2, 0.1], &inst).unwrap().0, vec![0, 1, 2]);
    }

    #[test]
    fn tiny_knapsack_takes_nothing() {
        let inst = KnapsackInstance::new(vec![2, 3, 4], vec![1, 1, 1], 1).unwrap();
        assert_eq!(knapsack_decode(&[0.3, 0.2, 0.1], &inst).unwrap(), (vec![], 0));
    }

    #[test]
    fn validation() {
        assert!(KnapsackInstance::new(vec![1, 2], vec![1], 3).is_err());
        assert!(KnapsackInstance::new(vec![1, 2], vec![1, 1], 0).is_err());
        assert!(knapsack_decode(&[0.1], &KnapsackInstance::new(vec![1, 2], vec![1, 1], 2).unwrap()).is_err());
    }

    #[test]
    fn multi_objective_totals() {
        let inst = KnapsackInstance::multi(vec![1, 1], vec![vec![3, 1], vec![1, 3]], 1).unwrap();
        let d = KnapsackDecoder::new(inst);
        assert_eq!(d.decode(&[0.9, 0.1]).unwrap().values(), &[3.0, 1.0]);
        assert_eq!(d.decode(&[0.1, 0.9]).unwrap().values(), &[1.0, 3.0]);
    }
}
