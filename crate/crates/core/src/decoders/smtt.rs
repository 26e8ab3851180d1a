use crate::chromosome::{Fitness, Sense};
use crate::decoder::Decoder;
use crate::error::{BrkgaError, Result};

use super::{ascending_order, expect_len};

/// Single-machine total tardiness instance.
#[derive(Debug, Clone, PartialEq)]
pub struct SmttInstance {
    pub processing: Vec<f64>,
    pub due: Vec<f64>,
}

impl SmttInstance {
    pub fn new(processing: Vec<f64>, due: Vec<f64>) -> Result<Self> {
        if processing.is_empty() || processing.len() != due.len() {
            return Err(BrkgaError::invalid(
                "processing times and due dates must be non-empty with equal lengths",
            ));
        }
        if processing.iter().any(|p| !(p.is_finite() && *p > 0.0)) {
            return Err(BrkgaError::invalid("processing times must be positive"));
        }
        if due.iter().any(|d| !(d.is_finite() && *d >= 0.0)) {
            return Err(BrkgaError::invalid("due dates must be non-negative"));
        }
        Ok(SmttInstance { processing, due })
    }

    pub fn len(&self) -> usize {
        self.processing.len()
    }

    pub fn is_empty(&self) -> bool {
        self.processing.is_empty()
    }

    /// Per-job tardiness of `sequence`, in sequence order.
    pub fn tardiness(&self, sequence: &[usize]) -> Vec<f64> {
        let mut clock = 0.0;
        sequence
            .iter()
            .map(|&j| {
                clock += self.processing[j];
                (clock - self.due[j]).max(0.0)
            })
            .collect()
    }
}

/// Processes jobs in ascending key order. Returns the sequence and its
/// total tardiness.
pub fn smtt_decode(keys: &[f64], inst: &SmttInstance) -> Result<(Vec<usize>, f64)> {
    expect_len(keys, inst.len())?;
    let seq = ascending_order(keys);
    let total = inst.tardiness(&seq).iter().sum();
    Ok((seq, total))
}

/// Total tardiness minimization; the bi-objective form adds maximum
/// tardiness as a second objective.
#[derive(Debug, Clone)]
pub struct SmttDecoder {
    instance: SmttInstance,
    senses: Vec<Sense>,
}

impl SmttDecoder {
    pub fn new(instance: SmttInstance) -> Self {
        SmttDecoder {
            instance,
            senses: vec![Sense::Minimize],
        }
    }

    pub fn bi_objective(instance: SmttInstance) -> Self {
        SmttDecoder {
            instance,
            senses: vec![Sense::Minimize; 2],
        }
    }

    pub fn instance(&self) -> &SmttInstance {
        &self.instance
    }
}

impl Decoder for SmttDecoder {
    fn num_genes(&self) -> usize {
        self.instance.len()
    }

    fn senses(&self) -> &[Sense] {
        &self.senses
    }

    fn decode(&self, keys: &[f64]) -> Result<Fitness> {
        expect_len(keys, self.instance.len())?;
        let t = self.instance.tardiness(&ascending_order(keys));
        let total: f64 = t.iter().sum();
        if self.senses.len() == 1 {
            Fitness::single(total)
        } else {
            Fitness::new(vec![total, t.iter().copied().fold(0.0, f64::max)])
        }
    }

    fn describe(&self, keys: &[f64]) -> Option<Vec<usize>> {
        smtt_decode(keys, &self.instance).ok().map(|(s, _)| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_trace() {
        let inst = SmttInstance::new(vec![2.0, 3.0], vec![10.0, 1.0]).unwrap();
        let (seq, t) = smtt_decode(&[0.2, 0.8], &inst).unwrap();
        assert_eq!(seq, vec![0, 1]);
        assert_eq!(t, 4.0);
    }

    #[test]
    fn loose_due_dates_give_zero() {
        let inst = SmttInstance::new(vec![1.0, 2.0, 3.0], vec![6.0, 7.0, 6.0]).unwrap();
        for keys in [[0.1, 0.2, 0.3], [0.3, 0.2, 0.1], [0.5, 0.1, 0.9]] {
            assert_eq!(smtt_decode(&keys, &inst).unwrap().1, 0.0);
        }
    }

    #[test]
    fn single_late_job() {
        let inst = SmttInstance::new(vec![4.5], vec![0.0]).unwrap();
        assert_eq!(smtt_decode(&[0.3], &inst).unwrap().1, 4.5);
    }

    #[test]
    fn bi_objective_adds_max_tardiness() {
        let inst = SmttInstance::new(vec![2.0, 3.0], vec![1.0, 1.0]).unwrap();
        let f = SmttDecoder::bi_objective(inst).decode(&[0.1, 0.2]).unwrap();
        assert_eq!(f.values(), &[5.0, 4.0]);
    }

    #[test]
    fn validation() {
        assert!(SmttInstance::new(vec![1.0], vec![1.0, 2.0]).is_err());
        assert!(SmttInstance::new(vec![0.0], vec![1.0]).is_err());
    }
}
