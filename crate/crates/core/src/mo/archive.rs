use crate::chromosome::{Individual, Sense};
use crate::fmt::sig9;

use super::dominance::{crowding_distance, dominates_values};

/// A set of mutually non-dominated individuals, deduplicated by chromosome.
#[derive(Debug, Clone)]
pub struct ParetoArchive {
    entries: Vec<Individual>,
    senses: Vec<Sense>,
    dedup_objectives: bool,
    capacity: Option<usize>,
}

impl ParetoArchive {
    pub fn new(senses: Vec<Sense>) -> Self {
        ParetoArchive {
            entries: Vec::new(),
            senses,
            dedup_objectives: false,
            capacity: None,
        }
    }

    /// Also rejects candidates whose objective vector already appears,
    /// keeping one representative chromosome per front point.
    pub fn with_objective_dedup(mut self, on: bool) -> Self {
        self.dedup_objectives = on;
        self
    }

    /// Caps the archive size; the most crowded entry is evicted on overflow.
    pub fn with_capacity_limit(mut self, cap: Option<usize>) -> Self {
        self.capacity = cap;
        self
    }

    pub fn entries(&self) -> &[Individual] {
        &self.entries
    }

    pub fn senses(&self) -> &[Sense] {
        &self.senses
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Offers `candidate`; returns whether it was accepted.
    pub fn insert(&mut self, candidate: &Individual) -> bool {
        let cf = candidate.score().values();
        debug_assert_eq!(cf.len(), self.senses.len());
        for e in &self.entries {
            let ef = e.score().values();
            if e.chromosome == candidate.chromosome
                || dominates_values(ef, cf, &self.senses)
                || (self.dedup_objectives && ef == cf)
            {
                return false;
            }
        }
        let senses = &self.senses;
        self.entries
            .retain(|e| !dominates_values(cf, e.score().values(), senses));
        self.entries.push(candidate.clone());
        if let Some(cap) = self.capacity {
            while self.entries.len() > cap.max(1) {
                let fits: Vec<&[f64]> = self.entries.iter().map(|e| e.score().values()).collect();
                let d = crowding_distance(&fits);
                let (worst, _) = d
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.total_cmp(b.1))
                    .expect("archive is non-empty");
                self.entries.remove(worst);
            }
        }
        true
    }

    /// Objective vectors in lexicographic order.
    pub fn sorted_points(&self) -> Vec<Vec<f64>> {
        let mut pts: Vec<Vec<f64>> = self
            .entries
            .iter()
            .map(|e| e.score().values().to_vec())
            .collect();
        pts.sort_by(|a, b| {
            a.iter()
                .zip(b)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        pts
    }

    /// One line per entry, tab-separated objective values, sorted
    /// lexicographically.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for p in self.sorted_points() {
            let line: Vec<String> = p.iter().map(|&v| sig9(v)).collect();
            out.push_str(&line.join("\t"));
            out.push('\n');
        }
        out
    }
}
