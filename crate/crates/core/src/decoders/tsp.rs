use crate::chromosome::{Fitness, Sense};
use crate::decoder::Decoder;
use crate::error::{BrkgaError, Result};

use super::{ascending_order, expect_len};

/// Symmetric travelling-salesman instance.
#[derive(Debug, Clone, PartialEq)]
pub struct TspInstance {
    n: usize,
    dist: Vec<f64>,
}

impl TspInstance {
    /// From a full distance matrix; rejects asymmetry, a non-zero diagonal
    /// and negative or non-finite entries.
    pub fn from_matrix(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(BrkgaError::invalid("instance needs at least one city"));
        }
        let mut dist = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(BrkgaError::invalid(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            dist.extend_from_slice(row);
        }
        for i in 0..n {
            if dist[i * n + i] != 0.0 {
                return Err(BrkgaError::invalid(format!("diagonal entry {i} is not zero")));
            }
            for j in 0..n {
                let d = dist[i * n + j];
                if !d.is_finite() || d < 0.0 {
                    return Err(BrkgaError::invalid(format!("distance ({i}, {j}) = {d}")));
                }
                if d != dist[j * n + i] {
                    return Err(BrkgaError::invalid(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(TspInstance { n, dist })
    }

    /// From planar coordinates; distances are Euclidean, rounded half-up to
    /// the nearest integer.
    pub fn from_coords(points: &[(f64, f64)]) -> Result<Self> {
        let rows = points
            .iter()
            .map(|&(xa, ya)| {
                points
                    .iter()
                    .map(|&(xb, yb)| ((xa - xb).hypot(ya - yb) + 0.5).floor())
                    .collect()
            })
            .collect();
        Self::from_matrix(rows)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    /// Length of the closed tour.
    pub fn tour_length(&self, tour: &[usize]) -> f64 {
        if tour.len() < 2 {
            return 0.0;
        }
        tour.iter()
            .zip(tour.iter().cycle().skip(1))
            .map(|(&a, &b)| self.distance(a, b))
            .sum()
    }
}

/// Visits cities in ascending key order. Returns the tour and its length.
pub fn tsp_decode(keys: &[f64], inst: &TspInstance) -> Result<(Vec<usize>, f64)> {
    expect_len(keys, inst.n)?;
    let tour = ascending_order(keys);
    let len = inst.tour_length(&tour);
    Ok((tour, len))
}

/// Tour-length minimization.
#[derive(Debug, Clone)]
pub struct TspDecoder {
    instance: TspInstance,
}

impl TspDecoder {
    pub fn new(instance: TspInstance) -> Self {
        TspDecoder { instance }
    }

    pub fn instance(&self) -> &TspInstance {
        &self.instance
    }
}

impl Decoder for TspDecoder {
    fn num_genes(&self) -> usize {
        self.instance.n
    }

    fn senses(&self) -> &[Sense] {
        &[Sense::Minimize]
    }

    fn decode(&self, keys: &[f64]) -> Result<Fitness> {
        Fitness::single(tsp_decode(keys, &self.instance)?.1)
    }

    fn describe(&self, keys: &[f64]) -> Option<Vec<usize>> {
        tsp_decode(keys, &self.instance).ok().map(|(t, _)| t)
    }
}
