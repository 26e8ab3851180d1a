use crate::chromosome::Sense;
use crate::error::{BrkgaError, Result};

use super::dominance::dominates_values;

/// Area dominated by a bi-objective minimization front, bounded by `reference`.
pub fn hypervolume_2d<T: AsRef<[f64]>>(front: &[T], reference: &[f64]) -> Result<f64> {
    if reference.len() != 2 {
        return Err(BrkgaError::NotApplicable(format!(
            "hypervolume supports 2 objectives, got {}",
            reference.len()
        )));
    }
    let senses = [Sense::Minimize, Sense::Minimize];
    let mut pts: Vec<(f64, f64)> = Vec::with_capacity(front.len());
    for f in front {
        let f = f.as_ref();
        if f.len() != 2 {
            return Err(BrkgaError::NotApplicable(format!(
                "hypervolume supports 2 objectives, got {}",
                f.len()
            )));
        }
        if !dominates_values(f, reference, &senses) {
            return Err(BrkgaError::invalid(format!(
                "point {f:?} does not dominate the reference {reference:?}"
            )));
        }
        pts.push((f[0], f[1]));
    }
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let mut area = 0.0;
    let mut ceiling = reference[1];
    for (x, y) in pts {
        if y < ceiling {
            area += (reference[0] - x) * (ceiling - y);
            ceiling = y;
        }
    }
    Ok(area)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_front_is_zero() {
        let empty: Vec<Vec<f64>> = vec![];
        assert_eq!(hypervolume_2d(&empty, &[3.0, 3.0]).unwrap(), 0.0);
    }

    #[test]
    fn two_boxes() {
        let f = vec![vec![1.0, 2.0], vec![2.0, 1.0]];
        assert_eq!(hypervolume_2d(&f, &[3.0, 3.0]).unwrap(), 3.0);
    }

    #[test]
    fn dominated_point_absorbed() {
        let f = vec![vec![1.0, 2.0], vec![2.0, 1.0], vec![2.5, 2.5]];
        assert_eq!(hypervolume_2d(&f, &[3.0, 3.0]).unwrap(), 3.0);
    }

    #[test]
    fn errors() {
        assert!(hypervolume_2d(&[vec![1.0, 1.0, 1.0]], &[3.0, 3.0, 3.0]).is_err());
        assert!(hypervolume_2d(&[vec![4.0, 1.0]], &[3.0, 3.0]).is_err());
    }
}
