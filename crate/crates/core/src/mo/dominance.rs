use crate::chromosome::{Fitness, Sense};
use crate::error::{BrkgaError, Result};

impl AsRef<[f64]> for Fitness {
    fn as_ref(&self) -> &[f64] {
        self.values()
    }
}

/// Pareto dominance on raw objective vectors of equal length.
pub fn dominates_values(f: &[f64], g: &[f64], senses: &[Sense]) -> bool {
    let mut strictly = false;
    for ((&a, &b), &s) in f.iter().zip(g).zip(senses) {
        if s.is_better(b, a) {
            return false;
        }
        if s.is_better(a, b) {
            strictly = true;
        }
    }
    strictly
}

/// True iff `f` is no worse than `g` everywhere and strictly better somewhere.
pub fn dominates(f: &Fitness, g: &Fitness, senses: &[Sense]) -> Result<bool> {
    if f.dim() != g.dim() || f.dim() != senses.len() {
        return Err(BrkgaError::invalid(format!(
            "dimension mismatch: {} vs {} with {} senses",
            f.dim(),
            g.dim(),
            senses.len()
        )));
    }
    Ok(dominates_values(f.values(), g.values(), senses))
}

/// Fast non-dominated sorting. Returns fronts of indices, best first; each
/// front lists indices in ascending order.
pub fn non_dominated_sort<T: AsRef<[f64]>>(points: &[T], senses: &[Sense]) -> Vec<Vec<usize>> {
    let n = points.len();
    let mut dominated_by_count = vec![0usize; n];
    let mut dominates_list: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (points[i].as_ref(), points[j].as_ref());
            if dominates_values(a, b, senses) {
                dominates_list[i].push(j);
                dominated_by_count[j] += 1;
            } else if dominates_values(b, a, senses) {
                dominates_list[j].push(i);
                dominated_by_count[i] += 1;
            }
        }
    }
    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominates_list[i] {
                dominated_by_count[j] -= 1;
                if dominated_by_count[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(current);
        current = next;
    }
    fronts
}

/// NSGA-II crowding distance for the members of one front.
///
/// For each objective, members holding the minimum or maximum value get
/// `+inf`; the others accumulate the normalized gap between the nearest
/// strictly smaller and strictly larger values. Objectives with zero range
/// contribute nothing. Fronts of at most two members are all `+inf`.
pub fn crowding_distance<T: AsRef<[f64]>>(front: &[T]) -> Vec<f64> {
    let n = front.len();
    if n <= 2 {
        return vec![f64::INFINITY; n];
    }
    let m = front[0].as_ref().len();
    let mut dist = vec![0.0f64; n];
    for obj in 0..m {
        let mut vals: Vec<f64> = front.iter().map(|f| f.as_ref()[obj]).collect();
        vals.sort_by(f64::total_cmp);
        vals.dedup();
        let (lo, hi) = (vals[0], vals[vals.len() - 1]);
        let range = hi - lo;
        if range <= 0.0 {
            continue;
        }
        for (i, f) in front.iter().enumerate() {
            let v = f.as_ref()[obj];
            let pos = vals
                .binary_search_by(|x| x.total_cmp(&v))
                .expect("value comes from this front");
            if pos == 0 || pos == vals.len() - 1 {
                dist[i] = f64::INFINITY;
            } else {
                dist[i] += (vals[pos + 1] - vals[pos - 1]) / range;
            }
        }
    }
    dist
}

/// Weighted sum of objectives after mapping each to minimization form.
pub fn weighted_aggregate(f: &Fitness, weights: &[f64], senses: &[Sense]) -> Result<f64> {
    if weights.len() != f.dim() || senses.len() != f.dim() {
        return Err(BrkgaError::invalid(format!(
            "{} weights and {} senses for {} objectives",
            weights.len(),
            senses.len(),
            f.dim()
        )));
    }
    if weights.iter().any(|w| !(*w >= 0.0)) || weights.iter().sum::<f64>() <= 0.0 {
        return Err(BrkgaError::invalid(
            "weights must be non-negative with a positive sum",
        ));
    }
    Ok(f.values()
        .iter()
        .zip(weights)
        .zip(senses)
        .map(|((&v, &w), &s)| w * s.to_min(v))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    const MIN2: [Sense; 2] = [Sense::Minimize, Sense::Minimize];

    fn fit(v: &[f64]) -> Fitness {
        Fitness::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&fit(&[1.0, 2.0]), &fit(&[2.0, 3.0]), &MIN2).unwrap());
        assert!(!dominates(&fit(&[1.0, 3.0]), &fit(&[3.0, 1.0]), &MIN2).unwrap());
        assert!(!dominates(&fit(&[3.0, 1.0]), &fit(&[1.0, 3.0]), &MIN2).unwrap());
        assert!(!dominates(&fit(&[1.0, 1.0]), &fit(&[1.0, 1.0]), &MIN2).unwrap());
        assert!(dominates(&fit(&[1.0]), &fit(&[1.0, 2.0]), &MIN2).is_err());
    }

    #[test]
    fn dominance_respects_maximize() {
        let s = [Sense::Maximize, Sense::Minimize];
        assert!(dominates(&fit(&[5.0, 1.0]), &fit(&[4.0, 1.0]), &s).unwrap());
        assert!(!dominates(&fit(&[4.0, 1.0]), &fit(&[5.0, 1.0]), &s).unwrap());
    }

    #[test]
    fn sort_examples() {
        assert_eq!(non_dominated_sort(&[vec![4.0, 4.0]], &MIN2), vec![vec![0]]);
        let pts = vec![vec![1.0, 1.0], vec![2.0, 2.0], vec![1.0, 3.0], vec![3.0, 1.0]];
        assert_eq!(non_dominated_sort(&pts, &MIN2), vec![vec![0], vec![1, 2, 3]]);
        let chain: Vec<Vec<f64>> = (0..5).rev().map(|i| vec![i as f64, i as f64]).collect();
        assert_eq!(
            non_dominated_sort(&chain, &MIN2),
            vec![vec![4], vec![3], vec![2], vec![1], vec![0]]
        );
    }

    #[test]
    fn crowding_examples() {
        let two = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert!(crowding_distance(&two).iter().all(|d| d.is_infinite()));
        let three = vec![vec![0.0, 2.0], vec![1.0, 1.0], vec![2.0, 0.0]];
        let d = crowding_distance(&three);
        assert!(d[0].is_infinite() && d[2].is_infinite());
        assert_eq!(d[1], 2.0);
        let shuffled = vec![three[2].clone(), three[1].clone(), three[0].clone()];
        let d2 = crowding_distance(&shuffled);
        assert_eq!(d2[1], 2.0);
        assert!(d2[0].is_infinite() && d2[2].is_infinite());
    }

    #[test]
    fn crowding_zero_range_contributes_nothing() {
        let pts = vec![vec![0.0, 5.0], vec![1.0, 5.0], vec![2.0, 5.0], vec![4.0, 5.0]];
        let d = crowding_distance(&pts);
        assert!(d[0].is_infinite() && d[3].is_infinite());
        assert_eq!(d[1], 0.5);
        assert_eq!(d[2], 0.75);
    }

    #[test]
    fn aggregate_examples() {
        assert_eq!(weighted_aggregate(&fit(&[2.0, 4.0]), &[0.5, 0.5], &MIN2).unwrap(), 3.0);
        assert_eq!(weighted_aggregate(&fit(&[2.0, 4.0]), &[0.0, 1.0], &MIN2).unwrap(), 4.0);
        assert_eq!(weighted_aggregate(&fit(&[2.0, 4.0]), &[1.0, 1.0], &MIN2).unwrap(), 6.0);
        let s = [Sense::Maximize, Sense::Minimize];
        assert_eq!(weighted_aggregate(&fit(&[2.0, 4.0]), &[1.0, 1.0], &s).unwrap(), 2.0);
        assert!(weighted_aggregate(&fit(&[2.0]), &[1.0, 1.0], &MIN2).is_err());
        assert!(weighted_aggregate(&fit(&[2.0, 1.0]), &[0.0, 0.0], &MIN2).is_err());
    }
}
