//! Independent oracles and instance generators shared by integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use brkga::decoders::{KnapsackInstance, SmttInstance, TspInstance};
use brkga::{RngStream, Sense};

pub fn rng(seed: u64) -> RngStream {
    RngStream::new(seed, 0xC0FFEE)
}

/// Integer uniform in `lo..=hi`.
pub fn uniform(rng: &mut RngStream, lo: u64, hi: u64) -> u64 {
    lo + rng.below((hi - lo + 1) as usize) as u64
}

pub fn random_tsp(n: usize, rng: &mut RngStream) -> TspInstance {
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = uniform(rng, 1, 100) as f64;
            m[i][j] = d;
            m[j][i] = d;
        }
    }
    TspInstance::from_matrix(m).unwrap()
}

pub fn random_knapsack(n: usize, objectives: usize, rng: &mut RngStream) -> KnapsackInstance {
    let weights: Vec<u64> = (0..n).map(|_| uniform(rng, 1, 30)).collect();
    let values: Vec<Vec<u64>> = (0..objectives)
        .map(|_| (0..n).map(|_| uniform(rng, 1, 50)).collect())
        .collect();
    let cap = weights.iter().sum::<u64>() / 2;
    KnapsackInstance::multi(weights, values, cap).unwrap()
}

pub fn random_smtt(n: usize, rng: &mut RngStream) -> SmttInstance {
    let p: Vec<f64> = (0..n).map(|_| uniform(rng, 1, 10) as f64).collect();
    let total: f64 = p.iter().sum();
    let d = (0..n)
        .map(|_| uniform(rng, 0, total as u64) as f64)
        .collect();
    SmttInstance::new(p, d).unwrap()
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Shortest closed tour by exhaustive search with city 0 fixed first.
pub fn tsp_optimum(inst: &TspInstance) -> f64 {
    let n = inst.len();
    let mut best = f64::INFINITY;
    for rest in permutations(n - 1) {
        let mut tour = vec![0];
        tour.extend(rest.iter().map(|c| c + 1));
        let mut len = 0.0;
        for k in 0..n {
            len += inst.distance(tour[k], tour[(k + 1) % n]);
        }
        best = best.min(len);
    }
    best
}

/// 0/1 knapsack optimum on the first value column by dynamic programming.
pub fn knapsack_optimum(inst: &KnapsackInstance) -> u64 {
    let cap = inst.capacity as usize;
    let mut dp = vec![0u64; cap + 1];
    for (i, &w) in inst.weights.iter().enumerate() {
        let w = w as usize;
        for c in (w..=cap).rev() {
            dp[c] = dp[c].max(dp[c - w] + inst.values[0][i]);
        }
    }
    dp[cap]
}

/// Pareto-optimal value vectors of a two-column knapsack by enumerating
/// every subset.
pub fn knapsack_pareto_set(inst: &KnapsackInstance) -> BTreeSet<(u64, u64)> {
    let n = inst.len();
    let mut feasible = Vec::new();
    for mask in 0u32..(1 << n) {
        let (mut w, mut a, mut b) = (0, 0, 0);
        for i in 0..n {
            if mask >> i & 1 == 1 {
                w += inst.weights[i];
                a += inst.values[0][i];
                b += inst.values[1][i];
            }
        }
        if w <= inst.capacity {
            feasible.push((a, b));
        }
    }
    feasible
        .iter()
        .filter(|&&(a, b)| {
            !feasible
                .iter()
                .any(|&(c, d)| c >= a && d >= b && (c > a || d > b))
        })
        .copied()
        .collect()
}

/// `f` dominates `g` under `senses`, written out directly.
pub fn dominates_oracle(f: &[f64], g: &[f64], senses: &[Sense]) -> bool {
    let mut strictly = false;
    for ((a, b), s) in f.iter().zip(g).zip(senses) {
        let (a, b) = match s {
            Sense::Minimize => (*a, *b),
            Sense::Maximize => (-*a, -*b),
        };
        if a > b {
            return false;
        }
        if a < b {
            strictly = true;
        }
    }
    strictly
}

/// Fronts by repeatedly peeling the points no remaining point dominates.
pub fn nds_oracle(points: &[Vec<f64>], senses: &[Sense]) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..points.len()).collect();
    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let front: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| {
                !remaining
                    .iter()
                    .any(|&j| dominates_oracle(&points[j], &points[i], senses))
            })
            .collect();
        remaining.retain(|i| !front.contains(i));
        fronts.push(front);
    }
    fronts
}
