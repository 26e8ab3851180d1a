//! Bi-objective knapsack with mp-BRKGA: one island per objective plus
//! all-objective pools, a Pareto archive, and its hypervolume.
//!
//! cargo run --example pareto_knapsack

use brkga::decoders::{KnapsackDecoder, KnapsackInstance};
use brkga::mo::{hypervolume_2d, mp_brkga_generation, mp_brkga_init, MpBrkgaConfig};
use brkga::{BrkgaConfig, Decoder};

fn main() -> brkga::Result<()> {
    let weights = vec![5, 8, 3, 9, 4, 7, 6, 2, 10, 5];
    let profit = vec![10, 3, 7, 12, 2, 9, 4, 6, 11, 5];
    let utility = vec![2, 11, 4, 3, 9, 5, 10, 8, 1, 7];
    let inst = KnapsackInstance::multi(weights, vec![profit, utility], 25)?;
    let decoder = KnapsackDecoder::new(inst);

    let mut base = BrkgaConfig::new(decoder.num_genes(), 40, 8, 4)?;
    base.seed = 17;
    let cfg = MpBrkgaConfig::new(base, 2, 10);
    let mut state = mp_brkga_init(&cfg, &decoder)?;
    // hypervolume works on minimization fronts; negate both profits
    let reference = [0.0, 0.0];
    for g in 1..=100 {
        state = mp_brkga_generation(&state, &cfg, &decoder)?;
        if g % 25 == 0 {
            let front: Vec<Vec<f64>> = state
                .archive
                .sorted_points()
                .iter()
                .map(|p| p.iter().map(|v| -v).collect())
                .collect();
            let hv = hypervolume_2d(&front, &reference)?;
            println!("gen {g:3}: archive {:2} points, hypervolume {hv:.1}", state.archive.len());
        }
    }
    println!("profit\tutility\titems");
    for pt in state.archive.entries() {
        let items = decoder.describe(&pt.chromosome).unwrap_or_default();
        let v = pt.score().values();
        println!("{}\t{}\t{items:?}", v[0], v[1]);
    }
    Ok(())
}
