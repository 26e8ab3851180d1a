//! Seeding a knapsack run with a greedy solution encoded as a chromosome.
//!
//! cargo run --example knapsack_warm_start

use brkga::decoders::{encode_subset, KnapsackDecoder, KnapsackInstance};
use brkga::evolve::evolve_generation;
use brkga::{init_population, BrkgaConfig, Decoder, RngStream};

fn main() -> brkga::Result<()> {
    let weights = vec![12, 7, 11, 8, 9, 6, 14, 5, 10, 13, 4, 9, 7, 11, 6];
    let values = vec![24, 13, 23, 15, 16, 11, 29, 8, 20, 25, 6, 17, 12, 21, 10];
    let inst = KnapsackInstance::new(weights.clone(), values.clone(), 63)?;
    let decoder = KnapsackDecoder::new(inst.clone());

    // greedy by value density
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| {
        let da = values[a] as f64 / weights[a] as f64;
        let db = values[b] as f64 / weights[b] as f64;
        db.total_cmp(&da)
    });
    let mut greedy = Vec::new();
    let mut load = 0;
    for i in order {
        if load + weights[i] <= inst.capacity {
            load += weights[i];
            greedy.push(i);
        }
    }
    println!("greedy value {} with {greedy:?}", inst.totals(&greedy)[0]);

    let warm = encode_subset(&greedy, decoder.num_genes())?;
    let cfg = BrkgaConfig::new(decoder.num_genes(), 40, 8, 4)?;
    let mut rng = RngStream::new(7, 0);
    let mut pop = init_population(&cfg, &decoder, &[warm], &mut rng)?;
    println!("initial best {}", pop.best().score().primary());
    for _ in 0..100 {
        pop = evolve_generation(&pop, &cfg, &decoder, &mut rng)?;
    }
    let best = pop.best();
    println!("final best {}", best.score().primary());
    println!("items {:?}", decoder.describe(&best.chromosome).unwrap_or_default());
    Ok(())
}
