//! Classical single-island BRKGA on a small Euclidean TSP, driving the
//! generation loop by hand.
//!
//! cargo run --example tsp_basic

use brkga::decoders::{TspDecoder, TspInstance};
use brkga::evolve::evolve_generation;
use brkga::{init_population, BrkgaConfig, Decoder, RngStream};

fn main() -> brkga::Result<()> {
    // 12 cities on a circle; the optimum visits them in angular order
    let points: Vec<(f64, f64)> = (0..12)
        .map(|i| {
            let a = i as f64 * std::f64::consts::TAU / 12.0;
            (100.0 * a.cos(), 100.0 * a.sin())
        })
        .collect();
    let decoder = TspDecoder::new(TspInstance::from_coords(&points)?);

    let mut cfg = BrkgaConfig::new(decoder.num_genes(), 60, 12, 6)?;
    cfg.rho = 0.7;
    let mut rng = RngStream::new(42, 0);
    let mut pop = init_population(&cfg, &decoder, &[], &mut rng)?;
    println!("gen   0  best {:.3}", pop.best().score().primary());
    for g in 1..=200 {
        pop = evolve_generation(&pop, &cfg, &decoder, &mut rng)?;
        if g % 50 == 0 {
            println!("gen {g:3}  best {:.3}", pop.best().score().primary());
        }
    }
    let best = pop.best();
    let tour = decoder.describe(&best.chromosome).unwrap_or_default();
    println!("tour {tour:?}");
    println!("length {:.3}", best.score().primary());
    Ok(())
}
