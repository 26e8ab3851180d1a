//! Diversity tools on their own: stall counting, shaking, resets, ring
//! migration and the diversity measure.
//!
//! cargo run --example diversity_ops

use brkga::decoders::{TspDecoder, TspInstance};
use brkga::diversity::{migrate, population_diversity, reset_population, shake, StallCounter};
use brkga::evolve::evolve_generation;
use brkga::{init_population, BrkgaConfig, Decoder, RngStream};

fn main() -> brkga::Result<()> {
    let points: Vec<(f64, f64)> = (0..10)
        .map(|i| ((i * 37 % 11) as f64, (i * 53 % 7) as f64))
        .collect();
    let decoder = TspDecoder::new(TspInstance::from_coords(&points)?);
    let sense = decoder.senses()[0];
    let cfg = BrkgaConfig::new(decoder.num_genes(), 30, 6, 3)?;

    let mut islands: Vec<_> = (0..3)
        .map(|k| init_population(&cfg, &decoder, &[], &mut RngStream::new(1, k)))
        .collect::<brkga::Result<_>>()?;
    let mut stall = StallCounter::new();
    for g in 1..=60u64 {
        for (k, isl) in islands.iter_mut().enumerate() {
            *isl = evolve_generation(isl, &cfg, &decoder, &mut RngStream::new(g, k as u64))?;
        }
        if g % 10 == 0 {
            migrate(&mut islands, 2)?;
        }
        let best = islands
            .iter()
            .map(|p| p.best())
            .min_by(|a, b| sense.compare(a.score().primary(), b.score().primary()))
            .unwrap();
        stall.observe(best.score(), sense);
        if stall.stall() > 0 && stall.stall().is_multiple_of(15) {
            println!("gen {g}: stalled {} generations, shaking", stall.stall());
            for (k, isl) in islands.iter_mut().enumerate() {
                *isl = shake(isl, 0.3, &cfg, &decoder, &mut RngStream::new(g, 100 + k as u64))?;
            }
        }
    }

    let before = population_diversity(&islands[0])?;
    let shaken = shake(&islands[0], 0.5, &cfg, &decoder, &mut RngStream::new(9, 9))?;
    let fresh = reset_population(&cfg, &decoder, &mut RngStream::new(9, 10))?;
    println!("diversity  evolved {before:.4}");
    println!("diversity  shaken  {:.4}", population_diversity(&shaken)?);
    println!("diversity  reset   {:.4}", population_diversity(&fresh)?);
    println!(
        "best ever {:.3}",
        stall.best_ever().map(|f| f.primary()).unwrap_or(f64::NAN)
    );
    Ok(())
}
