//! Island model with path-relinking, first a single relinking walk by hand,
//! then the full loop through the harness solver with its event trace.
//!
//! cargo run --example islands_ipr

use brkga::decoders::{SmttDecoder, SmttInstance};
use brkga::evolve::evolve_generation;
use brkga::harness::{solve, Event, RunConfig};
use brkga::ipr::{ipr, pick_ipr_pair, Metric};
use brkga::{init_population, BrkgaConfig, Decoder, IprVariant, RngStream};

fn main() -> brkga::Result<()> {
    let p: Vec<f64> = (0..20).map(|i| (i * 7 % 9 + 1) as f64).collect();
    let d: Vec<f64> = (0..20).map(|i| (i * 13 % 60) as f64).collect();
    let decoder = SmttDecoder::new(SmttInstance::new(p, d)?);

    let cfg = BrkgaConfig::new(decoder.num_genes(), 30, 6, 3)?;
    let islands: Vec<_> = (0..2)
        .map(|k| {
            let mut r = RngStream::new(5, k);
            let mut pop = init_population(&cfg, &decoder, &[], &mut r)?;
            for _ in 0..20 {
                pop = evolve_generation(&pop, &cfg, &decoder, &mut r)?;
            }
            Ok(pop)
        })
        .collect::<brkga::Result<_>>()?;
    let metric = Metric::for_variant(IprVariant::Permutation);
    if let Some(pair) = pick_ipr_pair(&islands, 20, 1.0, metric, &mut RngStream::new(5, 99))? {
        let walk = ipr(
            pair.base,
            pair.guide,
            IprVariant::Permutation,
            2,
            1.0,
            &decoder,
            islands[pair.base_island].ranking(),
        )?;
        println!(
            "relink: base {} guide {} -> best on path {} ({} steps, {} decodes, distance {})",
            pair.base.score().primary(),
            pair.guide.score().primary(),
            walk.best.score().primary(),
            walk.path.len(),
            walk.decodes,
            pair.distance,
        );
    }

    let mut run = RunConfig::default();
    for (k, v) in [
        ("p", "40"),
        ("p_e", "8"),
        ("p_m", "4"),
        ("islands", "3"),
        ("migration_interval", "10"),
        ("migration_count", "2"),
        ("ipr_interval", "15"),
        ("ipr_block_size", "2"),
        ("stall_shake", "20"),
        ("stall_reset", "60"),
        ("max_generations", "120"),
        ("seed", "5"),
    ] {
        run.set(k, v)?;
    }
    let out = solve(&run, &decoder)?;
    for e in [Event::Migrate, Event::Ipr, Event::Shake, Event::Reset] {
        println!("{:>8} at {:?}", e.tag(), out.trace.generations_with(e));
    }
    println!("best tardiness {}", out.best.score().primary());
    println!("sequence {:?}", out.solution.unwrap_or_default());
    Ok(())
}
