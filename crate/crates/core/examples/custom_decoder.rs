//! Plugging in a problem of your own: a decoder for a continuous function,
//! first as a closure and then as a trait impl with a local-search hook.
//!
//! cargo run --example custom_decoder

use brkga::evolve::evolve_generation;
use brkga::{
    init_population, BrkgaConfig, Decoder, Fitness, FnDecoder, Population, RngStream, Sense,
};

/// Rastrigin on [-5.12, 5.12]^n, each key scaled to one coordinate.
fn rastrigin(keys: &[f64]) -> f64 {
    keys.iter()
        .map(|k| {
            let x = 10.24 * k - 5.12;
            x * x - 10.0 * (std::f64::consts::TAU * x).cos() + 10.0
        })
        .sum::<f64>()
}

struct Rastrigin {
    n: usize,
    senses: Vec<Sense>,
}

impl Decoder for Rastrigin {
    fn num_genes(&self) -> usize {
        self.n
    }
    fn senses(&self) -> &[Sense] {
        &self.senses
    }
    fn decode(&self, keys: &[f64]) -> brkga::Result<Fitness> {
        Fitness::single(rastrigin(keys))
    }
    // snaps each coordinate to its nearest integer when that helps
    fn improve(&self, keys: &mut [f64], fitness: Fitness) -> brkga::Result<Fitness> {
        let mut snapped = keys.to_vec();
        for k in snapped.iter_mut() {
            let x = (10.24 * *k - 5.12).round();
            *k = ((x + 5.12) / 10.24).clamp(0.0, 1.0 - f64::EPSILON);
        }
        let f = rastrigin(&snapped);
        if f < fitness.primary() {
            keys.copy_from_slice(&snapped);
            return Fitness::single(f);
        }
        Ok(fitness)
    }
}

fn run<D: Decoder>(decoder: &D, label: &str) -> brkga::Result<Population> {
    let cfg = BrkgaConfig::new(decoder.num_genes(), 50, 10, 5)?;
    let mut rng = RngStream::new(3, 0);
    let mut pop = init_population(&cfg, decoder, &[], &mut rng)?;
    for _ in 0..150 {
        pop = evolve_generation(&pop, &cfg, decoder, &mut rng)?;
    }
    println!("{label:>8}: best {:.6}", pop.best().score().primary());
    Ok(pop)
}

fn main() -> brkga::Result<()> {
    let closure = FnDecoder::new(6, vec![Sense::Minimize], |k: &[f64]| vec![rastrigin(k)]);
    run(&closure, "closure")?;
    let with_ls = Rastrigin {
        n: 6,
        senses: vec![Sense::Minimize],
    };
    run(&with_ls, "improve")?;
    Ok(())
}
