//! Multi-parent crossover with the different rank-bias functions, compared
//! against the classical two-parent scheme on one SMTT instance.
//!
//! cargo run --example multi_parent

use brkga::decoders::{SmttDecoder, SmttInstance};
use brkga::evolve::{evolve_generation, rank_bias_weight};
use brkga::{init_population, BiasKind, BrkgaConfig, Decoder, RngStream};

fn main() -> brkga::Result<()> {
    let p = vec![4.0, 7.0, 2.0, 9.0, 5.0, 3.0, 8.0, 6.0, 1.0, 4.0, 6.0, 3.0];
    let d = vec![10.0, 25.0, 5.0, 40.0, 18.0, 12.0, 30.0, 35.0, 3.0, 20.0, 45.0, 15.0];
    let decoder = SmttDecoder::new(SmttInstance::new(p, d)?);

    for kind in [BiasKind::Constant, BiasKind::Linear, BiasKind::Exponential] {
        let w: Vec<String> = (1..=3)
            .map(|r| format!("{:.3}", rank_bias_weight(r, kind).unwrap()))
            .collect();
        println!("{kind:?} weights for ranks 1..3: {}", w.join(" "));
    }

    let mut setups = vec![("two-parent rho=0.7", BrkgaConfig::new(12, 40, 8, 4)?)];
    for kind in [BiasKind::Linear, BiasKind::LogInverse, BiasKind::Exponential] {
        let mut cfg = BrkgaConfig::new(12, 40, 8, 4)?;
        cfg.pi_t = 3;
        cfg.pi_e = 2;
        cfg.bias_kind = kind;
        cfg.validate()?;
        setups.push((
            match kind {
                BiasKind::Linear => "3 parents linear",
                BiasKind::LogInverse => "3 parents loginverse",
                _ => "3 parents exponential",
            },
            cfg,
        ));
    }
    for (label, cfg) in setups {
        let mut rng = RngStream::new(11, 0);
        let mut pop = init_population(&cfg, &decoder, &[], &mut rng)?;
        for _ in 0..80 {
            pop = evolve_generation(&pop, &cfg, &decoder, &mut rng)?;
        }
        let seq = decoder.describe(&pop.best().chromosome).unwrap_or_default();
        println!(
            "{label:>22}: tardiness {:>5}  sequence {seq:?}",
            pop.best().score().primary()
        );
    }
    Ok(())
}
