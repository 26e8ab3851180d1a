//! Online parameter control: the deterministic A-BRKGA schedule, the
//! Q-learning controller, and self-adaptive control genes.
//!
//! cargo run --example adaptive_control

use brkga::control::{abrkga_tick, ScheduleBounds};
use brkga::decoders::{TspDecoder, TspInstance};
use brkga::harness::{solve, RunConfig};

fn main() -> brkga::Result<()> {
    let bounds = ScheduleBounds {
        p_max: 120,
        p_min: 40,
        pe_min: 6,
        pe_max: 15,
        pm_max: 12,
        pm_min: 3,
        alpha_max: 0.2,
        alpha_min: 0.0,
        g_max: 100,
    };
    bounds.validate()?;
    for g in [0, 25, 50, 75, 100] {
        let s = abrkga_tick(g, &bounds);
        println!(
            "schedule g={g:3}: p={:3} p_e={:2} p_m={:2} alpha={:.3}",
            s.p, s.p_e, s.p_m, s.alpha
        );
    }

    let points: Vec<(f64, f64)> = (0..15)
        .map(|i| ((i * 29 % 17) as f64, (i * 11 % 13) as f64))
        .collect();
    let decoder = TspDecoder::new(TspInstance::from_coords(&points)?);
    let settings: &[(&str, &[(&str, &str)])] = &[
        ("static", &[]),
        (
            "schedule",
            &[("mode", "schedule"), ("p_max", "120"), ("p_min", "40"), ("pe_max", "15"), ("pe_min", "6")],
        ),
        ("qlearning", &[("mode", "qlearning"), ("eta0", "0.3")]),
        ("self-adaptive", &[("self_adaptive", "true")]),
    ];
    for (label, keys) in settings {
        let mut run = RunConfig::default();
        for (k, v) in [("p", "60"), ("p_e", "12"), ("p_m", "6"), ("max_generations", "100"), ("seed", "2")] {
            run.set(k, v)?;
        }
        for (k, v) in keys.iter() {
            run.set(k, v)?;
        }
        let out = solve(&run, &decoder)?;
        println!("{label:>14}: tour length {:.3}", out.best.score().primary());
    }
    Ok(())
}
