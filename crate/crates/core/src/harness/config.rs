//! Run configuration files.
//!
//! Flat `key = value` lines grouped under section headers; section and key
//! names are case-insensitive and relative instance paths are resolved
//! against the config file's directory. Every key is unique across sections, so
//! sweep grids and command-line overrides name keys without a section.
//!
//! ```text
//! [problem]
//! kind = tsp
//! instance = cities.txt
//!
//! [brkga]
//! p = 100
//! p_e = 15
//! p_m = 10
//! rho = 0.7
//! seed = 7
//!
//! [stop]
//! max_generations = 300
//! ```

use std::path::{Path, PathBuf};
use std::str::FromStr;

use ini::{Ini, ParseOption};

use crate::config::{BiasKind, BrkgaConfig, IprVariant, ParentPool};
use crate::control::ScheduleBounds;
use crate::error::{BrkgaError, Result};

use super::instance::ProblemKind;

/// When a run ends; the first satisfied rule wins.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct StopRules {
    pub max_generations: Option<u64>,
    /// Generations without strict improvement of the incumbent.
    pub max_stall: Option<u64>,
    pub wall_clock_seconds: Option<f64>,
}

impl StopRules {
    pub fn validate(&self) -> Result<()> {
        if self.max_generations.is_none()
            && self.max_stall.is_none()
            && self.wall_clock_seconds.is_none()
        {
            return Err(BrkgaError::config("at least one stopping rule must be set"));
        }
        if let Some(w) = self.wall_clock_seconds {
            if !(w >= 0.0 && w.is_finite()) {
                return Err(BrkgaError::config("wall_clock_seconds must be finite and >= 0"));
            }
        }
        Ok(())
    }
}

/// Linear schedule endpoints; unset values default to the base config.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScheduleSettings {
    pub p_max: Option<usize>,
    pub p_min: Option<usize>,
    pub pe_min: Option<usize>,
    pub pe_max: Option<usize>,
    pub pm_max: Option<usize>,
    pub pm_min: Option<usize>,
    pub alpha_max: Option<f64>,
    pub alpha_min: Option<f64>,
    pub g_max: Option<u64>,
}

impl ScheduleSettings {
    /// Fills unset endpoints from `base`; `g_max` falls back to
    /// `max_generations`.
    pub fn resolve(&self, base: &BrkgaConfig, stop: &StopRules) -> Result<ScheduleBounds> {
        let g_max = self.g_max.or(stop.max_generations).ok_or_else(|| {
            BrkgaError::config("schedule control needs g_max or max_generations")
        })?;
        let b = ScheduleBounds {
            p_max: self.p_max.unwrap_or(base.p),
            p_min: self.p_min.unwrap_or(base.p),
            pe_min: self.pe_min.unwrap_or(base.p_e),
            pe_max: self.pe_max.unwrap_or(base.p_e),
            pm_max: self.pm_max.unwrap_or(base.p_m),
            pm_min: self.pm_min.unwrap_or(base.p_m),
            alpha_max: self.alpha_max.unwrap_or(1.0),
            alpha_min: self.alpha_min.unwrap_or(1.0),
            g_max: g_max.max(1),
        };
        b.validate()?;
        Ok(b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QSettings {
    pub learning_rate: f64,
    pub discount: f64,
    pub eta0: f64,
    pub decay: f64,
}

impl Default for QSettings {
    fn default() -> Self {
        QSettings {
            learning_rate: 0.1,
            discount: 0.9,
            eta0: 0.3,
            decay: 0.01,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ControlMode {
    #[default]
    None,
    Schedule,
    QLearning,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParetoSettings {
    /// All-objective islands.
    pub pi_islands: usize,
    pub pool_mix_interval: u64,
    pub archive_capacity: Option<usize>,
    pub archive_objective_dedup: bool,
}

impl Default for ParetoSettings {
    fn default() -> Self {
        ParetoSettings {
            pi_islands: 2,
            pool_mix_interval: 10,
            archive_capacity: None,
            archive_objective_dedup: true,
        }
    }
}

/// Output locations, relative to `out_dir` unless absolute.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputSettings {
    pub out_dir: PathBuf,
    pub trace_file: PathBuf,
    pub best_file: PathBuf,
    pub pareto_file: PathBuf,
    pub sweep_file: PathBuf,
}

impl Default for OutputSettings {
    fn default() -> Self {
        OutputSettings {
            out_dir: PathBuf::from("."),
            trace_file: PathBuf::from("trace.csv"),
            best_file: PathBuf::from("best.txt"),
            pareto_file: PathBuf::from("pareto.tsv"),
            sweep_file: PathBuf::from("sweep.csv"),
        }
    }
}

impl OutputSettings {
    pub fn resolve(&self, file: &Path) -> PathBuf {
        self.out_dir.join(file)
    }
}

/// Everything a harness run needs besides the decoder.
///
/// `brkga.n` is taken from the decoder when the run starts.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub brkga: BrkgaConfig,
    pub problem: ProblemKind,
    pub instance: PathBuf,
    pub stop: StopRules,
    pub control: ControlMode,
    pub schedule: ScheduleSettings,
    pub q: QSettings,
    /// Let a path-relinking winner replace the worst elite of its base island.
    pub ipr_replace: bool,
    pub pareto: ParetoSettings,
    pub output: OutputSettings,
    pub quiet: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        let mut brkga = BrkgaConfig::new(1, 100, 15, 10).expect("default parameters are valid");
        brkga.stall_shake = Some(100);
        brkga.stall_reset = Some(500);
        RunConfig {
            brkga,
            problem: ProblemKind::Tsp,
            instance: PathBuf::new(),
            stop: StopRules::default(),
            control: ControlMode::None,
            schedule: ScheduleSettings::default(),
            q: QSettings::default(),
            ipr_replace: true,
            pareto: ParetoSettings::default(),
            output: OutputSettings::default(),
            quiet: false,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| BrkgaError::config(format!("bad value `{value}` for `{key}`")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value.to_ascii_lowercase().as_str() {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        _ => Err(BrkgaError::config(format!("bad boolean `{value}` for `{key}`"))),
    }
}

/// `0` disables an interval trigger.
fn parse_interval(key: &str, value: &str) -> Result<Option<u64>> {
    let v: u64 = parse(key, value)?;
    Ok((v > 0).then_some(v))
}

fn parse_enum<T: Copy>(key: &str, value: &str, options: &[(&str, T)]) -> Result<T> {
    let v = value.to_ascii_lowercase();
    options
        .iter()
        .find(|(name, _)| *name == v)
        .map(|(_, t)| *t)
        .ok_or_else(|| {
            let names: Vec<&str> = options.iter().map(|(n, _)| *n).collect();
            BrkgaError::config(format!(
                "bad value `{value}` for `{key}`, expected one of {}",
                names.join(", ")
            ))
        })
}

impl RunConfig {
    /// Reads a config file. A relative instance path is resolved against the
    /// file's directory.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| BrkgaError::io(path, e))?;
        let run = Self::from_str_in(&text, path.parent().unwrap_or(Path::new("")))?;
        if run.instance.as_os_str().is_empty() {
            return Err(BrkgaError::config(format!(
                "{}: missing `instance` key",
                path.display()
            )));
        }
        if !run.instance.is_file() {
            return Err(BrkgaError::io(
                &run.instance,
                std::io::Error::new(std::io::ErrorKind::NotFound, "instance file not found"),
            ));
        }
        run.stop.validate()?;
        Ok(run)
    }

    /// Parses config text; relative instance paths are joined to `base_dir`.
    pub fn from_str_in(text: &str, base_dir: &Path) -> Result<Self> {
        let opt = ParseOption {
            enabled_escape: false,
            ..ParseOption::default()
        };
        let ini = Ini::load_from_str_opt(text, opt)
            .map_err(|e| BrkgaError::config(format!("malformed config: {e}")))?;
        let mut run = RunConfig::default();
        for (_, props) in ini.iter() {
            for (key, value) in props.iter() {
                run.set(key, value)?;
            }
        }
        if run.instance.is_relative() && !run.instance.as_os_str().is_empty() {
            run.instance = base_dir.join(&run.instance);
        }
        Ok(run)
    }

    /// Applies one `key = value` setting. Keys may carry a `section.` prefix.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let lower = key.trim().to_ascii_lowercase();
        let k = lower.rsplit('.').next().unwrap_or(&lower);
        let v = value.trim();
        let b = &mut self.brkga;
        match k {
            "kind" | "problem" => self.problem = v.parse()?,
            "instance" => self.instance = PathBuf::from(v),

            "p" => b.p = parse(k, v)?,
            "p_e" => b.p_e = parse(k, v)?,
            "p_m" => b.p_m = parse(k, v)?,
            "rho" => b.rho = parse(k, v)?,
            "pi_t" => b.pi_t = parse(k, v)?,
            "pi_e" => b.pi_e = parse(k, v)?,
            "bias" => {
                b.bias_kind = parse_enum(
                    k,
                    v,
                    &[
                        ("constant", BiasKind::Constant),
                        ("linear", BiasKind::Linear),
                        ("loginverse", BiasKind::LogInverse),
                        ("quadratic", BiasKind::Quadratic),
                        ("exponential", BiasKind::Exponential),
                    ],
                )?
            }
            "parent_pool" => {
                b.second_parent_pool = parse_enum(
                    k,
                    v,
                    &[("nonelite", ParentPool::NonElite), ("entire", ParentPool::Entire)],
                )?
            }
            "islands" => b.num_islands = parse(k, v)?,
            "migration_interval" => b.migration_interval = parse(k, v)?,
            "migration_count" => b.migration_count = parse(k, v)?,
            "seed" => b.seed = parse(k, v)?,
            "self_adaptive" => b.self_adaptive = parse_bool(k, v)?,
            "elite_min_distance" => b.elite_min_distance = parse(k, v)?,

            "stall_shake" => b.stall_shake = parse_interval(k, v)?,
            "stall_reset" => b.stall_reset = parse_interval(k, v)?,
            "shake_intensity" => b.shake_intensity = parse(k, v)?,
            "ipr_interval" => b.ipr_interval = parse_interval(k, v)?,
            "ipr_min_distance" => b.ipr_min_distance = parse(k, v)?,
            "ipr_variant" => {
                b.ipr_variant = parse_enum(
                    k,
                    v,
                    &[
                        ("permutation", IprVariant::Permutation),
                        ("indicator", IprVariant::Indicator),
                    ],
                )?
            }
            "ipr_block_size" => b.ipr_block_size = parse(k, v)?,
            "ipr_depth" => b.ipr_depth = parse(k, v)?,
            "ipr_replace" => self.ipr_replace = parse_bool(k, v)?,

            "max_generations" => self.stop.max_generations = Some(parse(k, v)?),
            "max_stall" => self.stop.max_stall = Some(parse(k, v)?),
            "wall_clock_seconds" => self.stop.wall_clock_seconds = Some(parse(k, v)?),

            "mode" => {
                self.control = parse_enum(
                    k,
                    v,
                    &[
                        ("none", ControlMode::None),
                        ("schedule", ControlMode::Schedule),
                        ("qlearning", ControlMode::QLearning),
                    ],
                )?
            }
            "p_max" => self.schedule.p_max = Some(parse(k, v)?),
            "p_min" => self.schedule.p_min = Some(parse(k, v)?),
            "pe_min" => self.schedule.pe_min = Some(parse(k, v)?),
            "pe_max" => self.schedule.pe_max = Some(parse(k, v)?),
            "pm_max" => self.schedule.pm_max = Some(parse(k, v)?),
            "pm_min" => self.schedule.pm_min = Some(parse(k, v)?),
            "alpha_max" => self.schedule.alpha_max = Some(parse(k, v)?),
            "alpha_min" => self.schedule.alpha_min = Some(parse(k, v)?),
            "g_max" => self.schedule.g_max = Some(parse(k, v)?),
            "learning_rate" => self.q.learning_rate = parse(k, v)?,
            "discount" => self.q.discount = parse(k, v)?,
            "eta0" => self.q.eta0 = parse(k, v)?,
            "decay" => self.q.decay = parse(k, v)?,

            "pi_islands" => self.pareto.pi_islands = parse(k, v)?,
            "pool_mix_interval" => self.pareto.pool_mix_interval = parse(k, v)?,
            "archive_capacity" => {
                let c: usize = parse(k, v)?;
                self.pareto.archive_capacity = (c > 0).then_some(c);
            }
            "archive_objective_dedup" => self.pareto.archive_objective_dedup = parse_bool(k, v)?,

            "out_dir" => self.output.out_dir = PathBuf::from(v),
            "trace_file" => self.output.trace_file = PathBuf::from(v),
            "best_file" => self.output.best_file = PathBuf::from(v),
            "pareto_file" => self.output.pareto_file = PathBuf::from(v),
            "sweep_file" => self.output.sweep_file = PathBuf::from(v),
            "quiet" => self.quiet = parse_bool(k, v)?,

            _ => return Err(BrkgaError::config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    /// The evolution parameters with `n` taken from the decoder, validated.
    pub fn brkga_for(&self, n: usize) -> Result<BrkgaConfig> {
        let mut cfg = self.brkga.clone();
        cfg.n = n;
        cfg.validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "
[Problem]
Kind = KNAPSACK
instance = items.txt

[brkga]
P = 50
p_e = 5
p_m = 5
rho = 0.75
bias = Quadratic
islands = 2
migration_interval = 10

[triggers]
stall_shake = 0
ipr_interval = 20

[stop]
max_generations = 40

[control]
mode = qlearning
eta0 = 0.5
";

    #[test]
    fn parses_case_insensitively() {
        let run = RunConfig::from_str_in(SAMPLE, Path::new("/data")).unwrap();
        assert_eq!(run.problem, ProblemKind::Knapsack);
        assert_eq!(run.instance, PathBuf::from("/data/items.txt"));
        assert_eq!(run.brkga.p, 50);
        assert_eq!(run.brkga.rho, 0.75);
        assert_eq!(run.brkga.bias_kind, BiasKind::Quadratic);
        assert_eq!(run.brkga.num_islands, 2);
        assert_eq!(run.brkga.stall_shake, None);
        assert_eq!(run.brkga.stall_reset, Some(500));
        assert_eq!(run.brkga.ipr_interval, Some(20));
        assert_eq!(run.stop.max_generations, Some(40));
        assert_eq!(run.control, ControlMode::QLearning);
        assert_eq!(run.q.eta0, 0.5);
        run.brkga_for(10).unwrap();
    }

    #[test]
    fn defaults_are_shake_100_reset_500() {
        let run = RunConfig::default();
        assert_eq!(run.brkga.stall_shake, Some(100));
        assert_eq!(run.brkga.stall_reset, Some(500));
    }

    #[test]
    fn unknown_keys_and_values_rejected() {
        assert!(RunConfig::from_str_in("[brkga]\npopsize = 3\n", Path::new(".")).is_err());
        assert!(RunConfig::from_str_in("[brkga]\nrho = high\n", Path::new(".")).is_err());
        assert!(RunConfig::from_str_in("[brkga]\nbias = cubic\n", Path::new(".")).is_err());
    }

    #[test]
    fn section_prefixed_override() {
        let mut run = RunConfig::default();
        run.set("brkga.rho", "0.8").unwrap();
        run.set("SEED", "9").unwrap();
        assert_eq!(run.brkga.rho, 0.8);
        assert_eq!(run.brkga.seed, 9);
    }

    #[test]
    fn stopping_rule_required() {
        assert!(StopRules::default().validate().is_err());
        let s = StopRules {
            max_stall: Some(3),
            ..Default::default()
        };
        s.validate().unwrap();
    }

    #[test]
    fn schedule_defaults_from_base() {
        let run = RunConfig::default();
        let stop = StopRules {
            max_generations: Some(50),
            ..Default::default()
        };
        let b = run.schedule.resolve(&run.brkga, &stop).unwrap();
        assert_eq!((b.p_max, b.p_min, b.g_max), (100, 100, 50));
        assert!(run.schedule.resolve(&run.brkga, &StopRules::default()).is_err());
    }
}
