//! A biased random-key genetic algorithm (BRKGA) framework.
//!
//! Chromosomes are vectors of keys in `[0, 1)`; a problem-specific
//! [`Decoder`] turns keys into a fitness. Each generation copies the elite
//! set, injects random mutants and fills the rest with offspring of biased
//! crossover between elite and non-elite parents.
//!
//! Beyond the classical loop the crate provides multi-parent crossover,
//! island migration, shake and reset operators, implicit path-relinking,
//! online parameter control (linear schedules, self-adaptive genes,
//! Q-learning) and multi-objective evolution with a Pareto archive.
//! The [`harness`] module wires these into a configurable solver with
//! CSV reporting, used by the `brkga` binary.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod chromosome;
pub mod config;
pub mod control;
pub mod decoder;
pub mod decoders;
pub mod diversity;
pub mod error;
pub mod evolve;
pub mod fmt;
pub mod harness;
pub mod ipr;
pub mod mo;
pub mod population;
pub mod rng;

pub use chromosome::{new_random_chromosome, Chromosome, Fitness, Individual, Sense};
pub use config::{BiasKind, BrkgaConfig, IprVariant, ParentPool};
pub use decoder::{Decoder, FnDecoder};
pub use error::{BrkgaError, Result};
pub use population::{init_population, Population, Ranking};
pub use rng::RngStream;
