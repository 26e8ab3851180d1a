//! Multi-objective machinery: dominance, ranking, archiving and the
//! multi-population evolution scheme.

mod archive;
mod dominance;
mod hypervolume;
mod mp;

pub use archive::ParetoArchive;
pub use dominance::{
    crowding_distance, dominates, dominates_values, non_dominated_sort, weighted_aggregate,
};
pub use hypervolume::hypervolume_2d;
pub use mp::{mp_brkga_generation, mp_brkga_init, MpBrkgaConfig, MpState};
