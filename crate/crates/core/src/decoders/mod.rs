//! Reference decoders and warm-start encoders.

mod encode;
mod knapsack;
mod smtt;
mod tsp;

pub use encode::{encode_permutation, encode_subset};
pub use knapsack::{knapsack_decode, knapsack_select, KnapsackDecoder, KnapsackInstance};
pub use smtt::{smtt_decode, SmttDecoder, SmttInstance};
pub use tsp::{tsp_decode, TspDecoder, TspInstance};

use crate::error::{BrkgaError, Result};

/// Indices sorted by ascending key; equal keys keep index order.
pub fn ascending_order(keys: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].total_cmp(&keys[b]));
    idx
}

pub(crate) fn expect_len(keys: &[f64], n: usize) -> Result<()> {
    if keys.len() != n {
        return Err(BrkgaError::invalid(format!(
            "chromosome has {} keys, instance has {n} elements",
            keys.len()
        )));
    }
    Ok(())
}
