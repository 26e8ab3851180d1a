use crate::chromosome::Chromosome;
use crate::error::{BrkgaError, Result};

/// Keys whose ascending order reproduces `seq`: `key[seq[j]] = (j+1)/(n+1)`.
pub fn encode_permutation(seq: &[usize], n: usize) -> Result<Chromosome> {
    if seq.len() != n || n == 0 {
        return Err(BrkgaError::invalid(format!(
            "sequence of length {} is not a permutation of 0..{n}",
            seq.len()
        )));
    }
    let mut keys = vec![f64::NAN; n];
    for (j, &city) in seq.iter().enumerate() {
        if city >= n || !keys[city].is_nan() {
            return Err(BrkgaError::invalid(format!(
                "sequence is not a permutation of 0..{n} (bad entry {city})"
            )));
        }
        keys[city] = (j + 1) as f64 / (n + 1) as f64;
    }
    Chromosome::new(keys)
}

/// Keys `0.75` for selected items and `0.25` otherwise.
pub fn encode_subset(selected: &[usize], n: usize) -> Result<Chromosome> {
    let mut keys = vec![0.25; n];
    for &i in selected {
        if i >= n {
            return Err(BrkgaError::invalid(format!("item {i} out of range 0..{n}")));
        }
        keys[i] = 0.75;
    }
    Chromosome::new(keys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoders::ascending_order;

    #[test]
    fn worked_example_keys() {
        let c = encode_permutation(&[4, 0, 2, 3, 1], 5).unwrap();
        let expect = [2.0 / 6.0, 5.0 / 6.0, 3.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0];
        assert_eq!(c.keys(), &expect);
        assert_eq!(ascending_order(&c), vec![4, 0, 2, 3, 1]);
    }

    #[test]
    fn identity_is_increasing() {
        let c = encode_permutation(&[0, 1, 2, 3], 4).unwrap();
        assert!(c.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn singleton() {
        assert_eq!(encode_permutation(&[0], 1).unwrap().keys(), &[0.5]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(encode_permutation(&[0, 0], 2).is_err());
        assert!(encode_permutation(&[0, 2], 2).is_err());
        assert!(encode_permutation(&[0], 2).is_err());
    }

    #[test]
    fn subsets() {
        assert_eq!(encode_subset(&[], 3).unwrap().keys(), &[0.25; 3]);
        assert_eq!(encode_subset(&[0, 1, 2], 3).unwrap().keys(), &[0.75; 3]);
        assert!(encode_subset(&[3], 3).is_err());
    }
}
