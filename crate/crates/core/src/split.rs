//! Seeded train/validation split.
//!
//! The shuffle is a Fisher–Yates pass driven by SplitMix64, spelled out so
//! other tools can reproduce split membership bit for bit:
//!
//! ```text
//! state = seed
//! next():  state += 0x9E3779B97F4A7C15        (wrapping)
//!          z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
//!          z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!          return z ^ (z >> 31)
//! order = [0, 1, ..., n-1]
//! for i in n-1 down to 1:  swap(order[i], order[next() % (i + 1)])
//! train = order[..floor(ratio * n)], validation = the rest
//! ```

use alloc::vec::Vec;

use crate::{Error, Result};

/// Default training fraction.
pub const DEFAULT_RATIO: f64 = 0.70;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Indices into the original record order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub train: Vec<usize>,
    pub val: Vec<usize>,
}

pub fn split_indices(n: usize, ratio: f64, seed: u64) -> Result<Split> {
    if !(0.0..=1.0).contains(&ratio) {
        return Err(Error::InvalidRatio(ratio));
    }
    if n < 2 {
        return Err(Error::NotEnoughRecords(n));
    }
    let n_train = libm::floor(ratio * n as f64) as usize;
    if n_train == 0 {
        return Err(Error::EmptyTrainingSet);
    }
    if n_train >= n {
        return Err(Error::EmptyValidationSet);
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = SplitMix64::new(seed);
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    let val = order.split_off(n_train);
    Ok(Split { train: order, val })
}

pub fn split_train_val<T: Clone>(records: &[T], ratio: f64, seed: u64) -> Result<(Vec<T>, Vec<T>)> {
    let split = split_indices(records.len(), ratio, seed)?;
    let pick = |idx: &[usize]| idx.iter().map(|&i| records[i].clone()).collect();
    Ok((pick(&split.train), pick(&split.val)))
}
