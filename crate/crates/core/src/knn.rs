//! k-nearest-neighbor regression over mean-pooled RGB images.

use alloc::vec::Vec;

use crate::encode::RgbImage;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnnConfig {
    pub k: usize,
    /// Images are pooled to `pool_side × pool_side × 3` before comparison.
    pub pool_side: usize,
}

impl Default for KnnConfig {
    fn default() -> Self {
        Self {
            k: 5,
            pool_side: 32,
        }
    }
}

/// Adaptive average pooling to `side × side` cells, flattened row-major with
/// interleaved channels. Cell `i` spans rows `floor(i·W/side)..ceil((i+1)·W/side)`,
/// so no cell is empty even when the image is smaller than the grid.
pub fn pool_image(image: &RgbImage, side: usize) -> Vec<f64> {
    let w = image.side();
    let bounds = |i: usize| (i * w / side, ((i + 1) * w).div_ceil(side));
    let px = image.pixels();
    let mut out = Vec::with_capacity(side * side * 3);
    for i in 0..side {
        let (r0, r1) = bounds(i);
        for j in 0..side {
            let (c0, c1) = bounds(j);
            let mut acc = [0u64; 3];
            for r in r0..r1 {
                for p in px[(r * w + c0) * 3..(r * w + c1) * 3].chunks_exact(3) {
                    acc[0] += u64::from(p[0]);
                    acc[1] += u64::from(p[1]);
                    acc[2] += u64::from(p[2]);
                }
            }
            let count = ((r1 - r0) * (c1 - c0)) as f64;
            out.extend(acc.iter().map(|&a| a as f64 / count));
        }
    }
    out
}

/// Pooled training features with their labels, in insertion order.
#[derive(Debug, Clone)]
pub struct KnnRegressor {
    config: KnnConfig,
    features: Vec<Vec<f64>>,
    labels: Vec<f64>,
    image_side: Option<usize>,
}

impl KnnRegressor {
    pub fn new(config: KnnConfig) -> Result<Self> {
        if config.k == 0 {
            return Err(Error::InvalidConfig("k must be at least 1"));
        }
        if config.pool_side == 0 {
            return Err(Error::InvalidConfig("pool side must be at least 1"));
        }
        Ok(Self {
            config,
            features: Vec::new(),
            labels: Vec::new(),
            image_side: None,
        })
    }

    pub fn config(&self) -> KnnConfig {
        self.config
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    fn check_side(&self, image: &RgbImage) -> Result<()> {
        match self.image_side {
            Some(s) if s != image.side() => Err(Error::DimensionMismatch),
            _ => Ok(()),
        }
    }

    pub fn add(&mut self, image: &RgbImage, label: f64) -> Result<()> {
        self.check_side(image)?;
        self.image_side = Some(image.side());
        self.add_pooled(pool_image(image, self.config.pool_side), label)
    }

    /// Adds an already pooled feature vector (see [`pool_image`]).
    pub fn add_pooled(&mut self, features: Vec<f64>, label: f64) -> Result<()> {
        let p = self.config.pool_side;
        if features.len() != p * p * 3 {
            return Err(Error::DimensionMismatch);
        }
        self.features.push(features);
        self.labels.push(label);
        Ok(())
    }

    pub fn predict(&self, image: &RgbImage) -> Result<f64> {
        self.check_side(image)?;
        self.predict_pooled(&pool_image(image, self.config.pool_side))
    }

    /// Mean label of the `k` nearest training entries by Euclidean distance;
    /// equal distances resolve to the earlier entry.
    pub fn predict_pooled(&self, query: &[f64]) -> Result<f64> {
        if self.is_empty() {
            return Err(Error::EmptyInput);
        }
        let k = self.config.k;
        if k > self.len() {
            return Err(Error::KTooLarge {
                k,
                available: self.len(),
            });
        }
        let p = self.config.pool_side;
        if query.len() != p * p * 3 {
            return Err(Error::DimensionMismatch);
        }
        let mut ranked: Vec<(f64, usize)> = self
            .features
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let d: f64 = f.iter().zip(query).map(|(a, b)| (a - b) * (a - b)).sum();
                (d, i)
            })
            .collect();
        ranked.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let sum: f64 = ranked[..k].iter().map(|&(_, i)| self.labels[i]).sum();
        Ok(sum / k as f64)
    }
}

/// One-shot prediction for `query` against `train`.
pub fn knn_predict(train: &[(RgbImage, f64)], query: &RgbImage, config: KnnConfig) -> Result<f64> {
    let mut model = KnnRegressor::new(config)?;
    for (image, label) in train {
        model.add(image, *label)?;
    }
    model.predict(query)
}
