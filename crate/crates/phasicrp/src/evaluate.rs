//! Scores a manifest with the pooled-pixel nearest-neighbor baseline.

use std::path::Path;

use phasicrp_core::knn::{pool_image, KnnConfig, KnnRegressor};
use phasicrp_core::metrics::MetricsReport;
use phasicrp_core::split::{split_indices, DEFAULT_RATIO};
use rayon::prelude::*;

use crate::image_io::read_png;
use crate::manifest::{read_manifest, ManifestRecord};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub ratio: f64,
    pub seed: u64,
    pub knn: KnnConfig,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            ratio: DEFAULT_RATIO,
            seed: 0,
            knn: KnnConfig::default(),
        }
    }
}

/// Splits in manifest order, fits on the training part and predicts every
/// validation record.
pub fn evaluate_records(
    records: &[ManifestRecord],
    base: &Path,
    cfg: &EvalConfig,
) -> Result<MetricsReport> {
    let split = split_indices(records.len(), cfg.ratio, cfg.seed)?;
    let pooled = records
        .par_iter()
        .map(|r| {
            let image = read_png(&base.join(&r.image_path))?;
            Ok((image.side(), pool_image(&image, cfg.knn.pool_side)))
        })
        .collect::<Result<Vec<_>>>()?;
    let side = pooled[0].0;
    if let Some(i) = pooled.iter().position(|p| p.0 != side) {
        return Err(Error::Image {
            path: base.join(&records[i].image_path),
            source: phasicrp_core::Error::DimensionMismatch,
        });
    }

    let mut model = KnnRegressor::new(cfg.knn)?;
    for &i in &split.train {
        model.add_pooled(pooled[i].1.clone(), records[i].label)?;
    }
    let predictions = split
        .val
        .par_iter()
        .map(|&i| model.predict_pooled(&pooled[i].1))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let truths: Vec<f64> = split.val.iter().map(|&i| records[i].label).collect();
    Ok(MetricsReport::from_predictions(&truths, &predictions)?)
}

pub fn evaluate(manifest: &Path, cfg: &EvalConfig) -> Result<MetricsReport> {
    let records = read_manifest(manifest)?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    evaluate_records(&records, base, cfg)
}
