//! Regression metrics. MAPE is kept as a fraction; accuracy is `100·(1 − MAPE)`.

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MetricsReport {
    /// mg/dL.
    pub rmse: f64,
    /// Fraction, e.g. `0.1235` for 12.35 %.
    pub mape: f64,
    pub accuracy_pct: f64,
    pub n: usize,
}

impl MetricsReport {
    pub fn from_predictions(truths: &[f64], predictions: &[f64]) -> Result<Self> {
        let mape = mape(truths, predictions)?;
        Ok(Self {
            rmse: rmse(truths, predictions)?,
            mape,
            accuracy_pct: accuracy_pct(mape),
            n: truths.len(),
        })
    }
}

fn check_lengths(truths: &[f64], predictions: &[f64]) -> Result<()> {
    if truths.len() != predictions.len() {
        return Err(Error::LengthMismatch {
            truths: truths.len(),
            predictions: predictions.len(),
        });
    }
    if truths.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(())
}

pub fn rmse(truths: &[f64], predictions: &[f64]) -> Result<f64> {
    check_lengths(truths, predictions)?;
    let sum: f64 = truths
        .iter()
        .zip(predictions)
        .map(|(y, p)| (p - y) * (p - y))
        .sum();
    Ok(libm::sqrt(sum / truths.len() as f64))
}

pub fn mape(truths: &[f64], predictions: &[f64]) -> Result<f64> {
    check_lengths(truths, predictions)?;
    if let Some(index) = truths.iter().position(|&y| y.is_nan() || y <= 0.0) {
        return Err(Error::NonPositiveTruth { index });
    }
    let sum: f64 = truths
        .iter()
        .zip(predictions)
        .map(|(y, p)| libm::fabs(p - y) / y)
        .sum();
    Ok(sum / truths.len() as f64)
}

pub fn accuracy_pct(mape: f64) -> f64 {
    100.0 * (1.0 - mape)
}
