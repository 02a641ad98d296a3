//! Deterministic synthetic recording sessions.
//!
//! The generated session alternates glucose classes every five minutes. Each
//! class has its own BVP frequency, so the label is recoverable from the
//! BVP channel alone; TEMP and EDA are class-independent backgrounds.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::preprocess::BVP_RATE;
use crate::signal::{ChannelId, GlucoseReading, RawChannelSeries, TARGET_RATE, WINDOW_SECONDS};
use crate::{Error, Result};

/// Session start used when none is given (2020-07-16T16:40:00Z).
pub const DEFAULT_START_TIME: i64 = 1_594_917_600;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlucoseClass {
    /// Frequency of the BVP sinusoid, Hz.
    pub bvp_hz: f64,
    /// mg/dL.
    pub glucose: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub seed: u64,
    pub duration_s: u32,
    pub classes: Vec<GlucoseClass>,
    pub noise_amplitude: f64,
    pub start_time: i64,
}

impl SynthConfig {
    pub fn new(
        seed: u64,
        duration_s: u32,
        classes: Vec<GlucoseClass>,
        noise_amplitude: f64,
    ) -> Self {
        Self {
            seed,
            duration_s,
            classes,
            noise_amplitude,
            start_time: DEFAULT_START_TIME,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.duration_s < 600 {
            return Err(Error::InvalidConfig("duration must be at least 600 s"));
        }
        if self.classes.is_empty() {
            return Err(Error::InvalidConfig("at least one class is required"));
        }
        for c in &self.classes {
            if !(c.bvp_hz > 0.0 && c.bvp_hz < 2.0) {
                return Err(Error::InvalidConfig(
                    "class frequency must lie in (0, 2) Hz",
                ));
            }
            if !(c.glucose.is_finite() && c.glucose > 0.0) {
                return Err(Error::InvalidConfig("class glucose must be positive"));
            }
        }
        if !(self.noise_amplitude.is_finite() && self.noise_amplitude >= 0.0) {
            return Err(Error::InvalidConfig(
                "noise amplitude must be finite and non-negative",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SessionBundle {
    pub temp: RawChannelSeries,
    pub eda: RawChannelSeries,
    pub bvp: RawChannelSeries,
    pub glucose: Vec<GlucoseReading>,
    pub participant: String,
}

/// Builds a session whose every sample is a function of the config alone.
///
/// Block `b` covers `[300b, 300(b+1))` s, uses class `b mod classes.len()`
/// and is labelled by a reading at its end. Within a block BVP is
/// `sin(2π·f·τ)` (τ = time since block start) plus uniform noise in
/// `[−a, a]`; TEMP is `33 + 2e-4·t` °C and EDA `1 + 0.2·sin(2π·t/600)` µS.
pub fn synth_session(config: &SynthConfig) -> Result<SessionBundle> {
    config.validate()?;
    let duration = config.duration_s as usize;
    let block_s = WINDOW_SECONDS as usize;
    let class_at = |second: usize| config.classes[(second / block_s) % config.classes.len()];

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let a = config.noise_amplitude;
    let bvp_per_s = BVP_RATE as usize;
    let bvp: Vec<f64> = (0..duration * bvp_per_s)
        .map(|i| {
            let class = class_at(i / bvp_per_s);
            let tau = (i % (block_s * bvp_per_s)) as f64 / BVP_RATE;
            let noise = if a > 0.0 { rng.gen_range(-a..=a) } else { 0.0 };
            libm::sin(2.0 * PI * class.bvp_hz * tau) + noise
        })
        .collect();

    let slow_len = duration * TARGET_RATE as usize;
    let temp: Vec<f64> = (0..slow_len)
        .map(|i| 33.0 + 2e-4 * (i as f64 / TARGET_RATE))
        .collect();
    let eda: Vec<f64> = (0..slow_len)
        .map(|i| 1.0 + 0.2 * libm::sin(2.0 * PI * (i as f64 / TARGET_RATE) / 600.0))
        .collect();

    let glucose = (1..=duration / block_s)
        .map(|k| {
            let class = config.classes[(k - 1) % config.classes.len()];
            GlucoseReading::new(config.start_time + (k * block_s) as i64, class.glucose)
        })
        .collect::<Result<Vec<_>>>()?;

    let start = config.start_time;
    Ok(SessionBundle {
        temp: RawChannelSeries::new(ChannelId::Temp, start, TARGET_RATE, temp)?,
        eda: RawChannelSeries::new(ChannelId::Eda, start, TARGET_RATE, eda)?,
        bvp: RawChannelSeries::new(ChannelId::Bvp, start, BVP_RATE, bvp)?,
        glucose,
        participant: format!("synth-{}", config.seed),
    })
}
