//! Phasic recurrence plots for wearable biosignals.
//!
//! The crate turns tri-channel (TEMP, EDA, BVP) sensor windows into signed
//! recurrence matrices, either over the raw samples (temporal) or over the
//! phase angles of the window's one-sided Fourier spectrum (phasic), and fuses
//! the three channels into an 8-bit RGB image. It also carries the
//! preprocessing that cuts labeled windows out of a recording session, a
//! deterministic synthetic session generator, and the regression metrics and
//! nearest-neighbor baseline used to score the images.
//!
//! Everything here is pure computation over `alloc` containers; file formats,
//! parallel drivers and the command line live in the `phasicrp` crate.

#![no_std]

extern crate alloc;

pub mod encode;
mod error;
pub mod knn;
pub mod metrics;
pub mod preprocess;
pub mod recurrence;
pub mod signal;
pub mod spectrum;
pub mod split;
pub mod synth;

pub use self::error::{Error, Result};
pub use self::signal::{
    embed, ChannelId, GlucoseReading, LabeledWindow, PhaseSpaceEmbedding, RawChannelSeries, State,
};
