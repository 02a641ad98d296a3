//! File formats, batch drivers and evaluation for phasic recurrence-plot
//! images. The numerical work lives in [`phasicrp_core`]; this crate reads
//! wristband exports and CGM tables, writes PNG images with a JSONL manifest,
//! and scores a manifest with the nearest-neighbor baseline.

pub mod cgm;
pub mod e4;
mod error;
pub mod evaluate;
pub mod image_io;
pub mod manifest;
pub mod parallel;
pub mod pipeline;
pub mod report;
pub mod session;

pub use self::error::{Error, Result};
pub use phasicrp_core as core;
