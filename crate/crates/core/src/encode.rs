//! Min-max quantization of recurrence matrices and RGB channel fusion.

use alloc::vec::Vec;

use crate::recurrence::{RecurrenceKernel, RecurrenceMatrix, RpMode, SignConfig};
use crate::signal::{ChannelId, LabeledWindow};
use crate::{Error, Result};

/// Which recurrence construction an image was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "SCREAMING_SNAKE_CASE"))]
pub enum ImageMode {
    TemporalSigned,
    Phasic,
}

impl ImageMode {
    pub fn rp_mode(self) -> RpMode {
        match self {
            ImageMode::TemporalSigned => RpMode::TemporalSigned,
            ImageMode::Phasic => RpMode::Phasic,
        }
    }

    /// Matrix builder for one channel of a window.
    pub fn kernel(self, series: &[f64], cfg: SignConfig) -> Result<RecurrenceKernel> {
        match self {
            ImageMode::TemporalSigned => RecurrenceKernel::temporal(series, cfg),
            ImageMode::Phasic => RecurrenceKernel::phasic(series, cfg),
        }
    }
}

/// One 8-bit channel, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    pub side: usize,
    pub data: Vec<u8>,
}

/// Square 8-bit RGB image with interleaved pixels; R = TEMP, G = EDA, B = BVP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgbImage {
    side: usize,
    pixels: Vec<u8>,
}

impl RgbImage {
    pub fn new(side: usize, pixels: Vec<u8>) -> Result<Self> {
        if side == 0 || pixels.len() != side * side * 3 {
            return Err(Error::DimensionMismatch);
        }
        Ok(Self { side, pixels })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// Interleaved RGB bytes.
    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixel(&self, row: usize, col: usize) -> [u8; 3] {
        let i = (row * self.side + col) * 3;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    pub fn plane(&self, channel: ChannelId) -> Plane {
        Plane {
            side: self.side,
            data: self
                .pixels
                .iter()
                .skip(channel.index())
                .step_by(3)
                .copied()
                .collect(),
        }
    }
}

/// Maps `[min, max]` of the matrix onto `0..=255` with `floor(255·t + 0.5)`.
/// A constant matrix maps to all zeros.
pub fn normalize_quantize(matrix: &RecurrenceMatrix) -> Plane {
    let values = matrix.as_slice();
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let data = if hi > lo {
        let span = hi - lo;
        values
            .iter()
            .map(|&v| libm::floor(255.0 * (v - lo) / span + 0.5) as u8)
            .collect()
    } else {
        alloc::vec![0; values.len()]
    };
    Plane {
        side: matrix.side(),
        data,
    }
}

/// Quantizes each matrix independently and stacks them as R, G, B.
pub fn merge_rgb(
    temp: &RecurrenceMatrix,
    eda: &RecurrenceMatrix,
    bvp: &RecurrenceMatrix,
) -> Result<RgbImage> {
    let side = temp.side();
    if [eda, bvp]
        .iter()
        .any(|m| m.side() != side || m.mode() != temp.mode())
    {
        return Err(Error::ChannelMismatch);
    }
    let planes = [temp, eda, bvp].map(normalize_quantize);
    let mut pixels = Vec::with_capacity(side * side * 3);
    for i in 0..side * side {
        pixels.extend(planes.iter().map(|p| p.data[i]));
    }
    RgbImage::new(side, pixels)
}

/// Full per-window encoding: one recurrence matrix per channel, fused.
pub fn encode_window(window: &LabeledWindow, mode: ImageMode, cfg: SignConfig) -> Result<RgbImage> {
    let [t, e, b] = ChannelId::ALL.map(|c| mode.kernel(&window.column(c), cfg));
    merge_rgb(&t?.compute(), &e?.compute(), &b?.compute())
}
