//! Domain types shared by every stage, and the delay-1 phase-space embedding.

use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use crate::{Error, Result};

/// Samples per labeled window (5 minutes at 4 Hz).
pub const WINDOW_LEN: usize = 1200;
/// Duration covered by one labeled window.
pub const WINDOW_SECONDS: i64 = 300;
/// Common rate every channel is brought to before windowing.
pub const TARGET_RATE: f64 = 4.0;

/// A point in the two-dimensional phase space, `(x_j, x_{j+1})`.
pub type State = [f64; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "UPPERCASE"))]
pub enum ChannelId {
    Temp,
    Eda,
    Bvp,
}

impl ChannelId {
    /// Channels in window column / image plane order: R, G, B.
    pub const ALL: [ChannelId; 3] = [ChannelId::Temp, ChannelId::Eda, ChannelId::Bvp];

    /// Column in a [`LabeledWindow`] and plane in an RGB image.
    pub const fn index(self) -> usize {
        match self {
            ChannelId::Temp => 0,
            ChannelId::Eda => 1,
            ChannelId::Bvp => 2,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            ChannelId::Temp => "TEMP",
            ChannelId::Eda => "EDA",
            ChannelId::Bvp => "BVP",
        }
    }
}

impl core::fmt::Display for ChannelId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// One sensor channel sampled at a fixed rate from `start_time`.
///
/// Values are always finite. Spans listed in `breaks` hold placeholder values
/// (see [`crate::preprocess::fill_gaps`]) and must not be used for windowing.
#[derive(Debug, Clone, PartialEq)]
pub struct RawChannelSeries {
    channel: ChannelId,
    start_time: i64,
    rate: f64,
    values: Vec<f64>,
    breaks: Vec<Range<usize>>,
}

impl RawChannelSeries {
    pub fn new(channel: ChannelId, start_time: i64, rate: f64, values: Vec<f64>) -> Result<Self> {
        Self::with_breaks(channel, start_time, rate, values, Vec::new())
    }

    pub(crate) fn with_breaks(
        channel: ChannelId,
        start_time: i64,
        rate: f64,
        values: Vec<f64>,
        breaks: Vec<Range<usize>>,
    ) -> Result<Self> {
        if !(rate.is_finite() && rate > 0.0) {
            return Err(Error::InvalidRate(rate));
        }
        if values.is_empty() {
            return Err(Error::EmptyChannel);
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidSample { index });
        }
        debug_assert!(breaks
            .iter()
            .all(|b| b.start < b.end && b.end <= values.len()));
        Ok(Self {
            channel,
            start_time,
            rate,
            values,
            breaks,
        })
    }

    pub fn channel(&self) -> ChannelId {
        self.channel
    }

    /// Unix seconds of the first sample.
    pub fn start_time(&self) -> i64 {
        self.start_time
    }

    /// Samples per second.
    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sorted, disjoint sample ranges that are session breaks.
    pub fn breaks(&self) -> &[Range<usize>] {
        &self.breaks
    }

    /// True if any sample in `range` lies in a break.
    pub fn has_break_in(&self, range: Range<usize>) -> bool {
        self.breaks
            .iter()
            .any(|b| b.start < range.end && range.start < b.end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GlucoseReading {
    /// Unix seconds.
    pub timestamp: i64,
    /// mg/dL, strictly positive.
    pub value: f64,
}

impl GlucoseReading {
    pub fn new(timestamp: i64, value: f64) -> Result<Self> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::InvalidGlucose(value));
        }
        Ok(Self { timestamp, value })
    }
}

/// A [`WINDOW_LEN`]×3 aligned window (columns TEMP, EDA, BVP) and the glucose
/// reading it precedes.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledWindow {
    pub end_time: i64,
    pub samples: Vec<[f64; 3]>,
    pub label: f64,
    pub participant: String,
}

impl LabeledWindow {
    pub fn column(&self, channel: ChannelId) -> Vec<f64> {
        let c = channel.index();
        self.samples.iter().map(|row| row[c]).collect()
    }
}

/// Delay-1, dimension-2 embedding of a scalar series.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpaceEmbedding {
    states: Vec<State>,
}

impl PhaseSpaceEmbedding {
    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Recovers the embedded series.
    pub fn to_series(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.states.iter().map(|s| s[0]).collect();
        if let Some(last) = self.states.last() {
            out.push(last[1]);
        }
        out
    }
}

/// Maps `x` to the states `s_j = (x[j], x[j+1])`, `j = 0..N-1`.
pub fn embed(series: &[f64]) -> Result<PhaseSpaceEmbedding> {
    if series.len() < 2 {
        return Err(Error::WindowTooShort {
            len: series.len(),
            min: 2,
        });
    }
    if let Some(index) = series.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidSample { index });
    }
    Ok(embed_unchecked(series))
}

pub(crate) fn embed_unchecked(series: &[f64]) -> PhaseSpaceEmbedding {
    PhaseSpaceEmbedding {
        states: series.windows(2).map(|w| [w[0], w[1]]).collect(),
    }
}
