//! BVP decimation, gap filling and glucose-aligned windowing.

use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use crate::signal::{
    ChannelId, GlucoseReading, LabeledWindow, RawChannelSeries, TARGET_RATE, WINDOW_LEN,
    WINDOW_SECONDS,
};
use crate::{Error, Result};

/// Native BVP rate of the wristband.
pub const BVP_RATE: f64 = 64.0;
const DECIMATION: usize = 16;

/// Block-mean decimation from 64 Hz to 4 Hz.
///
/// Output sample `k` is the mean of inputs `16k..16k+16`; a trailing partial
/// block is dropped. A block touching a break becomes a break.
pub fn resample_to_4hz(series: &RawChannelSeries) -> Result<RawChannelSeries> {
    if series.rate() != BVP_RATE {
        return Err(Error::UnexpectedRate {
            expected: BVP_RATE,
            found: series.rate(),
        });
    }
    let blocks = series.len() / DECIMATION;
    if blocks == 0 {
        return Err(Error::EmptyChannel);
    }
    let values: Vec<f64> = series
        .values()
        .chunks_exact(DECIMATION)
        .map(|c| c.iter().sum::<f64>() / DECIMATION as f64)
        .collect();

    let mut breaks: Vec<Range<usize>> = Vec::new();
    for b in series.breaks() {
        let start = b.start / DECIMATION;
        let end = b.end.div_ceil(DECIMATION).min(blocks);
        if start >= end {
            continue;
        }
        match breaks.last_mut() {
            Some(last) if last.end >= start => last.end = last.end.max(end),
            _ => breaks.push(start..end),
        }
    }
    RawChannelSeries::with_breaks(
        series.channel(),
        series.start_time(),
        TARGET_RATE,
        values,
        breaks,
    )
}

/// Fills missing samples (`None`) in a fixed-rate recording.
///
/// Interior runs lasting at most `max_gap_s` are linearly interpolated
/// between their neighbours. Longer runs, and runs touching either end, are
/// recorded as breaks; their placeholder values are still interpolated (or
/// held from the nearest sample) so the series stays finite.
pub fn fill_gaps(
    channel: ChannelId,
    start_time: i64,
    rate: f64,
    samples: &[Option<f64>],
    max_gap_s: f64,
) -> Result<RawChannelSeries> {
    if !(rate.is_finite() && rate > 0.0) {
        return Err(Error::InvalidRate(rate));
    }
    if samples.is_empty() {
        return Err(Error::EmptyChannel);
    }
    if let Some(index) = samples
        .iter()
        .position(|s| matches!(s, Some(v) if !v.is_finite()))
    {
        return Err(Error::InvalidSample { index });
    }

    let mut values: Vec<f64> = samples.iter().map(|s| s.unwrap_or(0.0)).collect();
    let mut breaks = Vec::new();
    let mut i = 0;
    while i < samples.len() {
        if samples[i].is_some() {
            i += 1;
            continue;
        }
        let start = i;
        while i < samples.len() && samples[i].is_none() {
            i += 1;
        }
        let end = i;
        let left = start.checked_sub(1).map(|j| (j, values[j]));
        let right = samples.get(end).copied().flatten().map(|v| (end, v));
        let duration = (end - start) as f64 / rate;

        match (left, right) {
            (Some((l, lv)), Some((r, rv))) => {
                let span = (r - l) as f64;
                for (k, v) in values[start..end].iter_mut().enumerate() {
                    let t = (start + k - l) as f64 / span;
                    *v = lv + (rv - lv) * t;
                }
                if duration > max_gap_s {
                    breaks.push(start..end);
                }
            }
            (Some((_, held)), None) | (None, Some((_, held))) => {
                values[start..end].fill(held);
                breaks.push(start..end);
            }
            (None, None) => breaks.push(start..end),
        }
    }
    RawChannelSeries::with_breaks(channel, start_time, rate, values, breaks)
}

/// Result of cutting windows from one session.
#[derive(Debug, Clone, PartialEq)]
pub struct Alignment {
    /// Ordered by `end_time`.
    pub windows: Vec<LabeledWindow>,
    /// Readings whose preceding five minutes were not fully covered.
    pub dropped: usize,
}

/// Cuts one [`WINDOW_LEN`]-sample window per glucose reading, covering the
/// five minutes `[t − 300 s, t)` that precede it.
///
/// A reading yields a window only when all three channels cover the interval
/// without a break. Readings are processed in timestamp order; for repeated
/// timestamps the first occurrence wins.
pub fn align_windows(
    temp: &RawChannelSeries,
    eda: &RawChannelSeries,
    bvp: &RawChannelSeries,
    glucose: &[GlucoseReading],
    participant: &str,
) -> Result<Alignment> {
    let channels = [temp, eda, bvp];
    for (series, expected) in channels.iter().zip(ChannelId::ALL) {
        if series.channel() != expected {
            return Err(Error::ChannelMismatch);
        }
        if series.rate() != TARGET_RATE {
            return Err(Error::UnexpectedRate {
                expected: TARGET_RATE,
                found: series.rate(),
            });
        }
    }

    let mut readings = glucose.to_vec();
    readings.sort_by_key(|r| r.timestamp);
    readings.dedup_by_key(|r| r.timestamp);

    let per_second = TARGET_RATE as i64;
    let mut windows = Vec::new();
    let mut dropped = 0;
    'readings: for reading in &readings {
        let window_start = reading.timestamp - WINDOW_SECONDS;
        let mut spans: [Range<usize>; 3] = [0..0, 0..0, 0..0];
        for (span, series) in spans.iter_mut().zip(channels) {
            let offset = window_start - series.start_time();
            let end = offset
                .checked_mul(per_second)
                .map(|s| s + WINDOW_LEN as i64);
            match end {
                Some(end) if offset >= 0 && end <= series.len() as i64 => {
                    let range = (offset * per_second) as usize..end as usize;
                    if series.has_break_in(range.clone()) {
                        dropped += 1;
                        continue 'readings;
                    }
                    *span = range;
                }
                _ => {
                    dropped += 1;
                    continue 'readings;
                }
            }
        }
        let samples = (0..WINDOW_LEN)
            .map(|k| {
                [
                    temp.values()[spans[0].start + k],
                    eda.values()[spans[1].start + k],
                    bvp.values()[spans[2].start + k],
                ]
            })
            .collect();
        windows.push(LabeledWindow {
            end_time: reading.timestamp,
            samples,
            label: reading.value,
            participant: String::from(participant),
        });
    }
    dropped += glucose.len() - readings.len();
    Ok(Alignment { windows, dropped })
}
