//! Single-channel wristband session export.
//!
//! ```text
//! 1594917600        <- unix start time (a zero fractional part is accepted)
//! 4.0               <- sampling rate, Hz
//! 33.1              <- one sample per line
//! 33.2
//! ```

use std::io::{BufRead, Write};

use phasicrp_core::{ChannelId, RawChannelSeries};

use crate::{Error, Result};

/// File name of each channel inside a session directory.
pub fn file_name(channel: ChannelId) -> &'static str {
    match channel {
        ChannelId::Temp => "TEMP.csv",
        ChannelId::Eda => "EDA.csv",
        ChannelId::Bvp => "BVP.csv",
    }
}

fn first_field(line: &str) -> &str {
    line.split(',').next().unwrap_or("").trim()
}

fn parse_start(line: Option<&str>) -> Result<i64> {
    let raw = line.map(first_field).unwrap_or("");
    let value: f64 = raw
        .parse()
        .map_err(|_| Error::MalformedHeader(format!("start time {raw:?}")))?;
    if !value.is_finite() || value.fract() != 0.0 || value.abs() > 9.0e15 {
        return Err(Error::MalformedHeader(format!("start time {raw:?}")));
    }
    Ok(value as i64)
}

fn parse_rate(line: Option<&str>) -> Result<f64> {
    let raw = line.map(first_field).unwrap_or("");
    match raw.parse::<f64>() {
        Ok(r) if r.is_finite() && r > 0.0 => Ok(r),
        _ => Err(Error::MalformedHeader(format!("sampling rate {raw:?}"))),
    }
}

pub fn read_e4_channel<R: BufRead>(source: R, expected: ChannelId) -> Result<RawChannelSeries> {
    let lines: Vec<String> = source
        .lines()
        .collect::<std::io::Result<_>>()
        .map_err(Error::io(file_name(expected)))?;
    let start_time = parse_start(lines.first().map(String::as_str))?;
    let rate = parse_rate(lines.get(1).map(String::as_str))?;

    let body = lines.get(2..).unwrap_or(&[]);
    // trailing blank lines are common in exports; interior ones are not samples
    let used = body.len()
        - body
            .iter()
            .rev()
            .take_while(|l| l.trim().is_empty())
            .count();
    let mut values = Vec::with_capacity(used);
    for (i, line) in body[..used].iter().enumerate() {
        let line_no = i + 3;
        match first_field(line).parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(v),
            _ => return Err(Error::InvalidSample { line: line_no }),
        }
    }
    if values.is_empty() {
        return Err(Error::EmptyChannel);
    }
    Ok(RawChannelSeries::new(expected, start_time, rate, values)?)
}

/// Inverse of [`read_e4_channel`]; floats are written in shortest
/// round-trip form so reading back is exact.
pub fn write_e4_channel<W: Write>(series: &RawChannelSeries, mut sink: W) -> std::io::Result<()> {
    writeln!(sink, "{}", series.start_time())?;
    writeln!(sink, "{:?}", series.rate())?;
    for v in series.values() {
        writeln!(sink, "{v:?}")?;
    }
    sink.flush()
}
