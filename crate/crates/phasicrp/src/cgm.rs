//! Continuous glucose monitor exports (CSV with a header row).

use std::io::{Read, Write};

use chrono::{DateTime, NaiveDateTime};
use phasicrp_core::GlucoseReading;

use crate::{Error, Result};

/// File name of the glucose table inside a session directory.
pub const FILE_NAME: &str = "glucose.csv";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CgmColumns {
    pub timestamp: String,
    pub glucose: String,
}

impl Default for CgmColumns {
    fn default() -> Self {
        Self {
            timestamp: "Timestamp".into(),
            glucose: "Glucose Value (mg/dL)".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CgmData {
    /// Strictly increasing timestamps.
    pub readings: Vec<GlucoseReading>,
    /// Rows without a usable timestamp or glucose value ("Low", "High", blanks, metadata rows).
    pub skipped: usize,
    /// Rows dropped because an earlier row had the same timestamp.
    pub duplicates: usize,
}

/// ISO-8601 timestamp as unix seconds. Without an offset the time is UTC.
pub fn parse_timestamp(raw: &str) -> Option<i64> {
    let raw = raw.trim();
    if let Ok(dt) = DateTime::parse_from_rfc3339(raw) {
        return Some(dt.timestamp());
    }
    [
        "%Y-%m-%dT%H:%M:%S%.f",
        "%Y-%m-%d %H:%M:%S%.f",
        "%Y-%m-%dT%H:%M",
    ]
    .iter()
    .find_map(|fmt| NaiveDateTime::parse_from_str(raw, fmt).ok())
    .map(|dt| dt.and_utc().timestamp())
}

pub fn read_cgm<R: Read>(source: R, columns: &CgmColumns) -> Result<CgmData> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(source);
    let headers = reader.headers()?.clone();
    let find = |name: &str| headers.iter().position(|h| h == name);
    let (ts_col, g_col) = match (find(&columns.timestamp), find(&columns.glucose)) {
        (Some(t), Some(g)) => (t, g),
        (t, g) => {
            let missing = [(t, &columns.timestamp), (g, &columns.glucose)]
                .into_iter()
                .filter(|(found, _)| found.is_none())
                .map(|(_, name)| name.clone())
                .collect();
            return Err(Error::SchemaMismatch(missing));
        }
    };

    let mut readings = Vec::new();
    let mut skipped = 0;
    for record in reader.records() {
        let record = record?;
        let ts = record.get(ts_col).and_then(parse_timestamp);
        let value = record.get(g_col).and_then(|v| v.parse::<f64>().ok());
        match (ts, value.map(|v| ts.map(|t| GlucoseReading::new(t, v)))) {
            (Some(_), Some(Some(Ok(reading)))) => readings.push(reading),
            _ => skipped += 1,
        }
    }
    if readings.is_empty() {
        return Err(Error::NoReadings);
    }
    readings.sort_by_key(|r| r.timestamp);
    let before = readings.len();
    readings.dedup_by_key(|r| r.timestamp);
    Ok(CgmData {
        duplicates: before - readings.len(),
        readings,
        skipped,
    })
}

/// Writes readings with the default column names and UTC timestamps.
pub fn write_cgm<W: Write>(readings: &[GlucoseReading], sink: W) -> Result<()> {
    let columns = CgmColumns::default();
    let mut w = csv::Writer::from_writer(sink);
    w.write_record([&columns.timestamp, &columns.glucose])?;
    for r in readings {
        let ts = DateTime::from_timestamp(r.timestamp, 0)
            .ok_or(phasicrp_core::Error::InvalidConfig(
                "timestamp out of range",
            ))?
            .naive_utc()
            .format("%Y-%m-%dT%H:%M:%S")
            .to_string();
        w.write_record([ts, format!("{:?}", r.value)])?;
    }
    w.flush().map_err(Error::io(FILE_NAME))?;
    Ok(())
}
