//! JSON form of [`MetricsReport`]: `{"rmse", "mape", "accuracy_pct", "n"}`.

use std::path::Path;

use phasicrp_core::metrics::MetricsReport;

use crate::{Error, Result};

pub fn report_to_json(report: &MetricsReport) -> String {
    serde_json::to_string_pretty(report).expect("report fields are plain numbers")
}

pub fn parse_report(text: &str) -> Result<MetricsReport> {
    Ok(serde_json::from_str(text)?)
}

pub fn write_report(report: &MetricsReport, path: &Path) -> Result<()> {
    let mut text = report_to_json(report);
    text.push('\n');
    std::fs::write(path, text).map_err(Error::io(path))
}

pub fn read_report(path: &Path) -> Result<MetricsReport> {
    parse_report(&std::fs::read_to_string(path).map_err(Error::io(path))?)
}
