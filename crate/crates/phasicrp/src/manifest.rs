//! Line-delimited JSON index of emitted images.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use phasicrp_core::encode::ImageMode;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const FILE_NAME: &str = "manifest.jsonl";

/// One image and the glucose reading it precedes. `image_path` is relative
/// to the manifest's directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestRecord {
    pub image_path: String,
    pub label: f64,
    pub end_time: i64,
    pub participant: String,
    pub mode: ImageMode,
}

pub fn write_manifest(records: &[ManifestRecord], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(Error::io(path))?;
    let mut sink = BufWriter::new(file);
    for r in records {
        serde_json::to_writer(&mut sink, r)?;
        sink.write_all(b"\n").map_err(Error::io(path))?;
    }
    sink.flush().map_err(Error::io(path))
}

/// Blank lines are ignored.
pub fn read_manifest(path: &Path) -> Result<Vec<ManifestRecord>> {
    let file = File::open(path).map_err(Error::io(path))?;
    let mut records = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(Error::io(path))?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|source| Error::Manifest {
            path: path.to_owned(),
            line: i + 1,
            source,
        })?;
        records.push(record);
    }
    Ok(records)
}
