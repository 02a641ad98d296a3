//! Batch drivers behind the `synth`, `encode` and `pipeline` commands.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use phasicrp_core::encode::ImageMode;
use phasicrp_core::recurrence::SignConfig;
use phasicrp_core::synth::{synth_session, SynthConfig};
use phasicrp_core::LabeledWindow;
use rayon::prelude::*;

use crate::cgm::CgmColumns;
use crate::image_io::emit_png;
use crate::manifest::{write_manifest, ManifestRecord, FILE_NAME as MANIFEST};
use crate::parallel::{encode_window_par, thread_pool};
use crate::session::{load_session, write_session};
use crate::{Error, Result};

pub fn synth_to_dir(config: &SynthConfig, dir: &Path) -> Result<()> {
    let bundle = synth_session(config)?;
    write_session(&bundle, dir)
}

#[derive(Debug, Clone)]
pub struct EncodeOptions {
    pub mode: ImageMode,
    pub jobs: usize,
    pub sign: SignConfig,
    pub columns: CgmColumns,
}

impl Default for EncodeOptions {
    fn default() -> Self {
        Self {
            mode: ImageMode::Phasic,
            jobs: 1,
            sign: SignConfig::default(),
            columns: CgmColumns::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EncodeSummary {
    pub sessions: usize,
    pub readings: usize,
    pub windows: usize,
    pub dropped: usize,
    pub skipped_cgm_rows: usize,
    pub duplicate_cgm_rows: usize,
}

impl std::fmt::Display for EncodeSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "sessions={} readings={} windows={} dropped={} images={} cgm_skipped={} cgm_duplicates={}",
            self.sessions,
            self.readings,
            self.windows + self.dropped,
            self.dropped,
            self.windows,
            self.skipped_cgm_rows,
            self.duplicate_cgm_rows,
        )
    }
}

/// Encodes every surviving window of every session into
/// `<out>/<participant>/<end_time>.png` and writes `<out>/manifest.jsonl`,
/// sorted by participant then end time.
pub fn encode_sessions(
    sessions: &[PathBuf],
    out: &Path,
    opts: &EncodeOptions,
) -> Result<(EncodeSummary, Vec<ManifestRecord>)> {
    let mut seen = BTreeSet::new();
    for dir in sessions {
        let p = crate::session::participant_of(dir);
        if !seen.insert(p.clone()) {
            return Err(Error::DuplicateParticipant(p));
        }
    }
    let pool = thread_pool(opts.jobs)?;
    pool.install(|| {
        let loaded = sessions
            .par_iter()
            .map(|dir| {
                let s = load_session(dir, &opts.columns)?;
                let alignment = s.windows()?;
                Ok((s, alignment))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut summary = EncodeSummary {
            sessions: loaded.len(),
            ..Default::default()
        };
        let mut windows: Vec<LabeledWindow> = Vec::new();
        for (s, alignment) in loaded {
            summary.readings += s.cgm.readings.len();
            summary.skipped_cgm_rows += s.cgm.skipped;
            summary.duplicate_cgm_rows += s.cgm.duplicates;
            summary.dropped += alignment.dropped;
            summary.windows += alignment.windows.len();
            windows.extend(alignment.windows);
        }

        std::fs::create_dir_all(out).map_err(Error::io(out))?;
        for p in &seen {
            let dir = out.join(p);
            std::fs::create_dir_all(&dir).map_err(Error::io(&dir))?;
        }
        let mut records = windows
            .par_iter()
            .map(|w| {
                let image = encode_window_par(w, opts.mode, opts.sign)?;
                let rel = format!("{}/{}.png", w.participant, w.end_time);
                emit_png(&image, &out.join(&rel))?;
                Ok(ManifestRecord {
                    image_path: rel,
                    label: w.label,
                    end_time: w.end_time,
                    participant: w.participant.clone(),
                    mode: opts.mode,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        records.sort_by(|a, b| {
            (a.participant.as_str(), a.end_time).cmp(&(b.participant.as_str(), b.end_time))
        });
        write_manifest(&records, &out.join(MANIFEST))?;
        Ok((summary, records))
    })
}
