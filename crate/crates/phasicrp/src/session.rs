//! Session directories: one E4 export per channel plus a CGM table.
//!
//! ```text
//! <session>/TEMP.csv  EDA.csv  BVP.csv  glucose.csv
//! ```
//! The directory name is used as the participant identifier.

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use phasicrp_core::preprocess::{align_windows, resample_to_4hz, Alignment, BVP_RATE};
use phasicrp_core::signal::TARGET_RATE;
use phasicrp_core::synth::SessionBundle;
use phasicrp_core::{ChannelId, RawChannelSeries};

use crate::cgm::{self, read_cgm, write_cgm, CgmColumns, CgmData};
use crate::e4::{self, read_e4_channel, write_e4_channel};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Session {
    pub participant: String,
    pub temp: RawChannelSeries,
    pub eda: RawChannelSeries,
    pub bvp: RawChannelSeries,
    pub cgm: CgmData,
}

pub fn participant_of(dir: &Path) -> String {
    dir.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "session".into())
}

pub fn load_session(dir: &Path, columns: &CgmColumns) -> Result<Session> {
    let names = ChannelId::ALL
        .iter()
        .map(|&c| e4::file_name(c))
        .chain([cgm::FILE_NAME]);
    let missing: Vec<String> = names
        .filter(|n| !dir.join(n).is_file())
        .map(String::from)
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingFiles {
            dir: dir.to_owned(),
            missing,
        });
    }

    let channel = |c: ChannelId| -> Result<RawChannelSeries> {
        let path = dir.join(e4::file_name(c));
        let file = File::open(&path).map_err(Error::io(&path))?;
        read_e4_channel(BufReader::new(file), c).map_err(|e| match e {
            Error::Io { source, .. } => Error::Io { path, source },
            other => other,
        })
    };
    let cgm_path = dir.join(cgm::FILE_NAME);
    let cgm_file = File::open(&cgm_path).map_err(Error::io(&cgm_path))?;
    Ok(Session {
        participant: participant_of(dir),
        temp: channel(ChannelId::Temp)?,
        eda: channel(ChannelId::Eda)?,
        bvp: channel(ChannelId::Bvp)?,
        cgm: read_cgm(BufReader::new(cgm_file), columns)?,
    })
}

impl Session {
    /// Brings BVP to 4 Hz and cuts the glucose-labeled windows.
    pub fn windows(&self) -> Result<Alignment> {
        for s in [&self.temp, &self.eda] {
            if s.rate() != TARGET_RATE {
                return Err(Error::UnexpectedRate {
                    expected: format!("{} at {TARGET_RATE} Hz", s.channel()),
                    found: s.rate(),
                });
            }
        }
        let bvp4 = if self.bvp.rate() == BVP_RATE {
            resample_to_4hz(&self.bvp)?
        } else if self.bvp.rate() == TARGET_RATE {
            self.bvp.clone()
        } else {
            return Err(Error::UnexpectedRate {
                expected: format!("BVP at {BVP_RATE} or {TARGET_RATE} Hz"),
                found: self.bvp.rate(),
            });
        };
        Ok(align_windows(
            &self.temp,
            &self.eda,
            &bvp4,
            &self.cgm.readings,
            &self.participant,
        )?)
    }
}

pub fn write_session(bundle: &SessionBundle, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(Error::io(dir))?;
    for series in [&bundle.temp, &bundle.eda, &bundle.bvp] {
        let path = dir.join(e4::file_name(series.channel()));
        let file = File::create(&path).map_err(Error::io(&path))?;
        write_e4_channel(series, BufWriter::new(file)).map_err(Error::io(&path))?;
    }
    let path = dir.join(cgm::FILE_NAME);
    let file = File::create(&path).map_err(Error::io(&path))?;
    write_cgm(&bundle.glucose, BufWriter::new(file))
}
