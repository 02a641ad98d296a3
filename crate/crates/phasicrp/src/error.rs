use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("empty channel")]
    EmptyChannel,
    #[error("invalid sample at line {line}")]
    InvalidSample { line: usize },
    #[error("expected {expected} data, file header says {found} Hz")]
    UnexpectedRate { expected: String, found: f64 },
    #[error("schema mismatch: missing column(s) {}", .0.join(", "))]
    SchemaMismatch(Vec<String>),
    #[error("no readings")]
    NoReadings,
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{}: {source}", path.display())]
    Png {
        path: PathBuf,
        #[source]
        source: PngError,
    },
    #[error("{}: unsupported image ({reason})", path.display())]
    UnsupportedImage { path: PathBuf, reason: String },
    #[error("{}:{line}: {source}", path.display())]
    Manifest {
        path: PathBuf,
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{}: missing {}", dir.display(), missing.join(", "))]
    MissingFiles { dir: PathBuf, missing: Vec<String> },
    #[error("duplicate participant {0:?}")]
    DuplicateParticipant(String),
    #[error("{}: {source}", path.display())]
    Image {
        path: PathBuf,
        #[source]
        source: phasicrp_core::Error,
    },
    #[error(transparent)]
    Core(#[from] phasicrp_core::Error),
    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Error)]
pub enum PngError {
    #[error(transparent)]
    Encoding(#[from] png::EncodingError),
    #[error(transparent)]
    Decoding(#[from] png::DecodingError),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Error {
        let path = path.into();
        move |source| Error::Io { path, source }
    }
}
