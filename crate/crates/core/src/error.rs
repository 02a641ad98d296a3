use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Fewer samples than the operation needs.
    WindowTooShort {
        len: usize,
        min: usize,
    },
    /// NaN or infinite sample at the given index.
    InvalidSample {
        index: usize,
    },
    /// Sampling rate that is not a positive finite number.
    InvalidRate(f64),
    EmptyChannel,
    UnexpectedRate {
        expected: f64,
        found: f64,
    },
    InvalidGlucose(f64),
    InvalidConfig(&'static str),
    /// Recurrence matrices or images that cannot be combined.
    ChannelMismatch,
    LengthMismatch {
        truths: usize,
        predictions: usize,
    },
    EmptyInput,
    NonPositiveTruth {
        index: usize,
    },
    InvalidRatio(f64),
    NotEnoughRecords(usize),
    EmptyTrainingSet,
    EmptyValidationSet,
    KTooLarge {
        k: usize,
        available: usize,
    },
    DimensionMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::WindowTooShort { len, min } => {
                write!(f, "window too short: {len} samples, need at least {min}")
            }
            Error::InvalidSample { index } => write!(f, "invalid sample at index {index}"),
            Error::InvalidRate(r) => write!(f, "invalid sampling rate {r}"),
            Error::EmptyChannel => f.write_str("empty channel"),
            Error::UnexpectedRate { expected, found } => {
                write!(
                    f,
                    "unexpected rate: expected {expected} Hz, found {found} Hz"
                )
            }
            Error::InvalidGlucose(v) => write!(f, "invalid glucose value {v}"),
            Error::InvalidConfig(why) => write!(f, "invalid config: {why}"),
            Error::ChannelMismatch => f.write_str("channel mismatch"),
            Error::LengthMismatch {
                truths,
                predictions,
            } => write!(
                f,
                "length mismatch: {truths} truths vs {predictions} predictions"
            ),
            Error::EmptyInput => f.write_str("empty input"),
            Error::NonPositiveTruth { index } => {
                write!(f, "nonpositive ground truth at index {index}")
            }
            Error::InvalidRatio(r) => write!(f, "invalid split ratio {r}"),
            Error::NotEnoughRecords(n) => {
                write!(f, "need at least 2 records to split, got {n}")
            }
            Error::EmptyTrainingSet => f.write_str("empty training set"),
            Error::EmptyValidationSet => f.write_str("empty validation set"),
            Error::KTooLarge { k, available } => {
                write!(f, "k = {k} exceeds training set size {available}")
            }
            Error::DimensionMismatch => f.write_str("image dimensions differ"),
        }
    }
}

impl core::error::Error for Error {}
