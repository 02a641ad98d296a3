//! Unthresholded recurrence matrices: plain, temporally signed and phasic.
//!
//! Every entry is `sign(s_m − s_n)·‖s_m − s_n‖` over a sequence of 2-D states,
//! where the sign is `+1` for the unsigned mode and otherwise comes from
//! [`sign_fn`]. Entries are computed independently of one another, so any
//! row partitioning of the work yields bit-identical matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::signal::{embed, embed_unchecked, PhaseSpaceEmbedding, State};
use crate::spectrum::{dft, phase_sequence};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RpMode {
    TemporalUnsigned,
    TemporalSigned,
    Phasic,
}

/// Reference direction and cosine threshold for the sign test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignConfig {
    v: [f64; 2],
    v_norm: f64,
    threshold: f64,
}

impl Default for SignConfig {
    /// `v = (1, 1)`, threshold `cos(3π/4) = −√2/2`.
    fn default() -> Self {
        Self {
            v: [1.0, 1.0],
            v_norm: core::f64::consts::SQRT_2,
            threshold: -core::f64::consts::FRAC_1_SQRT_2,
        }
    }
}

impl SignConfig {
    pub fn new(v: [f64; 2], threshold: f64) -> Result<Self> {
        let v_norm = norm(v);
        if !(v_norm.is_finite() && v_norm > 0.0) {
            return Err(Error::InvalidConfig(
                "reference vector must be nonzero and finite",
            ));
        }
        if !threshold.is_finite() {
            return Err(Error::InvalidConfig("sign threshold must be finite"));
        }
        Ok(Self {
            v,
            v_norm,
            threshold,
        })
    }

    pub fn reference(&self) -> [f64; 2] {
        self.v
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }
}

#[inline]
fn norm(d: [f64; 2]) -> f64 {
    libm::sqrt(d[0] * d[0] + d[1] * d[1])
}

#[inline]
fn sign_with_norm(d: [f64; 2], d_norm: f64, cfg: &SignConfig) -> f64 {
    if d_norm == 0.0 {
        return 1.0;
    }
    let cosine = (d[0] * cfg.v[0] + d[1] * cfg.v[1]) / (d_norm * cfg.v_norm);
    if cosine < cfg.threshold {
        -1.0
    } else {
        1.0
    }
}

/// `−1` when the cosine between `d` and the reference vector is strictly
/// below the threshold, `+1` otherwise (including `d = 0`).
pub fn sign_fn(d: [f64; 2], cfg: &SignConfig) -> f64 {
    sign_with_norm(d, norm(d), cfg)
}

/// Square `side × side` matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceMatrix {
    mode: RpMode,
    side: usize,
    data: Vec<f64>,
}

impl RecurrenceMatrix {
    pub fn from_parts(mode: RpMode, side: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != side * side {
            return Err(Error::DimensionMismatch);
        }
        Ok(Self { mode, side, data })
    }

    pub fn mode(&self) -> RpMode {
        self.mode
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, m: usize, n: usize) -> f64 {
        self.data[m * self.side + n]
    }

    pub fn row(&self, m: usize) -> &[f64] {
        &self.data[m * self.side..(m + 1) * self.side]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

/// Row-at-a-time evaluator for one recurrence matrix.
///
/// Parallel drivers split the output into rows and call [`fill_row`]
/// per row; [`compute`] is the sequential path.
///
/// [`fill_row`]: RecurrenceKernel::fill_row
/// [`compute`]: RecurrenceKernel::compute
#[derive(Debug, Clone)]
pub struct RecurrenceKernel {
    mode: RpMode,
    states: Vec<State>,
    sign: Option<SignConfig>,
}

impl RecurrenceKernel {
    pub fn unsigned(embedding: &PhaseSpaceEmbedding) -> Self {
        Self {
            mode: RpMode::TemporalUnsigned,
            states: embedding.states().to_vec(),
            sign: None,
        }
    }

    pub fn temporal(series: &[f64], cfg: SignConfig) -> Result<Self> {
        Ok(Self {
            mode: RpMode::TemporalSigned,
            states: embed(series)?.states().to_vec(),
            sign: Some(cfg),
        })
    }

    /// States are adjacent pairs of spectral phases, `(φ_j, φ_{j+1})`.
    pub fn phasic(series: &[f64], cfg: SignConfig) -> Result<Self> {
        if series.len() < 4 {
            return Err(Error::WindowTooShort {
                len: series.len(),
                min: 4,
            });
        }
        if let Some(index) = series.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidSample { index });
        }
        let phases = phase_sequence(&dft(series)?);
        Ok(Self {
            mode: RpMode::Phasic,
            states: embed_unchecked(&phases).states().to_vec(),
            sign: Some(cfg),
        })
    }

    pub fn mode(&self) -> RpMode {
        self.mode
    }

    pub fn side(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    /// Writes row `m` into `out` (length [`side`](Self::side)).
    pub fn fill_row(&self, m: usize, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.states.len());
        let sm = self.states[m];
        match &self.sign {
            None => {
                for (o, sn) in out.iter_mut().zip(&self.states) {
                    *o = norm([sm[0] - sn[0], sm[1] - sn[1]]);
                }
            }
            Some(cfg) => {
                for (o, sn) in out.iter_mut().zip(&self.states) {
                    let d = [sm[0] - sn[0], sm[1] - sn[1]];
                    let d_norm = norm(d);
                    *o = sign_with_norm(d, d_norm, cfg) * d_norm;
                }
            }
        }
    }

    pub fn compute(&self) -> RecurrenceMatrix {
        let side = self.side();
        let mut data = vec![0.0; side * side];
        for (m, row) in data.chunks_mut(side.max(1)).enumerate() {
            self.fill_row(m, row);
        }
        RecurrenceMatrix {
            mode: self.mode,
            side,
            data,
        }
    }
}

/// `R[m][n] = ‖s_m − s_n‖`.
pub fn unsigned_rp(embedding: &PhaseSpaceEmbedding) -> RecurrenceMatrix {
    RecurrenceKernel::unsigned(embedding).compute()
}

/// `R[m][n] = sign(s_m − s_n)·‖s_m − s_n‖` over the delay embedding of `series`.
pub fn temporal_rp(series: &[f64], cfg: &SignConfig) -> Result<RecurrenceMatrix> {
    Ok(RecurrenceKernel::temporal(series, *cfg)?.compute())
}

/// Signed recurrence over the embedded phase sequence of the one-sided
/// spectrum. A length-`N` window gives a side of `N/2`.
pub fn phasic_rp(series: &[f64], cfg: &SignConfig) -> Result<RecurrenceMatrix> {
    Ok(RecurrenceKernel::phasic(series, *cfg)?.compute())
}
