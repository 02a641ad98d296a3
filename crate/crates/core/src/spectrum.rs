//! One-sided discrete Fourier transform and per-bin phase extraction.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

/// Bins whose magnitude falls below this have their phase pinned to zero.
pub const ZERO_MAGNITUDE: f64 = 1e-12;

/// Bins `0..=N/2` of the DFT of a real length-`N` signal.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    len: usize,
    bins: Vec<Complex64>,
}

impl Spectrum {
    /// Length of the transformed signal.
    pub fn signal_len(&self) -> usize {
        self.len
    }

    pub fn bins(&self) -> &[Complex64] {
        &self.bins
    }
}

/// `X[k] = Σ_n x[n]·exp(−2πi·k·n/N)` for `k = 0..=N/2`.
///
/// Computed with a mixed-radix decimation-in-time FFT; prime lengths fall
/// back to direct summation over a twiddle table.
pub fn dft(x: &[f64]) -> Result<Spectrum> {
    let n = x.len();
    if n < 2 {
        return Err(Error::WindowTooShort { len: n, min: 2 });
    }
    let twiddles = twiddle_table(n);
    // An offset only moves the DC bin. Removing x[0] makes every other bin
    // of a constant signal exactly zero instead of rounding noise.
    let x0 = x[0];
    let input: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v - x0, 0.0)).collect();
    let mut full = vec![Complex64::new(0.0, 0.0); n];
    fft(&input, 1, &mut full, &twiddles, 1);
    full.truncate(n / 2 + 1);
    full[0] = Complex64::new(x.iter().sum(), 0.0);
    Ok(Spectrum { len: n, bins: full })
}

/// `exp(−2πi·j/N)` for `j = 0..N`.
fn twiddle_table(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|j| {
            let angle = -2.0 * PI * j as f64 / n as f64;
            Complex64::new(libm::cos(angle), libm::sin(angle))
        })
        .collect()
}

fn smallest_factor(n: usize) -> usize {
    if n % 2 == 0 {
        return 2;
    }
    let mut p = 3;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 2;
    }
    n
}

/// Transforms the strided sequence `input[0], input[stride], ...` of length
/// `out.len()` into `out`. `tw_step` scales indices into the full-length
/// twiddle table so sub-transforms reuse it.
fn fft(
    input: &[Complex64],
    stride: usize,
    out: &mut [Complex64],
    twiddles: &[Complex64],
    tw_step: usize,
) {
    let n = out.len();
    let full = twiddles.len();
    if n == 1 {
        out[0] = input[0];
        return;
    }
    let radix = smallest_factor(n);
    if radix == n {
        for (k, o) in out.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                acc += input[j * stride] * twiddles[(k * j % n) * tw_step];
            }
            *o = acc;
        }
        return;
    }

    let m = n / radix;
    // sub[r] holds the length-m transform of input[r], input[r + radix], ...
    let mut sub = vec![Complex64::new(0.0, 0.0); n];
    for (r, chunk) in sub.chunks_mut(m).enumerate() {
        fft(
            &input[r * stride..],
            stride * radix,
            chunk,
            twiddles,
            tw_step * radix,
        );
    }
    for (k, o) in out.iter_mut().enumerate() {
        let km = k % m;
        let mut acc = sub[km];
        for r in 1..radix {
            let w = twiddles[(r * k % n) * tw_step % full];
            acc += sub[r * m + km] * w;
        }
        *o = acc;
    }
}

/// Phase angle of every bin, in `(−π, π]`; zero for near-zero bins.
///
/// The DC bin of a real signal is real, so its angle only records the sign
/// of the sum. It is pinned to 0, which keeps every constant signal at an
/// all-zero phase sequence whatever its sign.
pub fn phase_sequence(spectrum: &Spectrum) -> Vec<f64> {
    let mut phases: Vec<f64> = spectrum.bins.iter().map(|&b| bin_phase(b)).collect();
    phases[0] = 0.0;
    phases
}

fn bin_phase(bin: Complex64) -> f64 {
    if libm::hypot(bin.re, bin.im) < ZERO_MAGNITUDE {
        return 0.0;
    }
    let phase = libm::atan2(bin.im, bin.re);
    // atan2(-0.0, x < 0) lands on -π
    if phase == -PI {
        PI
    } else {
        phase
    }
}
