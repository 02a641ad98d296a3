//! Rayon drivers. Each output element is computed by the same sequential
//! code regardless of scheduling, so results are bit-identical at any
//! thread count.

use phasicrp_core::encode::{merge_rgb, ImageMode, RgbImage};
use phasicrp_core::recurrence::{RecurrenceKernel, RecurrenceMatrix, SignConfig};
use phasicrp_core::{ChannelId, LabeledWindow};
use rayon::prelude::*;

use crate::Result;

pub fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?)
}

/// Row-parallel evaluation of one matrix.
pub fn par_recurrence(kernel: &RecurrenceKernel) -> RecurrenceMatrix {
    let side = kernel.side();
    let mut data = vec![0.0; side * side];
    data.par_chunks_mut(side.max(1))
        .enumerate()
        .for_each(|(m, row)| kernel.fill_row(m, row));
    RecurrenceMatrix::from_parts(kernel.mode(), side, data).expect("buffer sized side²")
}

pub fn encode_window_par(
    window: &LabeledWindow,
    mode: ImageMode,
    cfg: SignConfig,
) -> Result<RgbImage> {
    let matrices = ChannelId::ALL
        .par_iter()
        .map(|&c| Ok(par_recurrence(&mode.kernel(&window.column(c), cfg)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_rgb(&matrices[0], &matrices[1], &matrices[2])?)
}
