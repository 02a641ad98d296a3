//! 8-bit RGB PNG output, no alpha.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use phasicrp_core::encode::RgbImage;

use crate::error::PngError;
use crate::{Error, Result};

fn write_png<W: Write>(image: &RgbImage, sink: W) -> std::result::Result<(), PngError> {
    let side = image.side() as u32;
    let mut encoder = png::Encoder::new(sink, side, side);
    encoder.set_color(png::ColorType::Rgb);
    encoder.set_depth(png::BitDepth::Eight);
    encoder.set_compression(png::Compression::Fast);
    let mut writer = encoder.write_header()?;
    writer.write_image_data(image.pixels())?;
    writer.finish()?;
    Ok(())
}

pub fn emit_png(image: &RgbImage, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(Error::io(path))?;
    let mut sink = BufWriter::new(file);
    write_png(image, &mut sink).map_err(|source| Error::Png {
        path: path.to_owned(),
        source,
    })?;
    sink.flush().map_err(Error::io(path))
}

pub fn read_png(path: &Path) -> Result<RgbImage> {
    let file = File::open(path).map_err(Error::io(path))?;
    let png_err = |e: png::DecodingError| Error::Png {
        path: path.to_owned(),
        source: e.into(),
    };
    let mut reader = png::Decoder::new(BufReader::new(file))
        .read_info()
        .map_err(png_err)?;
    let (color, depth) = reader.output_color_type();
    let unsupported = |reason: String| Error::UnsupportedImage {
        path: path.to_owned(),
        reason,
    };
    if color != png::ColorType::Rgb || depth != png::BitDepth::Eight {
        return Err(unsupported(format!(
            "{color:?} at {depth:?}, expected 8-bit RGB"
        )));
    }
    let size = reader
        .output_buffer_size()
        .ok_or_else(|| unsupported("image too large".into()))?;
    let mut buf = vec![0; size];
    let info = reader.next_frame(&mut buf).map_err(png_err)?;
    if info.width != info.height {
        return Err(unsupported(format!(
            "{}x{} is not square",
            info.width, info.height
        )));
    }
    buf.truncate(info.buffer_size());
    RgbImage::new(info.width as usize, buf).map_err(|source| Error::Image {
        path: path.to_owned(),
        source,
    })
}
