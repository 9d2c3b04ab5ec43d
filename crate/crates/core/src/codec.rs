//! Whole-video encoding on top of per-pixel trajectory fitting.
//!
//! Each pixel is fitted independently. The result is stored frame by frame
//! as a keypixel bitmask (one bit per pixel, set where the pixel keeps its
//! value in that frame) followed by the kept values in raster order. A
//! decoder fills every unset position by interpolating along the pixel's
//! time axis between the surrounding set bits.
//!
//! On disk this is the `LBF1` container, little-endian:
//!
//! ```text
//! "LBF1" | version u8 = 1 | channels u8 | reserved u16 = 0
//! width u32 | height u32 | frame_count u32 | delta u32 | lambda_limit f64
//! per frame: bitmask (ceil(width*height/8) bytes, MSB first) | values
//! ```

use crate::error::{Error, Result};
use crate::trajectory::{fit_keypixels, interpolant_sample, FitConfig};
use crate::video::{Frame, VideoSequence};

pub const MAGIC: &[u8; 4] = b"LBF1";
pub const FORMAT_VERSION: u8 = 1;
pub const HEADER_LEN: usize = 32;

/// Symbol id standing in for a non-keypixel sample.
pub const SENTINEL: u16 = 256;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Header {
    pub width: u32,
    pub height: u32,
    pub channels: u8,
    pub frame_count: u32,
    pub delta: u32,
    pub lambda_limit: f64,
}

impl Header {
    pub fn pixel_count(&self) -> usize {
        self.width as usize * self.height as usize
    }

    pub fn mask_len(&self) -> usize {
        self.pixel_count().div_ceil(8)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncodedFrame {
    /// Packed keypixel flags, row-major, most significant bit first.
    pub mask: Vec<u8>,
    /// Keypixel samples in raster order, channels interleaved.
    pub values: Vec<u8>,
}

impl EncodedFrame {
    #[inline]
    pub fn is_keypixel(&self, pixel: usize) -> bool {
        self.mask[pixel / 8] & (0x80 >> (pixel % 8)) != 0
    }

    pub fn keypixel_count(&self) -> usize {
        self.mask.iter().map(|b| b.count_ones() as usize).sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EncodedVideo {
    pub header: Header,
    pub frames: Vec<EncodedFrame>,
}

impl EncodedVideo {
    pub fn keypixel_count(&self) -> usize {
        self.frames.iter().map(EncodedFrame::keypixel_count).sum()
    }

    /// Share of (frame, pixel) positions that are keypixels.
    pub fn keypixel_fraction(&self) -> f64 {
        let total = self.header.pixel_count() * self.frames.len();
        if total == 0 {
            return 0.0;
        }
        self.keypixel_count() as f64 / total as f64
    }

    /// Keypixel frames of one pixel.
    pub fn pixel_keypixels(&self, pixel: usize) -> Vec<usize> {
        self.frames
            .iter()
            .enumerate()
            .filter(|(_, f)| f.is_keypixel(pixel))
            .map(|(i, _)| i)
            .collect()
    }

    /// Checks the structural invariants a decoder relies on.
    pub fn validate(&self) -> Result<()> {
        let h = &self.header;
        if h.channels != 1 && h.channels != 3 {
            return Err(Error::corrupt(format!("channel count {} is not 1 or 3", h.channels)));
        }
        if h.width == 0 || h.height == 0 || h.frame_count == 0 {
            return Err(Error::corrupt("empty geometry in header"));
        }
        if self.frames.len() != h.frame_count as usize {
            return Err(Error::corrupt(format!(
                "header announces {} frames, found {}",
                h.frame_count,
                self.frames.len()
            )));
        }
        let pixels = h.pixel_count();
        let mask_len = h.mask_len();
        let last = self.frames.len() - 1;
        for (i, frame) in self.frames.iter().enumerate() {
            if frame.mask.len() != mask_len {
                return Err(Error::corrupt(format!("frame {i} bitmask has {} bytes", frame.mask.len())));
            }
            let tail_bits = pixels % 8;
            if tail_bits != 0 && frame.mask[mask_len - 1] & (0xFF >> tail_bits) != 0 {
                return Err(Error::corrupt(format!("frame {i} bitmask padding is not zero")));
            }
            let count = frame.keypixel_count();
            if (i == 0 || i == last) && count != pixels {
                return Err(Error::corrupt(format!("frame {i} must have every pixel as keypixel")));
            }
            if frame.values.len() != count * h.channels as usize {
                return Err(Error::corrupt(format!(
                    "frame {i} has {} values for {count} keypixels",
                    frame.values.len()
                )));
            }
        }
        Ok(())
    }
}

/// How per-pixel fitting is scheduled. Results are identical either way.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EncodeMode {
    #[default]
    Sequential,
    /// Fit pixels on the current rayon pool. Falls back to sequential when
    /// the crate is built without the `parallel` feature.
    Parallel,
}

fn fit_rows(video: &VideoSequence, config: &FitConfig, first_pixel: usize, flags: &mut [bool], buf: &mut Vec<u8>) {
    let n = video.frame_count();
    let channels = video.channels();
    for (i, row) in flags.chunks_exact_mut(n).enumerate() {
        video.gather_trajectory(first_pixel + i, buf);
        for k in fit_keypixels(buf, channels, config) {
            row[k] = true;
        }
    }
}

/// Pixel-major keypixel flags: entry `pixel * n + frame`.
fn keypixel_flags(video: &VideoSequence, config: &FitConfig, mode: EncodeMode) -> Vec<bool> {
    let n = video.frame_count();
    let mut flags = vec![false; video.pixel_count() * n];
    match mode {
        #[cfg(feature = "parallel")]
        EncodeMode::Parallel => {
            use rayon::prelude::*;
            const PIXELS_PER_TASK: usize = 256;
            flags.par_chunks_mut(PIXELS_PER_TASK * n).enumerate().for_each_init(Vec::new, |buf, (chunk, rows)| {
                fit_rows(video, config, chunk * PIXELS_PER_TASK, rows, buf)
            });
        }
        _ => fit_rows(video, config, 0, &mut flags, &mut Vec::new()),
    }
    flags
}

pub fn encode_video(video: &VideoSequence, config: &FitConfig) -> Result<EncodedVideo> {
    encode_video_with(video, config, EncodeMode::Sequential)
}

/// Fits every pixel's trajectory and packs the keypixels frame by frame.
pub fn encode_video_with(video: &VideoSequence, config: &FitConfig, mode: EncodeMode) -> Result<EncodedVideo> {
    config.validate()?;
    let header = Header {
        width: dim_u32(video.width(), "width")?,
        height: dim_u32(video.height(), "height")?,
        channels: video.channels() as u8,
        frame_count: dim_u32(video.frame_count(), "frame count")?,
        delta: dim_u32(config.delta, "delta")?,
        lambda_limit: config.lambda_limit,
    };
    let n = video.frame_count();
    let pixels = video.pixel_count();
    let channels = video.channels();
    let flags = keypixel_flags(video, config, mode);

    let frames = video
        .frames()
        .iter()
        .enumerate()
        .map(|(f, frame)| {
            let mut mask = vec![0u8; header.mask_len()];
            let mut values = Vec::new();
            for p in 0..pixels {
                if flags[p * n + f] {
                    mask[p / 8] |= 0x80 >> (p % 8);
                    values.extend_from_slice(&frame.data()[p * channels..(p + 1) * channels]);
                }
            }
            EncodedFrame { mask, values }
        })
        .collect();
    Ok(EncodedVideo { header, frames })
}

fn dim_u32(value: usize, what: &str) -> Result<u32> {
    u32::try_from(value).map_err(|_| Error::invalid(format!("{what} {value} does not fit in 32 bits")))
}

/// Rebuilds every frame by interpolating between each pixel's keypixels.
pub fn decode_video(encoded: &EncodedVideo) -> Result<VideoSequence> {
    encoded.validate()?;
    let h = &encoded.header;
    let (width, height, channels) = (h.width as usize, h.height as usize, h.channels as usize);
    let pixels = h.pixel_count();
    let n = encoded.frames.len();

    let mut out: Vec<Vec<u8>> = vec![vec![0u8; pixels * channels]; n];
    let mut last_key = vec![0usize; pixels];
    for (f, frame) in encoded.frames.iter().enumerate() {
        let mut values = frame.values.chunks_exact(channels);
        for p in 0..pixels {
            if !frame.is_keypixel(p) {
                continue;
            }
            let value = values.next().expect("value count checked by validate");
            let range = p * channels..(p + 1) * channels;
            out[f][range.clone()].copy_from_slice(value);
            let prev = last_key[p];
            if f > prev + 1 {
                let mut start = [0u8; 3];
                start[..channels].copy_from_slice(&out[prev][range.clone()]);
                let span = f - prev;
                for g in prev + 1..f {
                    for (c, slot) in out[g][range.clone()].iter_mut().enumerate() {
                        *slot = interpolant_sample(start[c], value[c], g - prev, span);
                    }
                }
            }
            last_key[p] = f;
        }
    }

    let frames = out
        .into_iter()
        .map(|data| Frame::new(width, height, channels, data))
        .collect::<Result<Vec<_>>>()?;
    VideoSequence::new(frames)
}

/// Conceptual output stream: every sample position in frame-major, raster,
/// channel-interleaved order, with [`SENTINEL`] at non-keypixel positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolStream {
    pub symbols: Vec<u16>,
}

impl SymbolStream {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn sentinel_count(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == SENTINEL).count()
    }
}

pub fn symbol_stream(encoded: &EncodedVideo) -> SymbolStream {
    let pixels = encoded.header.pixel_count();
    let channels = encoded.header.channels as usize;
    let mut symbols = Vec::with_capacity(encoded.frames.len() * pixels * channels);
    for frame in &encoded.frames {
        let mut values = frame.values.iter();
        for p in 0..pixels {
            if frame.is_keypixel(p) {
                symbols.extend(values.by_ref().take(channels).map(|&v| u16::from(v)));
            } else {
                symbols.extend(std::iter::repeat_n(SENTINEL, channels));
            }
        }
    }
    SymbolStream { symbols }
}

pub fn serialize(encoded: &EncodedVideo) -> Vec<u8> {
    let h = &encoded.header;
    let payload: usize = encoded.frames.iter().map(|f| f.mask.len() + f.values.len()).sum();
    let mut out = Vec::with_capacity(HEADER_LEN + payload);
    out.extend_from_slice(MAGIC);
    out.push(FORMAT_VERSION);
    out.push(h.channels);
    out.extend_from_slice(&0u16.to_le_bytes());
    out.extend_from_slice(&h.width.to_le_bytes());
    out.extend_from_slice(&h.height.to_le_bytes());
    out.extend_from_slice(&h.frame_count.to_le_bytes());
    out.extend_from_slice(&h.delta.to_le_bytes());
    out.extend_from_slice(&h.lambda_limit.to_le_bytes());
    for frame in &encoded.frames {
        out.extend_from_slice(&frame.mask);
        out.extend_from_slice(&frame.values);
    }
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, len: usize, what: &str) -> Result<&'a [u8]> {
        let end = self
            .pos
            .checked_add(len)
            .filter(|&end| end <= self.bytes.len())
            .ok_or_else(|| Error::corrupt(format!("truncated while reading {what} at byte {}", self.pos)))?;
        let slice = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(slice)
    }

    fn u32(&mut self, what: &str) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4, what)?.try_into().unwrap()))
    }
}

pub fn deserialize(bytes: &[u8]) -> Result<EncodedVideo> {
    let mut r = Reader { bytes, pos: 0 };
    let magic = r.take(4, "magic")?;
    if magic != MAGIC {
        return Err(Error::WrongFormat(format!("expected magic LBF1, found {:?}", String::from_utf8_lossy(magic))));
    }
    let version = r.take(1, "version")?[0];
    if version != FORMAT_VERSION {
        return Err(Error::UnsupportedVersion(version));
    }
    let channels = r.take(1, "channels")?[0];
    let reserved = r.take(2, "reserved field")?;
    if reserved != [0, 0] {
        return Err(Error::corrupt("reserved header field is not zero"));
    }
    let width = r.u32("width")?;
    let height = r.u32("height")?;
    let frame_count = r.u32("frame count")?;
    let delta = r.u32("delta")?;
    let lambda_limit = f64::from_le_bytes(r.take(8, "lambda limit")?.try_into().unwrap());
    let header = Header { width, height, channels, frame_count, delta, lambda_limit };

    if channels != 1 && channels != 3 {
        return Err(Error::corrupt(format!("channel count {channels} is not 1 or 3")));
    }
    if width == 0 || height == 0 || frame_count == 0 {
        return Err(Error::corrupt("empty geometry in header"));
    }
    let mask_len = header.mask_len();
    // Every frame carries at least its bitmask; reject impossible frame
    // counts before allocating for them.
    if (frame_count as usize).saturating_mul(mask_len) > bytes.len() - r.pos {
        return Err(Error::corrupt("payload shorter than the announced frames"));
    }

    let mut frames = Vec::with_capacity(frame_count as usize);
    for i in 0..frame_count {
        let mask = r.take(mask_len, &format!("frame {i} bitmask"))?.to_vec();
        let count: usize = mask.iter().map(|b| b.count_ones() as usize).sum();
        let values = r.take(count * channels as usize, &format!("frame {i} values"))?.to_vec();
        frames.push(EncodedFrame { mask, values });
    }
    if r.pos != bytes.len() {
        return Err(Error::corrupt(format!("{} trailing bytes after last frame", bytes.len() - r.pos)));
    }
    let encoded = EncodedVideo { header, frames };
    encoded.validate()?;
    Ok(encoded)
}

/// Copy of frame `frame_index` with every non-keypixel painted white.
pub fn keypixel_mask_frame(video: &VideoSequence, encoded: &EncodedVideo, frame_index: usize) -> Result<Frame> {
    let h = &encoded.header;
    if video.width() != h.width as usize
        || video.height() != h.height as usize
        || video.channels() != h.channels as usize
        || video.frame_count() != encoded.frames.len()
    {
        return Err(Error::invalid("video and encoding differ in geometry"));
    }
    let (Some(original), Some(enc)) = (video.frame(frame_index), encoded.frames.get(frame_index)) else {
        return Err(Error::invalid(format!(
            "frame {frame_index} out of range (video has {} frames)",
            video.frame_count()
        )));
    };
    let channels = video.channels();
    let mut out = original.clone();
    for (p, px) in out.data_mut().chunks_exact_mut(channels).enumerate() {
        if !enc.is_keypixel(p) {
            px.fill(255);
        }
    }
    Ok(out)
}
