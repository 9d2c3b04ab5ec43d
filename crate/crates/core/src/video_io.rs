//! Byte-level readers and writers: YUV4MPEG2, headerless raw video, PGM/PPM.

use crate::error::{Error, Result};
use crate::video::{Frame, VideoSequence};

const Y4M_SIGNATURE: &[u8] = b"YUV4MPEG2";
const Y4M_FRAME: &[u8] = b"FRAME";

/// Geometry of a headerless raw file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RawVideoSpec {
    pub width: usize,
    pub height: usize,
    pub channels: usize,
    /// Inferred from the byte count when `None`.
    pub frame_count: Option<usize>,
}

/// Splits `bytes` into frames of `width * height * channels` samples.
pub fn read_raw(bytes: &[u8], spec: &RawVideoSpec) -> Result<VideoSequence> {
    let frame_len = spec.width * spec.height * spec.channels;
    if frame_len == 0 {
        return Err(Error::invalid("raw video geometry is empty"));
    }
    if !bytes.len().is_multiple_of(frame_len) {
        return Err(Error::corrupt(format!(
            "{} bytes is not a whole number of {}x{}x{} frames",
            bytes.len(),
            spec.width,
            spec.height,
            spec.channels
        )));
    }
    let found = bytes.len() / frame_len;
    if let Some(expected) = spec.frame_count {
        if expected != found {
            return Err(Error::corrupt(format!("expected {expected} frames, found {found}")));
        }
    }
    let frames = bytes
        .chunks_exact(frame_len)
        .map(|chunk| Frame::new(spec.width, spec.height, spec.channels, chunk.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    if frames.is_empty() {
        return Err(Error::corrupt("raw input holds no frames"));
    }
    VideoSequence::new(frames)
}

pub fn write_raw(video: &VideoSequence) -> Vec<u8> {
    video.frames().iter().flat_map(|f| f.data().iter().copied()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Chroma {
    Mono,
    Yuv420,
}

fn parse_dim(token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| Error::corrupt(format!("bad {what} in YUV4MPEG2 header: {token:?}")))
}

fn line_end(bytes: &[u8], from: usize) -> Result<usize> {
    bytes[from..]
        .iter()
        .position(|&b| b == b'\n')
        .map(|i| from + i)
        .ok_or_else(|| Error::corrupt("unterminated YUV4MPEG2 header line"))
}

/// Reads the luma plane of every frame. 4:2:0 chroma planes are skipped.
pub fn read_y4m(bytes: &[u8]) -> Result<VideoSequence> {
    if !bytes.starts_with(Y4M_SIGNATURE) || bytes.get(Y4M_SIGNATURE.len()).is_some_and(|&b| b != b' ' && b != b'\n')
    {
        return Err(Error::WrongFormat("missing YUV4MPEG2 signature".into()));
    }
    let header_end = line_end(bytes, 0)?;
    let header = std::str::from_utf8(&bytes[Y4M_SIGNATURE.len()..header_end])
        .ok()
        .filter(|h| h.is_ascii())
        .ok_or_else(|| Error::corrupt("YUV4MPEG2 header is not ASCII"))?;

    let (mut width, mut height, mut chroma) = (None, None, Chroma::Yuv420);
    for token in header.split_ascii_whitespace() {
        let (tag, value) = token.split_at(1);
        match tag {
            "W" => width = Some(parse_dim(value, "width")?),
            "H" => height = Some(parse_dim(value, "height")?),
            "C" => {
                chroma = match value {
                    "420" | "420jpeg" | "420paldv" | "420mpeg2" => Chroma::Yuv420,
                    "mono" => Chroma::Mono,
                    other => return Err(Error::UnsupportedFormat(format!("YUV4MPEG2 colorspace C{other}"))),
                }
            }
            _ => {}
        }
    }
    let width = width.ok_or_else(|| Error::corrupt("YUV4MPEG2 header lacks W"))?;
    let height = height.ok_or_else(|| Error::corrupt("YUV4MPEG2 header lacks H"))?;
    let luma = width * height;
    let chroma_len = match chroma {
        Chroma::Mono => 0,
        Chroma::Yuv420 => 2 * width.div_ceil(2) * height.div_ceil(2),
    };

    let mut pos = header_end + 1;
    let mut frames = Vec::new();
    while pos < bytes.len() {
        if !bytes[pos..].starts_with(Y4M_FRAME) {
            return Err(Error::corrupt(format!("expected FRAME marker at byte {pos}")));
        }
        let data_start = line_end(bytes, pos)? + 1;
        let data_end = data_start + luma + chroma_len;
        if data_end > bytes.len() {
            return Err(Error::corrupt(format!("frame {} is truncated", frames.len())));
        }
        frames.push(Frame::new(width, height, 1, bytes[data_start..data_start + luma].to_vec())?);
        pos = data_end;
    }
    if frames.is_empty() {
        return Err(Error::corrupt("YUV4MPEG2 stream holds no frames"));
    }
    VideoSequence::new(frames)
}

fn require_mono(channels: usize, what: &str) -> Result<()> {
    if channels != 1 {
        return Err(Error::invalid(format!("{what} needs 1-channel data, got {channels} channels")));
    }
    Ok(())
}

/// Monochrome YUV4MPEG2 stream.
pub fn write_y4m(video: &VideoSequence) -> Result<Vec<u8>> {
    require_mono(video.channels(), "YUV4MPEG2 output")?;
    let mut out = format!("YUV4MPEG2 W{} H{} F25:1 Ip A1:1 Cmono\n", video.width(), video.height()).into_bytes();
    for frame in video.frames() {
        out.extend_from_slice(b"FRAME\n");
        out.extend_from_slice(frame.data());
    }
    Ok(out)
}

/// Binary greyscale PGM (`P5`, maxval 255).
pub fn write_pgm(frame: &Frame) -> Result<Vec<u8>> {
    require_mono(frame.channels(), "PGM output")?;
    let mut out = format!("P5\n{} {}\n255\n", frame.width(), frame.height()).into_bytes();
    out.extend_from_slice(frame.data());
    Ok(out)
}

/// Binary colour PPM (`P6`, maxval 255).
pub fn write_ppm(frame: &Frame) -> Result<Vec<u8>> {
    if frame.channels() != 3 {
        return Err(Error::invalid(format!("PPM output needs 3-channel data, got {}", frame.channels())));
    }
    let mut out = format!("P6\n{} {}\n255\n", frame.width(), frame.height()).into_bytes();
    out.extend_from_slice(frame.data());
    Ok(out)
}

/// PGM for greyscale frames, PPM for colour ones.
pub fn write_pnm(frame: &Frame) -> Result<Vec<u8>> {
    match frame.channels() {
        3 => write_ppm(frame),
        _ => write_pgm(frame),
    }
}
