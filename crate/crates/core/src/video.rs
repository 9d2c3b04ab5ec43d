//! In-memory frames and clips of 8-bit samples.

use crate::error::{Error, Result};
use crate::trajectory::Trajectory;

/// One picture: row-major pixels, `channels` interleaved samples each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    width: usize,
    height: usize,
    channels: usize,
    data: Vec<u8>,
}

impl Frame {
    pub fn new(width: usize, height: usize, channels: usize, data: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::invalid(format!("frame dimensions {width}x{height} are empty")));
        }
        if channels != 1 && channels != 3 {
            return Err(Error::invalid(format!("channel count must be 1 or 3, got {channels}")));
        }
        let expected = width
            .checked_mul(height)
            .and_then(|p| p.checked_mul(channels))
            .ok_or_else(|| Error::invalid("frame dimensions overflow"))?;
        if data.len() != expected {
            return Err(Error::invalid(format!(
                "{width}x{height}x{channels} frame needs {expected} samples, got {}",
                data.len()
            )));
        }
        Ok(Self { width, height, channels, data })
    }

    pub fn filled(width: usize, height: usize, channels: usize, value: u8) -> Result<Self> {
        Self::new(width, height, channels, vec![value; width * height * channels])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn pixel_count(&self) -> usize {
        self.width * self.height
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [u8] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<u8> {
        self.data
    }

    /// Samples of the pixel at raster index `pixel`.
    pub fn pixel(&self, pixel: usize) -> &[u8] {
        &self.data[pixel * self.channels..(pixel + 1) * self.channels]
    }

    pub fn same_geometry(&self, other: &Frame) -> bool {
        self.width == other.width && self.height == other.height && self.channels == other.channels
    }
}

/// A clip: one or more frames sharing dimensions and channel count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VideoSequence {
    frames: Vec<Frame>,
}

impl VideoSequence {
    pub fn new(frames: Vec<Frame>) -> Result<Self> {
        let first = frames.first().ok_or_else(|| Error::invalid("a video needs at least one frame"))?;
        if let Some(i) = frames.iter().position(|f| !f.same_geometry(first)) {
            return Err(Error::invalid(format!("frame {i} differs in geometry from frame 0")));
        }
        Ok(Self { frames })
    }

    pub fn width(&self) -> usize {
        self.frames[0].width
    }

    pub fn height(&self) -> usize {
        self.frames[0].height
    }

    pub fn channels(&self) -> usize {
        self.frames[0].channels
    }

    pub fn pixel_count(&self) -> usize {
        self.frames[0].pixel_count()
    }

    pub fn frame_count(&self) -> usize {
        self.frames.len()
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    pub fn frame(&self, index: usize) -> Option<&Frame> {
        self.frames.get(index)
    }

    pub fn into_frames(self) -> Vec<Frame> {
        self.frames
    }

    pub fn same_geometry(&self, other: &VideoSequence) -> bool {
        self.frame_count() == other.frame_count() && self.frames[0].same_geometry(&other.frames[0])
    }

    /// Copies the temporal samples of `pixel` into `buf` (cleared first).
    pub fn gather_trajectory(&self, pixel: usize, buf: &mut Vec<u8>) {
        buf.clear();
        for frame in &self.frames {
            buf.extend_from_slice(frame.pixel(pixel));
        }
    }

    pub fn trajectory(&self, pixel: usize) -> Trajectory {
        let mut buf = Vec::with_capacity(self.frame_count() * self.channels());
        self.gather_trajectory(pixel, &mut buf);
        Trajectory::new(buf, self.channels()).expect("frames are validated on construction")
    }
}
