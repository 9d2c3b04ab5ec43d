//! Deterministic synthetic clips for demos, benchmarks and tests.
//!
//! The scene is a slowly panning textured background under changing
//! illumination, a disc moving diagonally and a bar sliding horizontally,
//! plus optional per-frame sensor noise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::video::{Frame, VideoSequence};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SyntheticClip {
    pub width: usize,
    pub height: usize,
    pub frames: usize,
    pub channels: usize,
    /// Peak amplitude of uniform temporal noise, in sample units.
    pub noise: u8,
    pub seed: u64,
}

impl Default for SyntheticClip {
    /// SIF-sized luma clip.
    fn default() -> Self {
        Self { width: 352, height: 288, frames: 44, channels: 1, noise: 3, seed: 7 }
    }
}

/// Horizontal background drift, pixels per frame.
const PAN_PER_FRAME: f64 = 0.4;

const RGB_TINT: [f64; 3] = [1.0, 0.85, 0.7];

impl SyntheticClip {
    pub fn generate(&self) -> Result<VideoSequence> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let (w, h) = (self.width as f64, self.height as f64);
        let radius = (w.min(h) / 6.0).max(1.5);
        let bar_w = (w / 10.0).max(1.0);
        let mut frames = Vec::with_capacity(self.frames);
        for f in 0..self.frames {
            let t = f as f64;
            let light = 1.0 + 0.15 * (t / self.frames.max(1) as f64);
            let (cx, cy) = (w * 0.2 + 2.0 * t, h * 0.3 + 1.0 * t);
            let bar_x = (w * 0.7 - 3.0 * t).rem_euclid(w);
            let pan = PAN_PER_FRAME * t;
            let mut data = Vec::with_capacity(self.width * self.height * self.channels);
            for y in 0..self.height {
                for x in 0..self.width {
                    let (xf, yf) = (x as f64, y as f64);
                    let texture = (((xf + pan) * 0.21).sin() * (yf * 0.17).cos()) * 18.0;
                    let mut base = 40.0 + 100.0 * xf / w + 40.0 * yf / h + texture;
                    if (xf - cx).powi(2) + (yf - cy).powi(2) <= radius * radius {
                        base = 220.0 - 0.3 * ((xf - cx).abs() + (yf - cy).abs());
                    } else if xf >= bar_x && xf < bar_x + bar_w && yf > h * 0.55 {
                        base = 25.0;
                    }
                    for c in 0..self.channels {
                        let tint = if self.channels == 1 { 1.0 } else { RGB_TINT[c] };
                        let noise = if self.noise > 0 {
                            rng.gen_range(-i32::from(self.noise)..=i32::from(self.noise)) as f64
                        } else {
                            0.0
                        };
                        data.push((base * light * tint + noise).round().clamp(0.0, 255.0) as u8);
                    }
                }
            }
            frames.push(Frame::new(self.width, self.height, self.channels, data)?);
        }
        VideoSequence::new(frames)
    }
}
