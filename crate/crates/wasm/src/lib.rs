//! Browser bindings for the demo page in `www/`.
//!
//! Three operations are exposed: fitting a single trajectory, encoding a
//! synthetic clip and inspecting its frames, and a rate-distortion sweep.

use wasm_bindgen::prelude::*;

use lbf::codec::keypixel_mask_frame;
use lbf::metrics::video_report;
use lbf::sweep::{rate_distortion_sweep, sweep_csv, SweepOptions};
use lbf::synth::SyntheticClip;
use lbf::{
    decode_trajectory, decode_video, encode_video_with, fit_trajectory, EncodeMode, EncodedVideo, FitConfig, Frame,
    Trajectory, VideoSequence,
};

fn js(err: lbf::Error) -> JsError {
    JsError::new(&err.to_string())
}

/// Keypixels of a fitted grey-level curve and its reconstruction.
#[wasm_bindgen]
pub struct CurveFit {
    keypixels: Vec<u32>,
    decoded: Vec<u8>,
    max_segment_mse: f64,
}

#[wasm_bindgen]
impl CurveFit {
    #[wasm_bindgen(getter)]
    pub fn keypixels(&self) -> Vec<u32> {
        self.keypixels.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn decoded(&self) -> Vec<u8> {
        self.decoded.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn max_segment_mse(&self) -> f64 {
        self.max_segment_mse
    }
}

impl CurveFit {
    pub fn compute(values: &[u8], lambda: f64, delta: usize) -> lbf::Result<Self> {
        let config = FitConfig::new(lambda, delta)?;
        let traj = Trajectory::mono(values)?;
        let fit = fit_trajectory(&traj, &config);
        let decoded = decode_trajectory(&fit, traj.len())?.into_samples();
        let max_segment_mse = fit.segments(&traj).iter().map(|s| s.mse).fold(0.0, f64::max);
        let keypixels = fit.keypixels().iter().map(|&k| k as u32).collect();
        Ok(Self { keypixels, decoded, max_segment_mse })
    }
}

#[wasm_bindgen]
pub fn fit_curve(values: &[u8], lambda: f64, delta: usize) -> Result<CurveFit, JsError> {
    CurveFit::compute(values, lambda, delta).map_err(js)
}

#[wasm_bindgen]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EncodeStats {
    pub keypixel_fraction: f64,
    pub entropy_bpp: f64,
    /// Infinite for a lossless encode.
    pub psnr_db: f64,
}

#[wasm_bindgen]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum View {
    Original,
    Decoded,
    Mask,
}

/// A synthetic luma clip plus its most recent encoding.
#[wasm_bindgen]
pub struct Clip {
    video: VideoSequence,
    encoded: Option<(EncodedVideo, VideoSequence)>,
}

#[wasm_bindgen]
impl Clip {
    #[wasm_bindgen(constructor)]
    pub fn new(width: usize, height: usize, frames: usize, noise: u8, seed: u64) -> Result<Clip, JsError> {
        Self::generate(width, height, frames, noise, seed).map_err(js)
    }

    #[wasm_bindgen(getter)]
    pub fn width(&self) -> usize {
        self.video.width()
    }

    #[wasm_bindgen(getter)]
    pub fn height(&self) -> usize {
        self.video.height()
    }

    #[wasm_bindgen(getter)]
    pub fn frame_count(&self) -> usize {
        self.video.frame_count()
    }

    pub fn encode(&mut self, lambda: f64, delta: usize) -> Result<EncodeStats, JsError> {
        self.try_encode(lambda, delta).map_err(js)
    }

    /// RGBA pixels of one frame, ready for `ImageData`.
    pub fn frame_rgba(&self, view: View, index: usize) -> Result<Vec<u8>, JsError> {
        self.try_frame_rgba(view, index).map_err(js)
    }

    /// Grey levels of pixel `(x, y)` across all frames.
    pub fn pixel_trajectory(&self, x: usize, y: usize) -> Vec<u8> {
        if x >= self.width() || y >= self.height() {
            return Vec::new();
        }
        self.video.trajectory(y * self.width() + x).into_samples()
    }

    /// Sweep CSV with the timing column left as `na`.
    pub fn sweep(&self, lambdas: Vec<f64>, delta: usize) -> Result<String, JsError> {
        self.try_sweep(&lambdas, delta).map_err(js)
    }
}

impl Clip {
    pub fn generate(width: usize, height: usize, frames: usize, noise: u8, seed: u64) -> lbf::Result<Self> {
        let video = SyntheticClip { width, height, frames, channels: 1, noise, seed }.generate()?;
        Ok(Self { video, encoded: None })
    }

    pub fn try_encode(&mut self, lambda: f64, delta: usize) -> lbf::Result<EncodeStats> {
        let config = FitConfig::new(lambda, delta)?;
        let encoded = encode_video_with(&self.video, &config, EncodeMode::Sequential)?;
        let decoded = decode_video(&encoded)?;
        let report = video_report(&self.video, &decoded, &encoded)?;
        self.encoded = Some((encoded, decoded));
        Ok(EncodeStats {
            keypixel_fraction: report.keypixel_fraction,
            entropy_bpp: report.entropy_bpp,
            psnr_db: report.distortion.aggregate_psnr_db,
        })
    }

    pub fn try_frame_rgba(&self, view: View, index: usize) -> lbf::Result<Vec<u8>> {
        let out_of_range = || lbf::Error::InvalidArgument(format!("frame {index} out of range"));
        let not_encoded = || lbf::Error::InvalidArgument("clip has not been encoded yet".into());
        let frame = match view {
            View::Original => self.video.frame(index).ok_or_else(out_of_range)?.clone(),
            View::Decoded => {
                let (_, decoded) = self.encoded.as_ref().ok_or_else(not_encoded)?;
                decoded.frame(index).ok_or_else(out_of_range)?.clone()
            }
            View::Mask => {
                let (encoded, _) = self.encoded.as_ref().ok_or_else(not_encoded)?;
                keypixel_mask_frame(&self.video, encoded, index)?
            }
        };
        Ok(grey_to_rgba(&frame))
    }

    pub fn try_sweep(&self, lambdas: &[f64], delta: usize) -> lbf::Result<String> {
        let options = SweepOptions { delta, mode: EncodeMode::Sequential, timed: false };
        Ok(sweep_csv(&rate_distortion_sweep(&self.video, lambdas, &options)?))
    }
}

fn grey_to_rgba(frame: &Frame) -> Vec<u8> {
    frame.data().iter().flat_map(|&v| [v, v, v, 255]).collect()
}
