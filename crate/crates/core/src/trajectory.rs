//! Break-and-fit approximation of a single pixel's temporal trajectory.
//!
//! A trajectory is the sequence of sample values one pixel takes across the
//! frames of a clip. It is approximated by a chain of straight-line
//! (linear Bézier) pieces joined at *keypixels*: frames whose values are kept
//! verbatim. Every frame in between is recovered by linear interpolation of
//! the two surrounding keypixels.
//!
//! Fitting starts from a regular grid of keypixels (every `delta` frames plus
//! the last frame) and repeatedly splits the segment with the largest mean
//! squared error at its worst frame, until every segment is within
//! `lambda_limit`. Errors are always measured against the quantized
//! interpolant, i.e. the values a decoder actually produces.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_LAMBDA_LIMIT: f64 = 100.0;
pub const DEFAULT_DELTA: usize = 12;

/// Temporal samples of one pixel, `channels` values per frame, interleaved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    samples: Vec<u8>,
    channels: usize,
}

impl Trajectory {
    pub fn new(samples: Vec<u8>, channels: usize) -> Result<Self> {
        if channels != 1 && channels != 3 {
            return Err(Error::invalid(format!("channel count must be 1 or 3, got {channels}")));
        }
        if samples.is_empty() {
            return Err(Error::invalid("trajectory must contain at least one frame"));
        }
        if !samples.len().is_multiple_of(channels) {
            return Err(Error::invalid(format!(
                "{} samples do not divide into {channels}-channel points",
                samples.len()
            )));
        }
        Ok(Self { samples, channels })
    }

    /// Single-channel trajectory.
    pub fn mono(values: &[u8]) -> Result<Self> {
        Self::new(values.to_vec(), 1)
    }

    /// Number of frames.
    pub fn len(&self) -> usize {
        self.samples.len() / self.channels
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn point(&self, frame: usize) -> &[u8] {
        &self.samples[frame * self.channels..(frame + 1) * self.channels]
    }

    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<u8> {
        self.samples
    }
}

/// User parameters of the fit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitConfig {
    /// Maximum allowed mean squared error of any segment.
    pub lambda_limit: f64,
    /// Spacing of the initial keypixel grid, in frames.
    pub delta: usize,
}

impl FitConfig {
    pub fn new(lambda_limit: f64, delta: usize) -> Result<Self> {
        let config = Self { lambda_limit, delta };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.lambda_limit.is_nan() || self.lambda_limit < 0.0 {
            return Err(Error::invalid(format!(
                "lambda limit must be a non-negative number, got {}",
                self.lambda_limit
            )));
        }
        if self.delta == 0 {
            return Err(Error::invalid("keypixel interval must be at least 1"));
        }
        Ok(())
    }
}

impl Default for FitConfig {
    fn default() -> Self {
        Self { lambda_limit: DEFAULT_LAMBDA_LIMIT, delta: DEFAULT_DELTA }
    }
}

/// One linear piece between two consecutive keypixels (inclusive bounds).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    pub mse: f64,
}

/// Keypixel frames of a fitted trajectory together with their values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitResult {
    keypixels: Vec<usize>,
    values: Vec<u8>,
    channels: usize,
}

impl FitResult {
    /// Builds a result from explicit keypixels. `values` holds `channels`
    /// samples per keypixel. Ordering and range are checked on decode.
    pub fn new(keypixels: Vec<usize>, values: Vec<u8>, channels: usize) -> Result<Self> {
        if channels == 0 || values.len() != keypixels.len() * channels {
            return Err(Error::invalid(format!(
                "{} values for {} keypixels of {channels} channels",
                values.len(),
                keypixels.len()
            )));
        }
        Ok(Self { keypixels, values, channels })
    }

    fn from_trajectory(traj: &Trajectory, keypixels: Vec<usize>) -> Self {
        let values = keypixels.iter().flat_map(|&k| traj.point(k).iter().copied()).collect();
        Self { keypixels, values, channels: traj.channels }
    }

    pub fn keypixels(&self) -> &[usize] {
        &self.keypixels
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn value(&self, index: usize) -> &[u8] {
        &self.values[index * self.channels..(index + 1) * self.channels]
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn segment_count(&self) -> usize {
        self.keypixels.len().saturating_sub(1)
    }

    /// Segments of this fit measured against `traj`.
    pub fn segments(&self, traj: &Trajectory) -> Vec<Segment> {
        self.keypixels
            .windows(2)
            .map(|w| Segment {
                start: w[0],
                end: w[1],
                mse: span_mse(traj.samples(), traj.channels(), w[0], w[1]),
            })
            .collect()
    }
}

/// Points on the straight line from `start` to `end`, at parameters
/// `t = k / (num_points - 1)`. The endpoints are returned exactly.
pub fn interpolate_segment(start: &[f64], end: &[f64], num_points: usize) -> Result<Vec<Vec<f64>>> {
    if num_points < 2 {
        return Err(Error::invalid(format!("need at least 2 points, got {num_points}")));
    }
    if start.len() != end.len() {
        return Err(Error::invalid("segment endpoints have different channel counts"));
    }
    let steps = (num_points - 1) as f64;
    let points = (0..num_points)
        .map(|k| {
            if k == 0 {
                start.to_vec()
            } else if k == num_points - 1 {
                end.to_vec()
            } else {
                let k = k as f64;
                start
                    .iter()
                    .zip(end)
                    .map(|(&a, &b)| (a * (steps - k) + b * k) / steps)
                    .collect()
            }
        })
        .collect();
    Ok(points)
}

/// Nearest integer with halves rounded up, clamped to the 8-bit range.
pub fn quantize_sample(value: f64) -> u8 {
    (value + 0.5).floor().clamp(0.0, 255.0) as u8
}

pub fn quantize(point: &[f64]) -> Vec<u8> {
    point.iter().map(|&v| quantize_sample(v)).collect()
}

/// Quantized interpolant between samples `a` and `b` at `offset` frames into
/// a segment spanning `span` frames. Integer form of
/// `quantize(a + (b - a) * offset / span)`.
#[inline]
pub(crate) fn interpolant_sample(a: u8, b: u8, offset: usize, span: usize) -> u8 {
    debug_assert!(span > 0 && offset <= span);
    let span = span as u64;
    let offset = offset as u64;
    let num = u64::from(a) * (span - offset) + u64::from(b) * offset;
    ((2 * num + span) / (2 * span)) as u8
}

/// Regular keypixel grid `{0, delta, 2 delta, ...}` plus the last frame.
pub fn initial_keypixels(n: usize, delta: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let delta = delta.max(1);
    let mut keys: Vec<usize> = (0..n).step_by(delta).collect();
    if keys.last() != Some(&(n - 1)) {
        keys.push(n - 1);
    }
    keys
}

/// Squared distance of every frame in `[start, end]` to the quantized
/// interpolant of the segment's endpoints.
fn span_errors(samples: &[u8], channels: usize, start: usize, end: usize) -> impl Iterator<Item = u32> + '_ {
    let span = end - start;
    let first = &samples[start * channels..(start + 1) * channels];
    let last = &samples[end * channels..(end + 1) * channels];
    (start..=end).map(move |frame| {
        let point = &samples[frame * channels..(frame + 1) * channels];
        point
            .iter()
            .zip(first.iter().zip(last))
            .map(|(&p, (&a, &b))| {
                let q = interpolant_sample(a, b, frame - start, span);
                let d = i32::from(p) - i32::from(q);
                (d * d) as u32
            })
            .sum()
    })
}

fn span_mse(samples: &[u8], channels: usize, start: usize, end: usize) -> f64 {
    if end <= start {
        return 0.0;
    }
    let sse: u64 = span_errors(samples, channels, start, end).map(u64::from).sum();
    sse as f64 / (end - start + 1) as f64
}

/// Mean squared error of a segment whose first and last points are its
/// keypixels. `original` holds `channels` interleaved samples per frame.
/// The mean is taken over every frame, endpoints included.
pub fn segment_mse(original: &[u8], channels: usize) -> f64 {
    let frames = original.len() / channels.max(1);
    if frames < 2 {
        return 0.0;
    }
    span_mse(original, channels, 0, frames - 1)
}

/// Index (within the segment) of the frame with the largest squared distance
/// between `original` and `decoded`. Ties go to the smallest index.
pub fn find_split_point(original: &[u8], decoded: &[u8], channels: usize) -> Result<usize> {
    if channels == 0 || original.len() != decoded.len() || !original.len().is_multiple_of(channels) {
        return Err(Error::invalid("original and decoded segments differ in shape"));
    }
    let frames = original.len() / channels;
    if frames < 3 {
        return Err(Error::invalid(format!("cannot split a segment of {frames} frames")));
    }
    let mut best = (0, 0u32);
    for (i, (p, q)) in original.chunks_exact(channels).zip(decoded.chunks_exact(channels)).enumerate() {
        let dist: u32 = p
            .iter()
            .zip(q)
            .map(|(&a, &b)| {
                let d = i32::from(a) - i32::from(b);
                (d * d) as u32
            })
            .sum();
        if dist > best.1 {
            best = (i, dist);
        }
    }
    Ok(best.0)
}

/// Heap entry ordered by largest error, then smallest start frame.
#[derive(Debug)]
struct Pending {
    mse: f64,
    start: usize,
    end: usize,
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pending {}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mse.total_cmp(&other.mse).then_with(|| other.start.cmp(&self.start))
    }
}

/// Keypixel frames for `samples` (interleaved, `channels` per frame).
pub(crate) fn fit_keypixels(samples: &[u8], channels: usize, config: &FitConfig) -> Vec<usize> {
    let n = samples.len() / channels;
    let mut keys = initial_keypixels(n, config.delta);
    let mut heap: BinaryHeap<Pending> = keys
        .windows(2)
        .map(|w| Pending { mse: span_mse(samples, channels, w[0], w[1]), start: w[0], end: w[1] })
        .collect();

    while let Some(worst) = heap.pop() {
        if worst.mse <= config.lambda_limit {
            break;
        }
        let (start, end) = (worst.start, worst.end);
        // Squared errors are zero at both endpoints, so any positive-error
        // segment has a strictly interior maximum.
        let mut split = start;
        let mut max_err = 0;
        for (offset, err) in span_errors(samples, channels, start, end).enumerate() {
            if err > max_err {
                max_err = err;
                split = start + offset;
            }
        }
        debug_assert!(split > start && split < end);
        keys.push(split);
        heap.push(Pending { mse: span_mse(samples, channels, start, split), start, end: split });
        heap.push(Pending { mse: span_mse(samples, channels, split, end), start: split, end });
    }

    keys.sort_unstable();
    keys
}

/// Fits `traj` with error-bounded linear segments.
pub fn fit_trajectory(traj: &Trajectory, config: &FitConfig) -> FitResult {
    let keys = fit_keypixels(traj.samples(), traj.channels(), config);
    FitResult::from_trajectory(traj, keys)
}

/// Reconstructs all `n` frames of a fitted trajectory.
pub fn decode_trajectory(result: &FitResult, n: usize) -> Result<Trajectory> {
    let keys = result.keypixels();
    let channels = result.channels();
    if n == 0 || keys.first() != Some(&0) || keys.last() != Some(&(n - 1)) {
        return Err(Error::corrupt(format!("keypixels do not span frames 0..={}", n.saturating_sub(1))));
    }
    if keys.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::corrupt("keypixels are not strictly increasing"));
    }

    let mut samples = Vec::with_capacity(n * channels);
    samples.extend_from_slice(result.value(0));
    for (seg, w) in keys.windows(2).enumerate() {
        let (a, b) = (result.value(seg), result.value(seg + 1));
        let span = w[1] - w[0];
        for offset in 1..=span {
            samples.extend(a.iter().zip(b).map(|(&a, &b)| interpolant_sample(a, b, offset, span)));
        }
    }
    Trajectory::new(samples, channels)
}
