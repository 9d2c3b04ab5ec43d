//! Reference implementations and generators shared by the integration
//! tests. Nothing here calls into the fitting code it is used to check.

#![allow(dead_code)]

use lbf::{Frame, VideoSequence};
use rand::Rng;

/// Quantized interpolant computed in floating point.
pub fn reference_interpolant(a: u8, b: u8, offset: usize, span: usize) -> u8 {
    let value = (f64::from(a) * (span - offset) as f64 + f64::from(b) * offset as f64) / span as f64;
    (value + 0.5).floor().clamp(0.0, 255.0) as u8
}

/// Squared error of each frame of `points[start..=end]` against the line
/// joining the endpoints.
pub fn reference_errors(points: &[Vec<u8>], start: usize, end: usize) -> Vec<u64> {
    let span = end - start;
    (start..=end)
        .map(|i| {
            points[i]
                .iter()
                .enumerate()
                .map(|(c, &p)| {
                    let q = if span == 0 { p } else { reference_interpolant(points[start][c], points[end][c], i - start, span) };
                    let d = i64::from(p) - i64::from(q);
                    (d * d) as u64
                })
                .sum()
        })
        .collect()
}

pub fn reference_mse(points: &[Vec<u8>], start: usize, end: usize) -> f64 {
    let errs = reference_errors(points, start, end);
    errs.iter().sum::<u64>() as f64 / errs.len() as f64
}

/// Minimum keypixel count over all segmentations of `points` whose
/// segments each have MSE at most `lambda`, with one optimal keypixel set.
pub fn dp_min_keypixels(points: &[Vec<u8>], lambda: f64) -> (usize, Vec<usize>) {
    let n = points.len();
    if n == 1 {
        return (1, vec![0]);
    }
    let mut best = vec![usize::MAX; n];
    let mut prev = vec![0usize; n];
    best[0] = 1;
    for j in 1..n {
        for i in 0..j {
            if best[i] != usize::MAX && reference_mse(points, i, j) <= lambda && best[i] + 1 < best[j] {
                best[j] = best[i] + 1;
                prev[j] = i;
            }
        }
    }
    let mut keys = vec![n - 1];
    let mut j = n - 1;
    while j != 0 {
        j = prev[j];
        keys.push(j);
    }
    keys.reverse();
    (best[n - 1], keys)
}

/// Literal break-and-fit: recompute every segment's error each round,
/// split the worst (smallest start on ties) at its first maximum-error frame.
pub fn naive_break_and_fit(points: &[Vec<u8>], lambda: f64, delta: usize) -> Vec<usize> {
    let n = points.len();
    let mut keys: Vec<usize> = (0..n).step_by(delta).collect();
    if *keys.last().unwrap() != n - 1 {
        keys.push(n - 1);
    }
    loop {
        let mut worst: Option<(f64, usize)> = None;
        for (s, w) in keys.windows(2).enumerate() {
            let mse = reference_mse(points, w[0], w[1]);
            if worst.is_none_or(|(m, _)| mse > m) {
                worst = Some((mse, s));
            }
        }
        let Some((mse, s)) = worst else { return keys };
        if mse <= lambda {
            return keys;
        }
        let (start, end) = (keys[s], keys[s + 1]);
        let errs = reference_errors(points, start, end);
        let max = *errs.iter().max().unwrap();
        let offset = errs.iter().position(|&e| e == max).unwrap();
        keys.insert(s + 1, start + offset);
    }
}

pub fn points_of(samples: &[u8], channels: usize) -> Vec<Vec<u8>> {
    samples.chunks_exact(channels).map(<[u8]>::to_vec).collect()
}

#[derive(Clone, Copy, Debug)]
pub enum Shape {
    RandomWalk,
    Steps,
}

/// One channel's temporal samples.
pub fn random_series(rng: &mut impl Rng, n: usize, shape: Shape) -> Vec<u8> {
    let mut v: i32 = rng.gen_range(0..=255);
    let mut out = Vec::with_capacity(n);
    match shape {
        Shape::RandomWalk => {
            let step = rng.gen_range(1..=12);
            for _ in 0..n {
                out.push(v as u8);
                v = (v + rng.gen_range(-step..=step)).clamp(0, 255);
            }
        }
        Shape::Steps => {
            let p_jump = rng.gen_range(0.05..0.4);
            for _ in 0..n {
                out.push(v as u8);
                if rng.gen_bool(p_jump) {
                    v = rng.gen_range(0..=255);
                }
            }
        }
    }
    out
}

pub fn random_trajectory(rng: &mut impl Rng, n: usize, channels: usize) -> Vec<u8> {
    let shape = if rng.gen_bool(0.5) { Shape::RandomWalk } else { Shape::Steps };
    let series: Vec<Vec<u8>> = (0..channels).map(|_| random_series(rng, n, shape)).collect();
    (0..n).flat_map(|f| series.iter().map(move |s| s[f])).collect()
}

/// Video whose pixels follow random-walk or step-function trajectories.
pub fn random_video(rng: &mut impl Rng, max_side: usize, max_frames: usize, channels: usize) -> VideoSequence {
    let width = rng.gen_range(1..=max_side);
    let height = rng.gen_range(1..=max_side);
    let n = rng.gen_range(1..=max_frames);
    let pixels = width * height;
    let trajectories: Vec<Vec<u8>> = (0..pixels).map(|_| random_trajectory(rng, n, channels)).collect();
    let frames = (0..n)
        .map(|f| {
            let data = trajectories.iter().flat_map(|t| t[f * channels..(f + 1) * channels].iter().copied()).collect();
            Frame::new(width, height, channels, data).unwrap()
        })
        .collect();
    VideoSequence::new(frames).unwrap()
}

/// Uniform random single-channel frame.
pub fn noise_frame(rng: &mut impl Rng, width: usize, height: usize) -> Frame {
    Frame::new(width, height, 1, (0..width * height).map(|_| rng.gen()).collect()).unwrap()
}

/// `cur(x, y) = ref(x - sx, y - sy)`, with edge samples repeated.
pub fn translate(frame: &Frame, sx: i64, sy: i64) -> Frame {
    let (w, h) = (frame.width() as i64, frame.height() as i64);
    let data = (0..w * h)
        .map(|i| {
            let x = (i % w - sx).clamp(0, w - 1);
            let y = (i / w - sy).clamp(0, h - 1);
            frame.data()[(y * w + x) as usize]
        })
        .collect();
    Frame::new(frame.width(), frame.height(), 1, data).unwrap()
}
