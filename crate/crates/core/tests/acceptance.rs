//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails.
//!
//! Criterion 10 runs on a SIF-sized synthetic clip unless `LBF_TREND_Y4M`
//! points at a real YUV4MPEG2 sequence.

mod support;

use std::time::{Duration, Instant};

use lbf::bma::{block_mae, diamond_search, full_search, Block, BmaConfig, MotionVector};
use lbf::codec::{deserialize, serialize, EncodedVideo};
use lbf::metrics::{entropy, psnr, SymbolHistogram};
use lbf::sweep::{rate_distortion_sweep, SweepOptions};
use lbf::synth::SyntheticClip;
use lbf::{decode_trajectory, decode_video, encode_video, fit_trajectory, Error, FitConfig, Trajectory, VideoSequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::*;

type Outcome = Result<String, String>;

const LAMBDAS: [f64; 5] = [0.0, 1.0, 5.0, 25.0, 100.0];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn test_videos() -> Vec<VideoSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC1);
    (0..200).map(|i| random_video(&mut rng, 16, 40, if i % 2 == 0 { 1 } else { 3 })).collect()
}

/// Per-pixel keypixels and the pixel's original and decoded points.
fn pixel_views(original: &VideoSequence, encoded: &EncodedVideo, decoded: &VideoSequence) -> Vec<(Vec<usize>, Vec<Vec<u8>>, Vec<Vec<u8>>)> {
    (0..original.pixel_count())
        .map(|p| {
            let c = original.channels();
            (
                encoded.pixel_keypixels(p),
                points_of(original.trajectory(p).samples(), c),
                points_of(decoded.trajectory(p).samples(), c),
            )
        })
        .collect()
}

fn squared(a: &[u8], b: &[u8]) -> u64 {
    a.iter().zip(b).map(|(&x, &y)| (i64::from(x) - i64::from(y)).pow(2) as u64).sum()
}

fn criterion_1_segment_bound(videos: &[VideoSequence]) -> Outcome {
    let started = Instant::now();
    let mut segments = 0usize;
    for (v, video) in videos.iter().enumerate() {
        for &lambda in &LAMBDAS {
            let encoded = encode_video(video, &FitConfig::new(lambda, 12).unwrap()).map_err(|e| e.to_string())?;
            let decoded = decode_video(&encoded).map_err(|e| e.to_string())?;
            for (p, (keys, orig, dec)) in pixel_views(video, &encoded, &decoded).into_iter().enumerate() {
                for w in keys.windows(2) {
                    let sse: u64 = (w[0]..=w[1]).map(|f| squared(&orig[f], &dec[f])).sum();
                    let mse = sse as f64 / (w[1] - w[0] + 1) as f64;
                    ensure(mse <= lambda, || format!("video {v} pixel {p} segment {w:?}: mse {mse} > {lambda}"))?;
                    segments += 1;
                }
            }
        }
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("{segments} segments within bound in {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_2_lossless(videos: &[VideoSequence]) -> Outcome {
    for (v, video) in videos.iter().enumerate() {
        let encoded = encode_video(video, &FitConfig::new(0.0, 12).unwrap()).map_err(|e| e.to_string())?;
        let decoded = decode_video(&encoded).map_err(|e| e.to_string())?;
        ensure(&decoded == video, || format!("video {v} not reproduced"))?;
    }
    Ok(format!("{} videos bit-exact", videos.len()))
}

fn criterion_3_monotone() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC3);
    let lambdas = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0, 100.0, 400.0, 5000.0];
    for t in 0..500 {
        let channels = if t % 3 == 0 { 3 } else { 1 };
        let n = rng.gen_range(1..=60);
        let delta = rng.gen_range(1..=16);
        let traj = Trajectory::new(random_trajectory(&mut rng, n, channels), channels).unwrap();
        let sets: Vec<Vec<usize>> = lambdas
            .iter()
            .map(|&l| fit_trajectory(&traj, &FitConfig::new(l, delta).unwrap()).keypixels().to_vec())
            .collect();
        for (i, coarse) in sets.iter().enumerate() {
            for fine in &sets[..i] {
                ensure(coarse.iter().all(|k| fine.binary_search(k).is_ok()), || {
                    format!("trajectory {t}: {coarse:?} not within {fine:?}")
                })?;
            }
        }
    }
    let clip = SyntheticClip { width: 48, height: 40, frames: 30, channels: 1, noise: 3, seed: 3 }.generate().unwrap();
    let options = SweepOptions { delta: 12, timed: false, ..SweepOptions::default() };
    let rows = rate_distortion_sweep(&clip, &[0.0, 1.0, 5.0, 10.0, 20.0, 50.0, 100.0, 200.0], &options)
        .map_err(|e| e.to_string())?;
    ensure(rows.windows(2).all(|w| w[0].keypixel_fraction >= w[1].keypixel_fraction), || {
        format!("sweep keypixel fraction increases: {rows:?}")
    })?;
    Ok("500 trajectories nested across 11 limits; sweep fraction non-increasing".into())
}

fn criterion_4_oracle() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC4);
    let mut strictly_better = 0;
    for t in 0..1000 {
        let n = rng.gen_range(1..=20);
        let delta = rng.gen_range(1..=20);
        let lambda = [0.0, 1.0, 5.0, 25.0, 100.0, 400.0][rng.gen_range(0..6)];
        let samples = random_trajectory(&mut rng, n, 1);
        let points = points_of(&samples, 1);
        let fit = fit_trajectory(&Trajectory::mono(&samples).unwrap(), &FitConfig::new(lambda, delta).unwrap());
        let (count_dp, dp_keys) = dp_min_keypixels(&points, lambda);
        let count_bf = fit.keypixels().len();
        ensure(count_dp <= count_bf, || format!("trajectory {t}: dp {count_dp} > break-and-fit {count_bf}"))?;
        for keys in [fit.keypixels(), &dp_keys[..]] {
            for w in keys.windows(2) {
                let mse = reference_mse(&points, w[0], w[1]);
                ensure(mse <= lambda, || format!("trajectory {t}: {keys:?} segment {w:?} mse {mse}"))?;
            }
        }
        if count_dp < count_bf {
            strictly_better += 1;
        }
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("1000 trajectories, oracle strictly smaller on {strictly_better}, {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_5_worked_example() -> Outcome {
    let values = [0u8, 10, 20, 30, 20, 10, 0];
    let traj = Trajectory::mono(&values).unwrap();
    let fit = fit_trajectory(&traj, &FitConfig::new(1.0, 6).unwrap());
    ensure(fit.keypixels() == [0, 3, 6], || format!("keypixels {:?}", fit.keypixels()))?;
    let traced = naive_break_and_fit(&points_of(&values, 1), 1.0, 6);
    ensure(traced == [0, 3, 6], || format!("hand trace gives {traced:?}"))?;
    let initial = reference_errors(&points_of(&values, 1), 0, 6);
    ensure(initial == [0, 100, 400, 900, 400, 100, 0], || format!("initial errors {initial:?}"))?;
    let decoded = decode_trajectory(&fit, 7).map_err(|e| e.to_string())?;
    ensure(decoded == traj, || format!("decoded {:?}", decoded.samples()))?;
    Ok("keypixels {0,3,6}, exact reconstruction".into())
}

fn criterion_6_metric_identities() -> Outcome {
    let uniform: Vec<u16> = (0..256).flat_map(|s| [s; 3]).collect();
    let h = entropy(&SymbolHistogram::from_symbols(&uniform).unwrap()).unwrap();
    ensure((h - 8.0).abs() <= 1e-9, || format!("uniform entropy {h}"))?;
    let zero = psnr(65025.0).unwrap();
    ensure(zero.abs() <= 1e-9, || format!("psnr(65025) = {zero}"))?;
    let p100 = psnr(100.0).unwrap();
    ensure((p100 - 28.13).abs() <= 0.01, || format!("psnr(100) = {p100}"))?;
    Ok(format!("H = {h}, PSNR(65025) = {zero}, PSNR(100) = {p100:.4}"))
}

fn criterion_7_global_bound(videos: &[VideoSequence]) -> Outcome {
    let mut pixels = 0usize;
    for (v, video) in videos.iter().enumerate() {
        let n = video.frame_count();
        for &lambda in &LAMBDAS {
            let encoded = encode_video(video, &FitConfig::new(lambda, 12).unwrap()).map_err(|e| e.to_string())?;
            let decoded = decode_video(&encoded).map_err(|e| e.to_string())?;
            for (p, (keys, orig, dec)) in pixel_views(video, &encoded, &decoded).into_iter().enumerate() {
                let s = keys.len() - 1;
                let sse: u64 = (0..n).map(|f| squared(&orig[f], &dec[f])).sum();
                let mse = sse as f64 / n as f64;
                let bound = lambda * (n + s).saturating_sub(1) as f64 / n as f64;
                ensure(mse <= bound, || format!("video {v} pixel {p}: mse {mse} > {bound}"))?;
                pixels += 1;
            }
        }
    }
    Ok(format!("{pixels} pixel encodings within bound"))
}

fn criterion_8_serialization(videos: &[VideoSequence]) -> Outcome {
    for (v, video) in videos.iter().enumerate().step_by(5) {
        let encoded = encode_video(video, &FitConfig::new(5.0, 12).unwrap()).map_err(|e| e.to_string())?;
        let bytes = serialize(&encoded);
        ensure(bytes == serialize(&encode_video(video, &FitConfig::new(5.0, 12).unwrap()).unwrap()), || {
            format!("video {v}: serialization not byte-stable")
        })?;
        let back = deserialize(&bytes).map_err(|e| format!("video {v}: {e}"))?;
        ensure(back == encoded, || format!("video {v}: roundtrip differs"))?;

        let mut bad = bytes.clone();
        bad[..4].copy_from_slice(b"XBF1");
        ensure(matches!(deserialize(&bad), Err(Error::WrongFormat(_))), || format!("video {v}: bad magic accepted"))?;
        for cut in [0, 5, 31, bytes.len() - 1] {
            ensure(matches!(deserialize(&bytes[..cut]), Err(Error::CorruptInput(_))), || {
                format!("video {v}: truncation at {cut} accepted")
            })?;
        }
    }
    Ok("40 roundtrips stable; bad magic and truncation rejected".into())
}

fn criterion_9_bma() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC9);
    let config = BmaConfig { block_size: 8, search_range: 3 };
    let w = config.search_range as i64;
    for pair in 0..20 {
        let reference = noise_frame(&mut rng, 32, 32);
        let (sx, sy) = (rng.gen_range(-w..=w), rng.gen_range(-w..=w));
        let mut current = translate(&reference, sx, sy);
        for s in current.data_mut().iter_mut() {
            if rng.gen_bool(0.1) {
                *s = s.saturating_add(rng.gen_range(0..4));
            }
        }
        let fs = full_search(&reference, &current, &config).map_err(|e| e.to_string())?;
        let ds = diamond_search(&reference, &current, &config).map_err(|e| e.to_string())?;
        for row in 0..fs.rows {
            for col in 0..fs.cols {
                let (x, y) = (col * 8, row * 8);
                let cur = Block::from_frame(&current, x, y, 8, 8).unwrap();
                let best = fs.mae[row * fs.cols + col];
                for dy in -w..=w {
                    for dx in -w..=w {
                        let (rx, ry) = (x as i64 + dx, y as i64 + dy);
                        if rx < 0 || ry < 0 || rx + 8 > 32 || ry + 8 > 32 {
                            continue;
                        }
                        let cand = Block::from_frame(&reference, rx as usize, ry as usize, 8, 8).unwrap();
                        let mae = block_mae(&cur, &cand).unwrap();
                        ensure(mae >= best, || format!("pair {pair} block ({col},{row}): ({dx},{dy}) beats full search"))?;
                    }
                }
                let v = fs.vector(col, row);
                ensure(v.dx.abs() <= 3 && v.dy.abs() <= 3, || format!("vector {v:?} outside window"))?;
                let dmae = ds.mae[row * ds.cols + col];
                ensure(dmae >= best, || format!("pair {pair} block ({col},{row}): diamond {dmae} < full {best}"))?;
            }
        }
    }

    let mut translations = 0;
    for sy in -w..=w {
        for sx in -w..=w {
            let reference = noise_frame(&mut rng, 32, 32);
            let current = translate(&reference, sx, sy);
            let fs = full_search(&reference, &current, &config).map_err(|e| e.to_string())?;
            for row in 0..fs.rows {
                for col in 0..fs.cols {
                    let (x, y) = ((col * 8) as i64, (row * 8) as i64);
                    let interior = x - sx >= 0 && y - sy >= 0 && x - sx + 8 <= 32 && y - sy + 8 <= 32;
                    if !interior {
                        continue;
                    }
                    let v = fs.vector(col, row);
                    let mae = fs.mae[row * fs.cols + col];
                    ensure(v == MotionVector::new(-sx as i32, -sy as i32) && mae == 0.0, || {
                        format!("shift ({sx},{sy}) block ({col},{row}): got {v:?} mae {mae}")
                    })?;
                }
            }
            translations += 1;
        }
    }
    Ok(format!("20 pairs exhaustively re-checked; {translations} translations recovered"))
}

fn load_trend_clip() -> Result<(VideoSequence, String), String> {
    match std::env::var("LBF_TREND_Y4M") {
        Ok(path) => {
            let bytes = std::fs::read(&path).map_err(|e| format!("{path}: {e}"))?;
            let video = lbf::video_io::read_y4m(&bytes).map_err(|e| format!("{path}: {e}"))?;
            Ok((video, path))
        }
        Err(_) => Ok((SyntheticClip::default().generate().map_err(|e| e.to_string())?, "synthetic 352x288x44".into())),
    }
}

fn criterion_10_trend() -> Outcome {
    let (video, source) = load_trend_clip()?;
    let options = SweepOptions { delta: 12, timed: true, ..SweepOptions::default() };
    let rows = rate_distortion_sweep(&video, &[5.0, 10.0, 20.0, 50.0, 100.0, 200.0], &options)
        .map_err(|e| e.to_string())?;
    for w in rows.windows(2) {
        ensure(w[1].entropy_bpp <= w[0].entropy_bpp, || {
            format!("entropy rises from {} to {} between λ {} and {}", w[0].entropy_bpp, w[1].entropy_bpp, w[0].lambda_limit, w[1].lambda_limit)
        })?;
        ensure(w[1].aggregate_psnr_db <= w[0].aggregate_psnr_db, || {
            format!("PSNR rises between λ {} and {}", w[0].lambda_limit, w[1].lambda_limit)
        })?;
    }
    ensure(rows.iter().all(|r| r.aggregate_psnr_db > 0.0), || "non-positive PSNR".into())?;

    let mut timing = String::new();
    if video.width() == 352 && video.height() == 288 && video.frame_count() == 44 && video.channels() == 1 {
        let started = Instant::now();
        encode_video(&video, &FitConfig::default()).map_err(|e| e.to_string())?;
        let elapsed = started.elapsed();
        // 10 s target with 2x slack.
        ensure(elapsed < Duration::from_secs(20), || format!("sequential encode took {elapsed:?}"))?;
        timing = format!(", sequential encode {:.2}s", elapsed.as_secs_f64());
    }
    let first = &rows[0];
    let last = rows.last().unwrap();
    Ok(format!(
        "{source}: entropy {:.3} -> {:.3} bpp, PSNR {:.2} -> {:.2} dB{timing}",
        first.entropy_bpp, last.entropy_bpp, first.aggregate_psnr_db, last.aggregate_psnr_db
    ))
}

#[test]
fn acceptance() {
    let videos = test_videos();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 segment error bound", Box::new(|| criterion_1_segment_bound(&videos))),
        ("2 lossless at lambda=0", Box::new(|| criterion_2_lossless(&videos))),
        ("3 monotone refinement", Box::new(criterion_3_monotone)),
        ("4 oracle comparison", Box::new(criterion_4_oracle)),
        ("5 worked example", Box::new(criterion_5_worked_example)),
        ("6 metric identities", Box::new(criterion_6_metric_identities)),
        ("7 global error bound", Box::new(|| criterion_7_global_bound(&videos))),
        ("8 serialization", Box::new(|| criterion_8_serialization(&videos))),
        ("9 block matching", Box::new(criterion_9_bma)),
        ("10 rate-distortion trend", Box::new(criterion_10_trend)),
    ];
    let mut failed = Vec::new();
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(why) => {
                println!("criterion {name}: FAIL ({why})");
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
