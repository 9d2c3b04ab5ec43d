//! Rate-distortion sweep over a list of error limits.

use std::time::Instant;

use crate::codec::{decode_video, encode_video_with, EncodeMode};
use crate::error::{Error, Result};
use crate::metrics::{format_db, video_report};
use crate::trajectory::FitConfig;
use crate::video::VideoSequence;

pub const CSV_HEADER: &str = "lambda,entropy_bpp,psnr_db,keypixel_fraction,encode_seconds";

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub lambda_limit: f64,
    pub entropy_bpp: f64,
    pub aggregate_psnr_db: f64,
    pub keypixel_fraction: f64,
    /// Wall-clock encode time; `None` when timing is disabled.
    pub encode_seconds: Option<f64>,
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        let seconds = self.encode_seconds.map_or_else(|| "na".to_string(), |s| format!("{s:.3}"));
        format!(
            "{},{:.6},{},{:.6},{}",
            self.lambda_limit,
            self.entropy_bpp,
            format_db(self.aggregate_psnr_db, 4),
            self.keypixel_fraction,
            seconds
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub delta: usize,
    pub mode: EncodeMode,
    /// Measure encode wall-clock time. Off on targets without a clock.
    pub timed: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { delta: crate::trajectory::DEFAULT_DELTA, mode: EncodeMode::Sequential, timed: true }
    }
}

/// One row per distinct λ, sorted ascending.
pub fn rate_distortion_sweep(video: &VideoSequence, lambdas: &[f64], options: &SweepOptions) -> Result<Vec<SweepRow>> {
    if lambdas.is_empty() {
        return Err(Error::invalid("lambda list is empty"));
    }
    let mut lambdas = lambdas.to_vec();
    for &l in &lambdas {
        FitConfig::new(l, options.delta)?;
    }
    lambdas.sort_by(f64::total_cmp);
    lambdas.dedup();

    lambdas
        .into_iter()
        .map(|lambda_limit| {
            let config = FitConfig::new(lambda_limit, options.delta)?;
            let started = options.timed.then(Instant::now);
            let encoded = encode_video_with(video, &config, options.mode)?;
            let encode_seconds = started.map(|t| t.elapsed().as_secs_f64());
            let report = video_report(video, &decode_video(&encoded)?, &encoded)?;
            Ok(SweepRow {
                lambda_limit,
                entropy_bpp: report.entropy_bpp,
                aggregate_psnr_db: report.distortion.aggregate_psnr_db,
                keypixel_fraction: report.keypixel_fraction,
                encode_seconds,
            })
        })
        .collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}
