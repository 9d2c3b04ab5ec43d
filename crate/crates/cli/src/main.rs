//! `lbf`: encode, decode and evaluate videos with per-pixel linear Bézier
//! fitting, and compare against block-matching prediction.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use lbf::bma::{diamond_search, full_search, reconstruct, BmaConfig};
use lbf::codec::{deserialize, keypixel_mask_frame, serialize};
use lbf::metrics::{distortion, format_db, frame_mse, psnr, video_report};
use lbf::sweep::{rate_distortion_sweep, sweep_csv, SweepOptions};
use lbf::synth::SyntheticClip;
use lbf::trajectory::{DEFAULT_DELTA, DEFAULT_LAMBDA_LIMIT};
use lbf::video_io::{read_raw, read_y4m, write_pnm, write_raw, write_y4m, RawVideoSpec};
use lbf::{decode_video, encode_video_with, EncodeMode, EncodedVideo, FitConfig, VideoSequence};

#[derive(Parser)]
#[command(name = "lbf", version, about = "Temporal video approximation by linear Bezier fitting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit every pixel and write an LBF1 file.
    Encode {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        fit: FitArgs,
        #[arg(long)]
        output: PathBuf,
    },
    /// Reconstruct a video from an LBF1 file.
    Decode {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Raw)]
        format: OutputFormat,
    },
    /// Print distortion (and rate, given the encoding) as JSON.
    Metrics {
        #[arg(long)]
        original: PathBuf,
        #[arg(long)]
        reconstructed: PathBuf,
        #[arg(long)]
        encoded: Option<PathBuf>,
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// Entropy / PSNR / keypixel fraction for a list of error limits.
    Sweep {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        lambdas: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_DELTA)]
        delta: usize,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write `na` instead of encode times.
        #[arg(long)]
        no_timing: bool,
    },
    /// Export one frame with non-keypixels painted white.
    Mask {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        fit: FitArgs,
        /// Zero-based frame index.
        #[arg(long)]
        frame: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Predict each frame from its predecessor by block matching.
    Bma {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Method::Ds)]
        method: Method,
        #[arg(long, default_value_t = 16)]
        block: usize,
        #[arg(long, default_value_t = 7)]
        range: usize,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write each predicted frame as PGM into this directory.
        #[arg(long)]
        frames_dir: Option<PathBuf>,
    },
    /// Write a deterministic synthetic test clip.
    Synth {
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = 352)]
        width: usize,
        #[arg(long, default_value_t = 288)]
        height: usize,
        #[arg(long, default_value_t = 44)]
        frames: usize,
        #[arg(long, default_value_t = 1)]
        channels: usize,
        #[arg(long, default_value_t = 3)]
        noise: u8,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args)]
struct GeometryArgs {
    /// Input container; `auto` picks y4m for `.y4m` files and raw otherwise.
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    /// Raw input width.
    #[arg(long)]
    width: Option<usize>,
    /// Raw input height.
    #[arg(long)]
    height: Option<usize>,
    /// Raw input channels (1 = grey, 3 = interleaved RGB).
    #[arg(long, default_value_t = 1)]
    channels: usize,
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    geometry: GeometryArgs,
}

#[derive(Args)]
struct FitArgs {
    /// Maximum mean squared error of any segment.
    #[arg(long, default_value_t = DEFAULT_LAMBDA_LIMIT, allow_negative_numbers = true)]
    lambda: f64,
    /// Initial keypixel interval in frames.
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    delta: usize,
}

impl FitArgs {
    fn config(&self) -> Result<FitConfig> {
        FitConfig::new(self.lambda, self.delta).context("validating fit parameters")
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Y4m,
    Raw,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Raw,
    Y4m,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Full,
    Ds,
}

fn read_video(path: &Path, geometry: &GeometryArgs) -> Result<VideoSequence> {
    let bytes = fs::read(path).with_context(|| format!("reading input {}", path.display()))?;
    let y4m = match geometry.format {
        InputFormat::Y4m => true,
        InputFormat::Raw => false,
        InputFormat::Auto => path.extension().is_some_and(|e| e.eq_ignore_ascii_case("y4m")),
    };
    let video = if y4m {
        read_y4m(&bytes)
    } else {
        let (Some(width), Some(height)) = (geometry.width, geometry.height) else {
            bail!("raw input {} needs --width and --height", path.display());
        };
        read_raw(&bytes, &RawVideoSpec { width, height, channels: geometry.channels, frame_count: None })
    };
    video.with_context(|| format!("parsing input {}", path.display()))
}

fn read_encoded(path: &Path) -> Result<EncodedVideo> {
    let bytes = fs::read(path).with_context(|| format!("reading encoded file {}", path.display()))?;
    deserialize(&bytes).with_context(|| format!("parsing encoded file {}", path.display()))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn write_text_or_stdout(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => write_file(path, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs `f` under the worker count requested by `LBF_THREADS`.
fn with_threads<T: Send>(f: impl FnOnce(EncodeMode) -> T + Send) -> Result<T> {
    match std::env::var("LBF_THREADS") {
        Err(_) => Ok(f(EncodeMode::Parallel)),
        Ok(value) => {
            let threads: usize = value.trim().parse().with_context(|| format!("LBF_THREADS={value:?} is not a count"))?;
            if threads == 0 {
                return Ok(f(EncodeMode::Sequential));
            }
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().context("starting worker pool")?;
            Ok(pool.install(|| f(EncodeMode::Parallel)))
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Encode { input, fit, output } => {
            let config = fit.config()?;
            let video = read_video(&input.input, &input.geometry)?;
            let started = Instant::now();
            let encoded = with_threads(|mode| encode_video_with(&video, &config, mode))?.context("encoding")?;
            let seconds = started.elapsed().as_secs_f64();
            write_file(&output, &serialize(&encoded))?;
            println!("keypixel_fraction={:.6} encode_seconds={seconds:.3}", encoded.keypixel_fraction());
        }
        Command::Decode { input, output, format } => {
            let video = decode_video(&read_encoded(&input)?).context("decoding")?;
            let bytes = match format {
                OutputFormat::Raw => write_raw(&video),
                OutputFormat::Y4m => write_y4m(&video).context("writing YUV4MPEG2")?,
            };
            write_file(&output, &bytes)?;
        }
        Command::Metrics { original, reconstructed, encoded, geometry } => {
            let original = read_video(&original, &geometry)?;
            let reconstructed = read_video(&reconstructed, &geometry)?;
            let json = match encoded {
                Some(path) => {
                    let report = video_report(&original, &reconstructed, &read_encoded(&path)?).context("measuring")?;
                    serde_json::to_string_pretty(&report)?
                }
                None => serde_json::to_string_pretty(&distortion(&original, &reconstructed).context("measuring")?)?,
            };
            println!("{json}");
        }
        Command::Sweep { input, lambdas, delta, output, no_timing } => {
            let video = read_video(&input.input, &input.geometry)?;
            let rows = with_threads(|mode| {
                rate_distortion_sweep(&video, &lambdas, &SweepOptions { delta, mode, timed: !no_timing })
            })?
            .context("sweeping")?;
            write_text_or_stdout(output.as_deref(), &sweep_csv(&rows))?;
        }
        Command::Mask { input, fit, frame, output } => {
            let config = fit.config()?;
            let video = read_video(&input.input, &input.geometry)?;
            if frame >= video.frame_count() {
                bail!("frame {frame} out of range: input has {} frames", video.frame_count());
            }
            let encoded = with_threads(|mode| encode_video_with(&video, &config, mode))?.context("encoding")?;
            let masked = keypixel_mask_frame(&video, &encoded, frame).context("rendering mask")?;
            write_file(&output, &write_pnm(&masked)?)?;
        }
        Command::Bma { input, method, block, range, output, frames_dir } => {
            let video = read_video(&input.input, &input.geometry)?;
            if video.channels() != 1 {
                bail!("block matching needs single-channel input");
            }
            let config = BmaConfig { block_size: block, search_range: range };
            if let Some(dir) = &frames_dir {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            let mut csv = String::from("frame,mse,psnr_db\n");
            for (index, pair) in video.frames().windows(2).enumerate() {
                let (reference, current) = (&pair[0], &pair[1]);
                let field = match method {
                    Method::Full => full_search(reference, current, &config),
                    Method::Ds => diamond_search(reference, current, &config),
                }
                .with_context(|| format!("motion search for frame {}", index + 1))?;
                let predicted = reconstruct(reference, &field)?;
                let mse = frame_mse(current, &predicted)?;
                csv.push_str(&format!("{},{mse:.6},{}\n", index + 1, format_db(psnr(mse)?, 4)));
                if let Some(dir) = &frames_dir {
                    write_file(&dir.join(format!("bma_{:04}.pgm", index + 1)), &write_pnm(&predicted)?)?;
                }
            }
            write_text_or_stdout(output.as_deref(), &csv)?;
        }
        Command::Synth { output, width, height, frames, channels, noise, seed } => {
            let clip = SyntheticClip { width, height, frames, channels, noise, seed }.generate()?;
            let bytes = if channels == 1 { write_y4m(&clip)? } else { write_raw(&clip) };
            write_file(&output, &bytes)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
