//! Temporal video approximation by error-bounded linear Bézier fitting.
//!
//! Every pixel's intensity over time is replaced by a few keypixels joined
//! by straight lines, with each line's mean squared error held under a user
//! limit. The crate covers the fitting itself ([`trajectory`]), whole-video
//! encoding and the `LBF1` container ([`codec`]), quality and rate measures
//! ([`metrics`]), file formats ([`video_io`]), a block-matching comparison
//! baseline ([`bma`]) and rate-distortion sweeps ([`sweep`]).

pub mod bma;
pub mod codec;
mod error;
pub mod metrics;
pub mod sweep;
pub mod synth;
pub mod trajectory;
pub mod video;
pub mod video_io;

pub use codec::{decode_video, encode_video, encode_video_with, EncodeMode, EncodedVideo};
pub use error::{Error, Result};
pub use trajectory::{decode_trajectory, fit_trajectory, FitConfig, FitResult, Trajectory};
pub use video::{Frame, VideoSequence};
