//! Rate and distortion measures: stream entropy, MSE and PSNR.

use serde::{Serialize, Serializer};

use crate::codec::{EncodedVideo, SymbolStream, SENTINEL};
use crate::error::{Error, Result};
use crate::video::{Frame, VideoSequence};

/// Number of distinct symbols: 256 sample values plus the sentinel.
pub const SYMBOL_COUNT: usize = SENTINEL as usize + 1;

const PEAK_SQUARED: f64 = 255.0 * 255.0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolHistogram {
    counts: Vec<u64>,
    total: u64,
}

impl Default for SymbolHistogram {
    fn default() -> Self {
        Self { counts: vec![0; SYMBOL_COUNT], total: 0 }
    }
}

impl SymbolHistogram {
    pub fn from_symbols(symbols: &[u16]) -> Result<Self> {
        let mut hist = Self::default();
        for &s in symbols {
            hist.add(s, 1)?;
        }
        Ok(hist)
    }

    pub fn from_stream(stream: &SymbolStream) -> Self {
        Self::from_symbols(&stream.symbols).expect("codec streams only hold valid symbols")
    }

    /// Histogram of the sentinel stream of `encoded`, without building it.
    pub fn from_encoded(encoded: &EncodedVideo) -> Self {
        let mut hist = Self::default();
        let mut kept = 0u64;
        for frame in &encoded.frames {
            for &v in &frame.values {
                hist.counts[usize::from(v)] += 1;
            }
            kept += frame.values.len() as u64;
        }
        let positions =
            encoded.frames.len() as u64 * encoded.header.pixel_count() as u64 * u64::from(encoded.header.channels);
        hist.counts[usize::from(SENTINEL)] = positions - kept;
        hist.total = positions;
        hist
    }

    pub fn add(&mut self, symbol: u16, count: u64) -> Result<()> {
        let slot = self
            .counts
            .get_mut(usize::from(symbol))
            .ok_or_else(|| Error::invalid(format!("symbol {symbol} outside 0..={SENTINEL}")))?;
        *slot += count;
        self.total += count;
        Ok(())
    }

    pub fn count(&self, symbol: u16) -> u64 {
        self.counts.get(usize::from(symbol)).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn probabilities(&self) -> impl Iterator<Item = f64> + '_ {
        let total = self.total as f64;
        self.counts.iter().map(move |&c| c as f64 / total)
    }
}

/// Shannon entropy in bits per symbol.
pub fn entropy(hist: &SymbolHistogram) -> Result<f64> {
    if hist.total == 0 {
        return Err(Error::invalid("entropy of an empty histogram"));
    }
    let h: f64 = hist.probabilities().filter(|&p| p > 0.0).map(|p| -p * p.log2()).sum();
    // A single-symbol source sums to -0.0.
    Ok(h.max(0.0))
}

/// Mean over pixels of the squared Euclidean distance across channels.
pub fn frame_mse(original: &Frame, reconstructed: &Frame) -> Result<f64> {
    if !original.same_geometry(reconstructed) {
        return Err(Error::invalid(format!(
            "frame geometry {}x{}x{} vs {}x{}x{}",
            original.width(),
            original.height(),
            original.channels(),
            reconstructed.width(),
            reconstructed.height(),
            reconstructed.channels()
        )));
    }
    let sse: u64 = original
        .data()
        .iter()
        .zip(reconstructed.data())
        .map(|(&a, &b)| {
            let d = i64::from(a) - i64::from(b);
            (d * d) as u64
        })
        .sum();
    Ok(sse as f64 / original.pixel_count() as f64)
}

/// Peak signal-to-noise ratio in dB for 8-bit samples. Zero error gives
/// positive infinity.
pub fn psnr(mse: f64) -> Result<f64> {
    if mse.is_nan() || mse < 0.0 {
        return Err(Error::invalid(format!("mse must be non-negative, got {mse}")));
    }
    if mse == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (PEAK_SQUARED / mse).log10())
}

/// Non-finite values become the tokens `"inf"`, `"-inf"` or `"nan"`.
pub fn serialize_db<S: Serializer>(value: &f64, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    if value.is_finite() {
        serializer.serialize_f64(*value)
    } else {
        serializer.serialize_str(&format_db(*value, 0))
    }
}

fn serialize_db_seq<S: Serializer>(values: &[f64], serializer: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        if v.is_finite() {
            seq.serialize_element(v)?;
        } else {
            seq.serialize_element(&format_db(*v, 0))?;
        }
    }
    seq.end()
}

/// Fixed-precision text with `inf` for infinite values.
pub fn format_db(value: f64, decimals: usize) -> String {
    if value.is_nan() {
        "nan".to_string()
    } else if value == f64::INFINITY {
        "inf".to_string()
    } else if value == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{value:.decimals$}")
    }
}

/// Per-frame and aggregate distortion of a reconstruction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Distortion {
    pub per_frame_mse: Vec<f64>,
    pub aggregate_mse: f64,
    #[serde(serialize_with = "serialize_db_seq")]
    pub per_frame_psnr_db: Vec<f64>,
    #[serde(serialize_with = "serialize_db")]
    pub aggregate_psnr_db: f64,
}

/// Aggregate PSNR is taken from the mean of the per-frame MSEs.
pub fn distortion(original: &VideoSequence, reconstructed: &VideoSequence) -> Result<Distortion> {
    if !original.same_geometry(reconstructed) {
        return Err(Error::invalid(format!(
            "video geometry {}x{}x{}x{} vs {}x{}x{}x{}",
            original.width(),
            original.height(),
            original.channels(),
            original.frame_count(),
            reconstructed.width(),
            reconstructed.height(),
            reconstructed.channels(),
            reconstructed.frame_count()
        )));
    }
    let per_frame_mse = original
        .frames()
        .iter()
        .zip(reconstructed.frames())
        .map(|(a, b)| frame_mse(a, b))
        .collect::<Result<Vec<_>>>()?;
    let per_frame_psnr_db = per_frame_mse.iter().map(|&m| psnr(m)).collect::<Result<Vec<_>>>()?;
    let aggregate_mse = per_frame_mse.iter().sum::<f64>() / per_frame_mse.len() as f64;
    Ok(Distortion { aggregate_psnr_db: psnr(aggregate_mse)?, per_frame_mse, aggregate_mse, per_frame_psnr_db })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricsReport {
    pub entropy_bpp: f64,
    #[serde(flatten)]
    pub distortion: Distortion,
    pub keypixel_fraction: f64,
}

pub fn video_report(
    original: &VideoSequence,
    reconstructed: &VideoSequence,
    encoded: &EncodedVideo,
) -> Result<MetricsReport> {
    let h = &encoded.header;
    if original.width() != h.width as usize
        || original.height() != h.height as usize
        || original.channels() != h.channels as usize
        || original.frame_count() != encoded.frames.len()
    {
        return Err(Error::invalid("encoding geometry differs from the original video"));
    }
    let distortion = distortion(original, reconstructed)?;
    Ok(MetricsReport {
        entropy_bpp: entropy(&SymbolHistogram::from_encoded(encoded))?,
        distortion,
        keypixel_fraction: encoded.keypixel_fraction(),
    })
}
