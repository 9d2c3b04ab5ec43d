//! Block-matching motion estimation, the conventional temporal predictor
//! used as a comparison point.
//!
//! The current frame is cut into `block_size` squares (clipped at the right
//! and bottom edges). Each block is matched against displaced blocks of the
//! reference frame within `±search_range` pixels using mean absolute error.
//! Candidates that leave the reference frame are never considered.
//!
//! Ties between equal-cost candidates go to the smaller `|dx| + |dy|`, then
//! to the earlier candidate in `(dy, dx)` raster order.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::video::Frame;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BmaConfig {
    pub block_size: usize,
    pub search_range: usize,
}

impl Default for BmaConfig {
    fn default() -> Self {
        Self { block_size: 16, search_range: 7 }
    }
}

impl BmaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.block_size == 0 {
            return Err(Error::invalid("block size must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct MotionVector {
    pub dx: i32,
    pub dy: i32,
}

impl MotionVector {
    pub const ZERO: MotionVector = MotionVector { dx: 0, dy: 0 };

    pub fn new(dx: i32, dy: i32) -> Self {
        Self { dx, dy }
    }

    fn l1(self) -> u32 {
        self.dx.unsigned_abs() + self.dy.unsigned_abs()
    }
}

/// Best vector per block, in block raster order, with its MAE.
#[derive(Clone, Debug, PartialEq)]
pub struct MotionField {
    pub block_size: usize,
    pub cols: usize,
    pub rows: usize,
    pub vectors: Vec<MotionVector>,
    pub mae: Vec<f64>,
}

impl MotionField {
    pub fn vector(&self, col: usize, row: usize) -> MotionVector {
        self.vectors[row * self.cols + col]
    }
}

/// Rectangular single-channel block of samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub width: usize,
    pub height: usize,
    pub samples: Vec<u8>,
}

impl Block {
    pub fn new(width: usize, height: usize, samples: Vec<u8>) -> Result<Self> {
        if samples.len() != width * height {
            return Err(Error::invalid(format!("{width}x{height} block needs {} samples", width * height)));
        }
        Ok(Self { width, height, samples })
    }

    /// Copies the `width` x `height` region at (`x`, `y`) out of a
    /// single-channel frame.
    pub fn from_frame(frame: &Frame, x: usize, y: usize, width: usize, height: usize) -> Result<Self> {
        if frame.channels() != 1 || x + width > frame.width() || y + height > frame.height() {
            return Err(Error::invalid("block lies outside the frame"));
        }
        let samples = (y..y + height)
            .flat_map(|row| &frame.data()[row * frame.width() + x..row * frame.width() + x + width])
            .copied()
            .collect();
        Ok(Self { width, height, samples })
    }
}

pub fn block_mae(cur: &Block, candidate: &Block) -> Result<f64> {
    if cur.width != candidate.width || cur.height != candidate.height {
        return Err(Error::invalid(format!(
            "block shapes {}x{} and {}x{} differ",
            cur.width, cur.height, candidate.width, candidate.height
        )));
    }
    if cur.samples.is_empty() {
        return Err(Error::invalid("empty block"));
    }
    let sad: u64 = cur.samples.iter().zip(&candidate.samples).map(|(&a, &b)| u64::from(a.abs_diff(b))).sum();
    Ok(sad as f64 / cur.samples.len() as f64)
}

/// Geometry of one block of the grid.
#[derive(Clone, Copy, Debug)]
struct BlockRect {
    x: usize,
    y: usize,
    w: usize,
    h: usize,
}

struct Matcher<'a> {
    reference: &'a Frame,
    current: &'a Frame,
    range: i32,
}

impl Matcher<'_> {
    fn in_window(&self, rect: BlockRect, mv: MotionVector) -> bool {
        let x = rect.x as i64 + i64::from(mv.dx);
        let y = rect.y as i64 + i64::from(mv.dy);
        mv.dx.abs() <= self.range
            && mv.dy.abs() <= self.range
            && x >= 0
            && y >= 0
            && x + rect.w as i64 <= self.reference.width() as i64
            && y + rect.h as i64 <= self.reference.height() as i64
    }

    fn sad(&self, rect: BlockRect, mv: MotionVector) -> u64 {
        let stride = self.current.width();
        let rx = (rect.x as i64 + i64::from(mv.dx)) as usize;
        let ry = (rect.y as i64 + i64::from(mv.dy)) as usize;
        let (cur, refd) = (self.current.data(), self.reference.data());
        (0..rect.h)
            .map(|row| {
                let c = &cur[(rect.y + row) * stride + rect.x..][..rect.w];
                let r = &refd[(ry + row) * stride + rx..][..rect.w];
                c.iter().zip(r).map(|(&a, &b)| u64::from(a.abs_diff(b))).sum::<u64>()
            })
            .sum()
    }
}

/// Ordering key; smaller is better.
fn rank(sad: u64, mv: MotionVector) -> (u64, u32, i32, i32) {
    (sad, mv.l1(), mv.dy, mv.dx)
}

fn check_frames(reference: &Frame, current: &Frame, config: &BmaConfig) -> Result<()> {
    config.validate()?;
    if !reference.same_geometry(current) {
        return Err(Error::invalid("reference and current frames differ in geometry"));
    }
    if current.channels() != 1 {
        return Err(Error::invalid("block matching works on single-channel frames"));
    }
    Ok(())
}

fn block_grid(frame: &Frame, block_size: usize) -> (usize, usize, Vec<BlockRect>) {
    let cols = frame.width().div_ceil(block_size);
    let rows = frame.height().div_ceil(block_size);
    let mut rects = Vec::with_capacity(cols * rows);
    for by in 0..rows {
        for bx in 0..cols {
            let (x, y) = (bx * block_size, by * block_size);
            rects.push(BlockRect { x, y, w: block_size.min(frame.width() - x), h: block_size.min(frame.height() - y) });
        }
    }
    (cols, rows, rects)
}

fn estimate(
    reference: &Frame,
    current: &Frame,
    config: &BmaConfig,
    search: impl Fn(&Matcher, BlockRect) -> (MotionVector, u64),
) -> Result<MotionField> {
    check_frames(reference, current, config)?;
    let range = i32::try_from(config.search_range).map_err(|_| Error::invalid("search range too large"))?;
    let matcher = Matcher { reference, current, range };
    let (cols, rows, rects) = block_grid(current, config.block_size);
    let (vectors, mae) = rects
        .iter()
        .map(|&rect| {
            let (mv, sad) = search(&matcher, rect);
            (mv, sad as f64 / (rect.w * rect.h) as f64)
        })
        .unzip();
    Ok(MotionField { block_size: config.block_size, cols, rows, vectors, mae })
}

/// Exhaustive search over every in-bounds displacement within the window.
pub fn full_search(reference: &Frame, current: &Frame, config: &BmaConfig) -> Result<MotionField> {
    estimate(reference, current, config, |m, rect| {
        let mut best = (MotionVector::ZERO, m.sad(rect, MotionVector::ZERO));
        for dy in -m.range..=m.range {
            for dx in -m.range..=m.range {
                let mv = MotionVector::new(dx, dy);
                if !m.in_window(rect, mv) {
                    continue;
                }
                let sad = m.sad(rect, mv);
                if rank(sad, mv) < rank(best.1, best.0) {
                    best = (mv, sad);
                }
            }
        }
        best
    })
}

const LARGE_DIAMOND: [(i32, i32); 8] = [(0, -2), (-1, -1), (1, -1), (-2, 0), (2, 0), (-1, 1), (1, 1), (0, 2)];
const SMALL_DIAMOND: [(i32, i32); 4] = [(0, -1), (-1, 0), (1, 0), (0, 1)];

/// Diamond search: the large pattern is re-centred on its best point until
/// the centre wins, then the small pattern refines once.
pub fn diamond_search(reference: &Frame, current: &Frame, config: &BmaConfig) -> Result<MotionField> {
    estimate(reference, current, config, |m, rect| {
        let mut cache: HashMap<MotionVector, u64> = HashMap::new();
        let mut cost = |mv: MotionVector| *cache.entry(mv).or_insert_with(|| m.sad(rect, mv));

        let mut center = (MotionVector::ZERO, cost(MotionVector::ZERO));
        let best_around = |center: (MotionVector, u64), pattern: &[(i32, i32)], cost: &mut dyn FnMut(MotionVector) -> u64| {
            let mut best = center;
            for &(ox, oy) in pattern {
                let mv = MotionVector::new(center.0.dx + ox, center.0.dy + oy);
                if !m.in_window(rect, mv) {
                    continue;
                }
                let sad = cost(mv);
                if rank(sad, mv) < rank(best.1, best.0) {
                    best = (mv, sad);
                }
            }
            best
        };
        // Each move strictly lowers the rank key, so this terminates.
        loop {
            let next = best_around(center, &LARGE_DIAMOND, &mut cost);
            if next.0 == center.0 {
                break;
            }
            center = next;
        }
        best_around(center, &SMALL_DIAMOND, &mut cost)
    })
}

/// Prediction of the current frame: each block copied from `reference` at
/// its displaced position.
pub fn reconstruct(reference: &Frame, field: &MotionField) -> Result<Frame> {
    if reference.channels() != 1 || field.block_size == 0 {
        return Err(Error::invalid("reconstruction needs a single-channel frame and a non-empty block size"));
    }
    let (cols, rows, rects) = block_grid(reference, field.block_size);
    if cols != field.cols || rows != field.rows || field.vectors.len() != rects.len() {
        return Err(Error::invalid("motion field does not match the frame's block grid"));
    }
    let stride = reference.width();
    let mut out = vec![0u8; reference.data().len()];
    for (rect, mv) in rects.iter().zip(&field.vectors) {
        let sx = rect.x as i64 + i64::from(mv.dx);
        let sy = rect.y as i64 + i64::from(mv.dy);
        if sx < 0 || sy < 0 || sx as usize + rect.w > reference.width() || sy as usize + rect.h > reference.height() {
            return Err(Error::invalid(format!("vector ({}, {}) leaves the reference frame", mv.dx, mv.dy)));
        }
        let (sx, sy) = (sx as usize, sy as usize);
        for row in 0..rect.h {
            let src = &reference.data()[(sy + row) * stride + sx..][..rect.w];
            out[(rect.y + row) * stride + rect.x..][..rect.w].copy_from_slice(src);
        }
    }
    Frame::new(reference.width(), reference.height(), 1, out)
}
