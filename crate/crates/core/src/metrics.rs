//! Similarity, timing aggregation, and region statistics.

use std::collections::BTreeMap;

use crate::scalar::{real_from_f64, Real};
use crate::{Error, Result, VoronoiGrid};

/// One observation of one algorithm at one simulation step.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsRecord {
    pub step_index: u32,
    pub algorithm: String,
    pub wave_count: u32,
    /// Wall-clock seconds spent inside the diagram kernels (stamp + waves);
    /// motion and metric evaluation are never included.
    pub elapsed_seconds: f64,
    /// Percent of pixels matching the same-step baseline grid, when one
    /// applies to this algorithm.
    pub similarity_vs_baseline: Option<f64>,
}

/// Percentage of pixels with identical claims: `100 * matching / total`.
///
/// EMPTY matches only EMPTY. Symmetric, and 100 exactly for equal grids.
pub fn similarity<R: Real>(a: &VoronoiGrid, b: &VoronoiGrid) -> Result<R> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let matching = a
        .claims()
        .iter()
        .zip(b.claims())
        .filter(|(x, y)| x == y)
        .count();
    let total = a.claims().len();
    Ok(real_from_f64(100.0 * matching as f64 / total as f64))
}

/// Acceleration factor `t_base / t_new`. Both times must be positive.
pub fn speedup<R: Real>(t_base: R, t_new: R) -> Result<R> {
    if !(t_base > R::zero()) || !(t_new > R::zero()) {
        return Err(Error::NonPositiveTime);
    }
    Ok(t_base / t_new)
}

/// Pixels owned by each seed id, indexed by id up to the largest claimed
/// one. For a complete grid the counts sum to `n * n`.
pub fn region_pixel_counts(grid: &VoronoiGrid) -> Vec<u64> {
    let mut counts = match grid.max_seed_id() {
        Some(max) => vec![0u64; max as usize + 1],
        None => return Vec::new(),
    };
    for claim in grid.claims() {
        if let Some(id) = claim.seed_id() {
            counts[id as usize] += 1;
        }
    }
    counts
}

/// Region lengths of a complete grid, bucketed by a fixed bin width.
///
/// A region's length is `sqrt(area in pixels)`: the side of the square with
/// the region's area, the same scale as [`crate::djfa::avg_region_length`].
#[derive(Debug, Clone, PartialEq)]
pub struct RegionHistogram<R: Real> {
    bin_width: R,
    lengths: Vec<R>,
    bins: BTreeMap<u64, u32>,
}

impl<R: Real> RegionHistogram<R> {
    pub fn bin_width(&self) -> R {
        self.bin_width
    }

    /// One length per seed owning at least one pixel, in seed-id order.
    pub fn lengths(&self) -> &[R] {
        &self.lengths
    }

    /// Bin index -> number of regions whose length falls in
    /// `[index * bin_width, (index + 1) * bin_width)`.
    pub fn bins(&self) -> &BTreeMap<u64, u32> {
        &self.bins
    }

    /// Total regions counted; equals the number of seeds owning pixels.
    pub fn total_regions(&self) -> u32 {
        self.lengths.len() as u32
    }

    pub fn mean_length(&self) -> R {
        let sum = self.lengths.iter().fold(R::zero(), |acc, &l| acc + l);
        sum / real_from_f64(self.lengths.len() as f64)
    }
}

/// Builds the region-length histogram of a complete grid.
pub fn region_length_histogram<R: Real>(
    grid: &VoronoiGrid,
    bin_width: R,
) -> Result<RegionHistogram<R>> {
    if !grid.is_complete() {
        return Err(Error::IncompleteGrid);
    }
    if !(bin_width > R::zero()) || !bin_width.is_finite() {
        return Err(Error::InvalidBinWidth);
    }
    let mut lengths = Vec::new();
    let mut bins = BTreeMap::new();
    for &count in region_pixel_counts(grid).iter().filter(|&&c| c > 0) {
        let length = real_from_f64::<R>(count as f64).sqrt();
        lengths.push(length);
        let bin = (length / bin_width)
            .floor()
            .to_u64()
            .expect("length / bin_width is finite");
        *bins.entry(bin).or_insert(0) += 1;
    }
    Ok(RegionHistogram {
        bin_width,
        lengths,
        bins,
    })
}

/// Sums `elapsed_seconds` per algorithm tag.
///
/// Records only ever time the diagram kernels, so the totals exclude motion
/// and metric evaluation by construction.
pub fn cumulative_times(records: &[MetricsRecord]) -> BTreeMap<String, f64> {
    let mut totals: BTreeMap<String, f64> = BTreeMap::new();
    for record in records {
        *totals.entry(record.algorithm.clone()).or_insert(0.0) += record.elapsed_seconds;
    }
    totals
}
