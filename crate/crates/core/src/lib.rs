//! Rasterized Voronoi diagrams on a square pixel grid.
//!
//! A diagram is an `n x n` grid of per-pixel seed-id claims. Three families
//! of builders are provided:
//!
//! - [`flooding::run_stf`]: standard flooding, one Chebyshev ring per pass.
//! - [`flooding::run_jfa`]: jump flooding with halving jump sizes, plus the
//!   usual one or two repair rounds.
//! - [`djfa::run_djfa_step`]: a dynamic variant for moving seeds that reuses
//!   the previous time step's grid and starts from a jump size derived from
//!   seed density and the per-step motion bound, so it runs fewer waves.
//!
//! [`flooding::run_exact`] is the brute-force nearest-seed scan used as
//! ground truth. [`dynamics`] drives uniform random seed motion and
//! [`metrics`] measures similarity, timing and region statistics.
//!
//! Everywhere a pixel must choose between two equidistant seeds, the lower
//! seed id wins. All grid kernels compare distances through the exact
//! integer costs of [`DistanceMetric::cost`], so results are deterministic
//! and identical across platforms and thread counts.

mod error;
mod grid;
mod metric;
mod neighborhood;
mod scalar;
mod seed;

pub mod djfa;
pub mod dynamics;
pub mod flooding;
pub mod metrics;

pub use error::Error;
pub use grid::{stamp_seeds, Claim, SeedId, VoronoiGrid, EMPTY};
pub use metric::{distance, DistanceMetric};
pub use neighborhood::{neighbor_offsets, Neighborhood};
pub use scalar::Real;
pub use seed::{Seed, SeedSet};

/// Default scalar for real-valued results (distances, percentages, lengths).
///
/// The math in this crate is generic over [`Real`]; the harness and the
/// examples use this alias.
pub type Scalar = f64;

/// Convenience result type for fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;
