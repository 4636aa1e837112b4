//! Dynamic jump flooding for moving seeds.
//!
//! When seeds move at most `d_max` pixels per time step, consecutive
//! diagrams are nearly identical, so rebuilding each one from scratch
//! wastes waves. The dynamic variant keeps the previous grid's claims as
//! the starting state and shrinks the initial jump to cover only what can
//! actually have changed: twice the expected region length for the current
//! seed density, or the motion bound, whichever is larger. Denser seed sets
//! therefore run fewer waves, and a sparse set degrades gracefully to the
//! static schedule.

use crate::flooding::{halving_steps, static_initial_jump, wave, WaveSchedule};
use crate::grid::{stamp_into, VoronoiGrid, EMPTY};
use crate::scalar::Real;
use crate::{DistanceMetric, Error, Neighborhood, Result, SeedSet};

/// Von Neumann opening waves used unless configured otherwise.
pub const DEFAULT_VN_PHASE_WAVES: u8 = 2;

const MAX_VN_PHASE_WAVES: u8 = 2;

/// Tuning knobs for one dynamic run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DjfaParams {
    /// Maximum per-step, per-axis seed displacement in pixels (at least 1).
    pub d_max: u32,
    /// Distance function for every wave of this run.
    pub metric: DistanceMetric,
    /// How many opening waves explore only the 4 axis-aligned neighbors
    /// (0-2). Early waves mostly land out of bounds or on non-final claims;
    /// later waves stay Moore to keep the diagram well formed.
    pub vn_phase_waves: u8,
    /// Jump-1 Moore repair rounds appended at the end (0-2).
    pub extra_rounds: u8,
}

impl DjfaParams {
    /// Parameters with the default phase policy (2 Von Neumann opening
    /// waves, 1 repair round).
    pub fn new(d_max: u32, metric: DistanceMetric) -> Self {
        Self {
            d_max,
            metric,
            vn_phase_waves: DEFAULT_VN_PHASE_WAVES,
            extra_rounds: crate::flooding::DEFAULT_EXTRA_ROUNDS,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.d_max < 1 {
            return Err(Error::ZeroDisplacementBound);
        }
        if self.vn_phase_waves > MAX_VN_PHASE_WAVES {
            return Err(Error::VnWavesOutOfRange {
                value: self.vn_phase_waves,
            });
        }
        Ok(())
    }
}

/// Expected region length for `s` uniform seeds on an `n x n` grid:
/// `sqrt(n^2 / s)`.
pub fn avg_region_length<R: Real>(n: u32, s: u32) -> Result<R> {
    if s == 0 {
        return Err(Error::EmptySeedSet);
    }
    if n < 2 {
        return Err(Error::GridTooSmall { n, min: 2 });
    }
    let n = R::from_u32(n).expect("grid side fits any Real");
    let s = R::from_u32(s).expect("seed count fits any Real");
    Ok((n * n / s).sqrt())
}

/// The dynamic wave schedule for `s` seeds on an `n x n` grid.
///
/// The initial jump is the smallest power of two covering
/// `max(2 * avg_region_length, d_max)`, capped at the static schedule's
/// initial jump so a sparse set never does more work than plain jump
/// flooding. Steps halve down to 1; the first `vn_phase_waves` run Von
/// Neumann, the rest Moore.
pub fn djfa_schedule(n: u32, s: u32, params: &DjfaParams) -> Result<WaveSchedule> {
    params.validate()?;
    let l_avg: f64 = avg_region_length(n, s)?;
    let bound = (2.0 * l_avg).max(params.d_max as f64);
    let cap = static_initial_jump(n)?;
    let mut first: u32 = 1;
    while (first as f64) < bound && first < cap {
        first *= 2;
    }
    let steps = halving_steps(first);
    let vn = (params.vn_phase_waves as usize).min(steps.len());
    let phases = (0..steps.len())
        .map(|i| {
            if i < vn {
                Neighborhood::VonNeumann
            } else {
                Neighborhood::Moore
            }
        })
        .collect();
    WaveSchedule::new(steps, phases, params.extra_rounds)
}

/// Advances the diagram one simulation step.
///
/// `prev` is the complete grid of the previous step; `seeds` hold the
/// current (post-move) positions. Each seed's current pixel is re-stamped
/// with its own id on top of the previous claims, then the dynamic schedule
/// runs. Claims are ids, so every distance is evaluated against the current
/// position of the claimed seed, and the stale claims left behind by
/// movement act as propagation sources with up-to-date distances.
///
/// The seed count must not change between steps. A shrink shows up as a
/// stale claim and is rejected; growing the set is indistinguishable from
/// co-located seeds and is the caller's contract to avoid.
pub fn run_djfa_step(
    prev: &VoronoiGrid,
    seeds: &SeedSet,
    params: &DjfaParams,
) -> Result<(VoronoiGrid, u32)> {
    if prev.n() != seeds.n() {
        return Err(Error::DimensionMismatch {
            left: prev.n(),
            right: seeds.n(),
        });
    }
    if !prev.is_complete() {
        return Err(Error::IncompleteGrid);
    }
    if let Some(max) = prev.max_seed_id() {
        if max >= seeds.len() {
            return Err(Error::StaleClaim {
                id: max,
                seed_count: seeds.len(),
            });
        }
    }
    let schedule = djfa_schedule(seeds.n(), seeds.len(), params)?;
    let positions = seeds.positions();
    let mut cur = prev.claims().to_vec();
    stamp_into(seeds, &mut cur);
    let mut next = vec![EMPTY; cur.len()];
    let mut waves = 0u32;
    for (k, nb) in schedule.waves() {
        wave(&cur, &mut next, &positions, seeds.n(), k, nb, params.metric);
        std::mem::swap(&mut cur, &mut next);
        waves += 1;
    }
    let grid = VoronoiGrid::from_claims_unchecked(seeds.n(), cur);
    debug_assert!(grid.is_complete());
    Ok((grid, waves))
}
