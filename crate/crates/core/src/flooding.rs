//! Static diagram construction: standard flooding, jump flooding, and the
//! exact per-pixel scan used as ground truth.
//!
//! Every wave is a gather over a double buffer: each output pixel reads its
//! own previous claim and the previous claims of its neighbors at the wave's
//! jump distance, and keeps whichever seed is closest (lower id on ties,
//! EMPTY loses to anything). Because neighbor offsets are symmetric this
//! propagates exactly the same claims as a scatter formulation, but writes
//! each output pixel once, so any partitioning of pixels across threads
//! yields the sequential result.

use rayon::prelude::*;

use crate::grid::{stamp_seeds, Claim, VoronoiGrid, EMPTY};
use crate::metric::{CostFn, SquaredEuclidean, Taxicab};
use crate::seed::check_side;
use crate::{DistanceMetric, Error, Neighborhood, Result, SeedSet};

/// Repair rounds appended to jump flooding runs unless configured otherwise.
pub const DEFAULT_EXTRA_ROUNDS: u8 = 1;

const MAX_EXTRA_ROUNDS: u8 = 2;

/// The ordered jump sizes and neighborhood phases of one diagram build.
///
/// `steps` halve strictly down to 1; `extra_rounds` appends that many
/// additional jump-1 Moore passes to repair the occasional island error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaveSchedule {
    steps: Vec<u32>,
    phases: Vec<Neighborhood>,
    extra_rounds: u8,
}

impl WaveSchedule {
    pub fn new(steps: Vec<u32>, phases: Vec<Neighborhood>, extra_rounds: u8) -> Result<Self> {
        if extra_rounds > MAX_EXTRA_ROUNDS {
            return Err(Error::ExtraRoundsOutOfRange {
                value: extra_rounds,
            });
        }
        if steps.is_empty() {
            return Err(Error::MalformedSchedule("schedule has no steps"));
        }
        if phases.len() != steps.len() {
            return Err(Error::MalformedSchedule("one phase per step required"));
        }
        if *steps.last().unwrap() != 1 {
            return Err(Error::MalformedSchedule("last jump must be 1"));
        }
        for pair in steps.windows(2) {
            if pair[0] != pair[1] * 2 {
                return Err(Error::MalformedSchedule("jumps must halve strictly"));
            }
        }
        Ok(Self {
            steps,
            phases,
            extra_rounds,
        })
    }

    pub fn steps(&self) -> &[u32] {
        &self.steps
    }

    pub fn phases(&self) -> &[Neighborhood] {
        &self.phases
    }

    pub fn extra_rounds(&self) -> u8 {
        self.extra_rounds
    }

    /// Total waves executed: scheduled steps plus repair rounds.
    pub fn wave_count(&self) -> u32 {
        self.steps.len() as u32 + self.extra_rounds as u32
    }

    /// Yields `(jump, neighborhood)` for every wave, repair rounds included.
    pub fn waves(&self) -> impl Iterator<Item = (u32, Neighborhood)> + '_ {
        self.steps
            .iter()
            .copied()
            .zip(self.phases.iter().copied())
            .chain(std::iter::repeat((1, Neighborhood::Moore)).take(self.extra_rounds as usize))
    }
}

/// The initial jump of a static run: the power of two in `[n/2, n)`.
pub(crate) fn static_initial_jump(n: u32) -> Result<u32> {
    if n < 2 {
        return Err(Error::GridTooSmall { n, min: 2 });
    }
    check_side(n)?;
    Ok(n.next_power_of_two() / 2)
}

pub(crate) fn halving_steps(first: u32) -> Vec<u32> {
    debug_assert!(first.is_power_of_two());
    let mut steps = Vec::with_capacity(first.trailing_zeros() as usize + 1);
    let mut k = first;
    loop {
        steps.push(k);
        if k == 1 {
            return steps;
        }
        k /= 2;
    }
}

/// The classic jump flooding schedule for an `n x n` grid, with the default
/// single repair round.
///
/// The first jump is `2^(ceil(log2 n) - 1)` and every later wave halves it,
/// so there are `ceil(log2 n)` scheduled waves, all Moore.
pub fn jfa_schedule(n: u32) -> Result<WaveSchedule> {
    jfa_schedule_with_extra_rounds(n, DEFAULT_EXTRA_ROUNDS)
}

/// Same as [`jfa_schedule`] with an explicit number of repair rounds (0-2).
pub fn jfa_schedule_with_extra_rounds(n: u32, extra_rounds: u8) -> Result<WaveSchedule> {
    let first = static_initial_jump(n)?;
    let steps = halving_steps(first);
    let phases = vec![Neighborhood::Moore; steps.len()];
    WaveSchedule::new(steps, phases, extra_rounds)
}

/// One flooding wave at jump `k`, returning a new grid.
///
/// Each output pixel keeps the closest of its own previous claim and the
/// previous claims of its in-bounds neighbors at distance `k`; the input
/// grid is left untouched.
pub fn flood_wave(
    current: &VoronoiGrid,
    seeds: &SeedSet,
    k: u32,
    nb: Neighborhood,
    metric: DistanceMetric,
) -> Result<VoronoiGrid> {
    if k < 1 {
        return Err(Error::ZeroJump);
    }
    check_grid_matches(current, seeds)?;
    let positions = seeds.positions();
    let mut dst = vec![EMPTY; current.claims().len()];
    wave(
        current.claims(),
        &mut dst,
        &positions,
        current.n(),
        k,
        nb,
        metric,
    );
    Ok(VoronoiGrid::from_claims_unchecked(current.n(), dst))
}

/// Stamps the seeds and runs every wave of `schedule`.
///
/// Returns the finished grid and the number of waves executed. This is the
/// piece a caller should put a timer around: schedule construction and any
/// metric bookkeeping stay outside.
pub fn run_schedule(
    seeds: &SeedSet,
    metric: DistanceMetric,
    schedule: &WaveSchedule,
) -> (VoronoiGrid, u32) {
    let n = seeds.n();
    let positions = seeds.positions();
    let mut cur = stamp_seeds(seeds).into_claims();
    let mut next = vec![EMPTY; cur.len()];
    let mut waves = 0u32;
    for (k, nb) in schedule.waves() {
        wave(&cur, &mut next, &positions, n, k, nb, metric);
        std::mem::swap(&mut cur, &mut next);
        waves += 1;
    }
    (VoronoiGrid::from_claims_unchecked(n, cur), waves)
}

/// Standard flooding: jump-1 Moore waves until a pass changes nothing.
///
/// The final no-change pass is counted, so a lone seed in the corner of an
/// `n x n` grid reports `n` waves: `n - 1` to flood the grid and one more to
/// detect the fixed point (claims near region borders can keep improving
/// after the grid is already complete, so completeness alone is not a
/// termination test).
pub fn run_stf(seeds: &SeedSet, metric: DistanceMetric) -> (VoronoiGrid, u32) {
    let n = seeds.n();
    let positions = seeds.positions();
    let mut cur = stamp_seeds(seeds).into_claims();
    let mut next = vec![EMPTY; cur.len()];
    let mut waves = 0u32;
    loop {
        let changed = wave(
            &cur,
            &mut next,
            &positions,
            n,
            1,
            Neighborhood::Moore,
            metric,
        );
        std::mem::swap(&mut cur, &mut next);
        waves += 1;
        if !changed {
            break;
        }
    }
    let grid = VoronoiGrid::from_claims_unchecked(n, cur);
    debug_assert!(grid.is_complete());
    (grid, waves)
}

/// Jump flooding: the halving schedule plus `extra_rounds` repair passes.
///
/// Returns the completed grid and the wave count,
/// `ceil(log2 n) + extra_rounds`.
pub fn run_jfa(
    seeds: &SeedSet,
    metric: DistanceMetric,
    extra_rounds: u8,
) -> Result<(VoronoiGrid, u32)> {
    let schedule = jfa_schedule_with_extra_rounds(seeds.n(), extra_rounds)?;
    let (grid, waves) = run_schedule(seeds, metric, &schedule);
    debug_assert!(grid.is_complete());
    Ok((grid, waves))
}

/// Ground truth: every pixel scans all seeds and keeps the minimizer.
///
/// O(n^2 s), for verification and small grids only.
pub fn run_exact(seeds: &SeedSet, metric: DistanceMetric) -> VoronoiGrid {
    let n = seeds.n();
    let positions = seeds.positions();
    let mut claims = vec![EMPTY; (n as usize) * (n as usize)];
    claims
        .par_chunks_mut(n as usize)
        .enumerate()
        .for_each(|(y, row)| {
            let y = y as i32;
            for x in 0..n as i32 {
                let q = (x, y);
                let mut best = (u64::MAX, u32::MAX);
                for (id, &p) in positions.iter().enumerate() {
                    let cand = (metric.cost(p, q), id as u32);
                    if cand < best {
                        best = cand;
                    }
                }
                row[x as usize] = Claim::from_raw(best.1);
            }
        });
    VoronoiGrid::from_claims_unchecked(n, claims)
}

pub(crate) fn check_grid_matches(grid: &VoronoiGrid, seeds: &SeedSet) -> Result<()> {
    if grid.n() != seeds.n() {
        return Err(Error::DimensionMismatch {
            left: grid.n(),
            right: seeds.n(),
        });
    }
    if let Some(max) = grid.max_seed_id() {
        if max >= seeds.len() {
            return Err(Error::StaleClaim {
                id: max,
                seed_count: seeds.len(),
            });
        }
    }
    Ok(())
}

/// Runs one gather wave from `src` into `dst`, returning whether any pixel
/// changed. Claims are compared by `(cost to the seed's current position,
/// seed id)`, with EMPTY ranking worst.
pub(crate) fn wave(
    src: &[Claim],
    dst: &mut [Claim],
    positions: &[(i32, i32)],
    n: u32,
    k: u32,
    nb: Neighborhood,
    metric: DistanceMetric,
) -> bool {
    match metric {
        DistanceMetric::Euclidean => wave_kernel::<SquaredEuclidean>(src, dst, positions, n, k, nb),
        DistanceMetric::Manhattan => wave_kernel::<Taxicab>(src, dst, positions, n, k, nb),
    }
}

#[inline(always)]
fn rank<C: CostFn>(claim: Claim, positions: &[(i32, i32)], q: (i32, i32)) -> (u64, u32) {
    match claim.seed_id() {
        Some(id) => (C::cost(positions[id as usize], q), id),
        None => (u64::MAX, u32::MAX),
    }
}

fn wave_kernel<C: CostFn>(
    src: &[Claim],
    dst: &mut [Claim],
    positions: &[(i32, i32)],
    n: u32,
    k: u32,
    nb: Neighborhood,
) -> bool {
    debug_assert_eq!(src.len(), dst.len());
    debug_assert_eq!(src.len(), (n as usize) * (n as usize));
    debug_assert!(k >= 1);

    let units = nb.unit_offsets();
    let mut offsets = [(0i32, 0i32); 8];
    for (slot, &(ux, uy)) in offsets.iter_mut().zip(units) {
        *slot = (ux * k as i32, uy * k as i32);
    }
    let offsets = &offsets[..units.len()];
    let n = n as i32;

    dst.par_chunks_mut(n as usize)
        .enumerate()
        .map(|(y, row)| {
            let y = y as i32;
            let mut row_changed = false;
            for x in 0..n {
                let q = (x, y);
                let own = src[(y * n + x) as usize];
                let mut best = rank::<C>(own, positions, q);
                for &(dx, dy) in offsets {
                    let nx = x + dx;
                    let ny = y + dy;
                    if nx < 0 || ny < 0 || nx >= n || ny >= n {
                        continue;
                    }
                    let cand = rank::<C>(src[(ny * n + nx) as usize], positions, q);
                    if cand < best {
                        best = cand;
                    }
                }
                let winner = Claim::from_raw(best.1);
                row_changed |= winner != own;
                row[x as usize] = winner;
            }
            row_changed
        })
        .reduce(|| false, |a, b| a || b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::stamp_seeds;

    fn seeds(n: u32, positions: &[(i32, i32)]) -> SeedSet {
        SeedSet::from_positions(n, positions.to_vec()).unwrap()
    }

    #[test]
    fn jfa_schedule_for_8() {
        let schedule = jfa_schedule_with_extra_rounds(8, 0).unwrap();
        assert_eq!(schedule.steps(), &[4, 2, 1]);
        assert!(schedule.phases().iter().all(|&p| p == Neighborhood::Moore));
        assert_eq!(schedule.wave_count(), 3);
    }

    #[test]
    fn jfa_schedule_default_adds_one_repair_round() {
        let schedule = jfa_schedule(8).unwrap();
        assert_eq!(schedule.steps(), &[4, 2, 1]);
        assert_eq!(schedule.extra_rounds(), DEFAULT_EXTRA_ROUNDS);
        assert_eq!(schedule.wave_count(), 4);
        let waves: Vec<_> = schedule.waves().collect();
        assert_eq!(waves.last(), Some(&(1, Neighborhood::Moore)));
        assert_eq!(waves.len(), 4);
    }

    #[test]
    fn jfa_schedule_for_1024_and_1000() {
        for n in [1000, 1024] {
            let schedule = jfa_schedule_with_extra_rounds(n, 0).unwrap();
            assert_eq!(schedule.steps()[0], 512);
            assert_eq!(schedule.steps().len(), 10);
        }
    }

    #[test]
    fn jfa_schedule_rejects_tiny_grids() {
        assert!(matches!(jfa_schedule(1), Err(Error::GridTooSmall { .. })));
        assert!(matches!(jfa_schedule(0), Err(Error::GridTooSmall { .. })));
    }

    #[test]
    fn schedule_length_is_ceil_log2() {
        for n in 2..=1030u32 {
            let schedule = jfa_schedule_with_extra_rounds(n, 0).unwrap();
            let ceil_log2 = (n.next_power_of_two()).trailing_zeros();
            assert_eq!(schedule.steps().len() as u32, ceil_log2, "n={n}");
        }
    }

    #[test]
    fn malformed_schedules_are_rejected() {
        let moore = |len: usize| vec![Neighborhood::Moore; len];
        assert!(WaveSchedule::new(vec![], vec![], 0).is_err());
        assert!(WaveSchedule::new(vec![4, 2], moore(2), 0).is_err());
        assert!(WaveSchedule::new(vec![4, 1], moore(2), 0).is_err());
        assert!(WaveSchedule::new(vec![4, 2, 1], moore(2), 0).is_err());
        assert!(WaveSchedule::new(vec![4, 2, 1], moore(3), 3).is_err());
        assert!(WaveSchedule::new(vec![4, 2, 1], moore(3), 2).is_ok());
    }

    #[test]
    fn first_wave_claims_a_3x3_block() {
        let set = seeds(5, &[(2, 2)]);
        let stamped = stamp_seeds(&set);
        let after = flood_wave(
            &stamped,
            &set,
            1,
            Neighborhood::Moore,
            DistanceMetric::Euclidean,
        )
        .unwrap();
        let claimed: Vec<(u32, u32)> = (0..5)
            .flat_map(|y| (0..5).map(move |x| (x, y)))
            .filter(|&(x, y)| !after.claim_at(x, y).is_empty())
            .collect();
        assert_eq!(claimed.len(), 9);
        for (x, y) in claimed {
            assert!((1..=3).contains(&x) && (1..=3).contains(&y));
        }
        // double-buffered: the input still only has the stamped pixel
        assert_eq!(stamped.claims().iter().filter(|c| !c.is_empty()).count(), 1);
    }

    #[test]
    fn fully_claimed_grid_is_a_fixed_point() {
        let set = seeds(6, &[(3, 3)]);
        let full = run_exact(&set, DistanceMetric::Euclidean);
        for k in [1, 2, 4] {
            let next = flood_wave(
                &full,
                &set,
                k,
                Neighborhood::Moore,
                DistanceMetric::Euclidean,
            )
            .unwrap();
            assert_eq!(next, full);
        }
    }

    #[test]
    fn flood_wave_validates_inputs() {
        let set = seeds(4, &[(0, 0)]);
        let grid = stamp_seeds(&set);
        assert_eq!(
            flood_wave(
                &grid,
                &set,
                0,
                Neighborhood::Moore,
                DistanceMetric::Euclidean
            ),
            Err(Error::ZeroJump)
        );
        let other = seeds(5, &[(0, 0)]);
        assert!(matches!(
            flood_wave(
                &grid,
                &other,
                1,
                Neighborhood::Moore,
                DistanceMetric::Euclidean
            ),
            Err(Error::DimensionMismatch { .. })
        ));
        let two = seeds(4, &[(0, 0), (3, 3)]);
        let stale = stamp_seeds(&two);
        assert!(matches!(
            flood_wave(
                &stale,
                &set,
                1,
                Neighborhood::Moore,
                DistanceMetric::Euclidean
            ),
            Err(Error::StaleClaim { .. })
        ));
    }

    #[test]
    fn stf_corner_seed_takes_n_waves() {
        // n - 1 waves to reach the far corner, one more to detect no change.
        for n in [4u32, 6, 9] {
            let set = seeds(n, &[(0, 0)]);
            let (grid, waves) = run_stf(&set, DistanceMetric::Euclidean);
            assert!(grid.is_complete());
            assert_eq!(waves, n);
        }
    }

    #[test]
    fn stf_center_seed_completes_in_five_waves_on_11x11() {
        let set = seeds(11, &[(5, 5)]);
        // five jump-1 waves flood the grid...
        let mut grid = stamp_seeds(&set);
        for _ in 0..5 {
            grid = flood_wave(
                &grid,
                &set,
                1,
                Neighborhood::Moore,
                DistanceMetric::Euclidean,
            )
            .unwrap();
        }
        assert!(grid.is_complete());
        // ...and the driver reports one extra wave for the no-change check.
        let (_, waves) = run_stf(&set, DistanceMetric::Euclidean);
        assert_eq!(waves, 6);
    }

    #[test]
    fn stf_on_single_pixel_grid() {
        let set = seeds(1, &[(0, 0)]);
        let (grid, waves) = run_stf(&set, DistanceMetric::Euclidean);
        assert!(grid.is_complete());
        assert_eq!(waves, 1);
    }

    #[test]
    fn jfa_wave_counts() {
        let set = seeds(8, &[(1, 1), (6, 5)]);
        let (grid, waves) = run_jfa(&set, DistanceMetric::Euclidean, 0).unwrap();
        assert!(grid.is_complete());
        assert_eq!(waves, 3);
        assert_eq!(
            jfa_schedule_with_extra_rounds(1024, 2)
                .unwrap()
                .wave_count(),
            12
        );
    }

    #[test]
    fn exact_single_seed_claims_everything() {
        let set = seeds(9, &[(4, 7)]);
        let grid = run_exact(&set, DistanceMetric::Euclidean);
        assert!(grid.claims().iter().all(|&c| c == Claim::seed(0)));
    }

    #[test]
    fn exact_two_seeds_split_with_tie_to_lower_id() {
        // seeds at (0, 3) and (6, 3) on a 7x7 grid: column 3 is equidistant
        let set = seeds(7, &[(0, 3), (6, 3)]);
        let grid = run_exact(&set, DistanceMetric::Euclidean);
        for y in 0..7 {
            for x in 0..7 {
                let expect = if x <= 3 { 0 } else { 1 };
                assert_eq!(grid.claim_at(x, y), Claim::seed(expect), "pixel ({x}, {y})");
            }
        }
    }
}
