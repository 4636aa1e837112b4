//! Uniform random seed motion.
//!
//! Every draw is keyed by `(rng_seed, domain, step, seed id, axis)` and
//! hashed through a splitmix64 finalizer chain, so a displacement is a pure
//! function of those inputs. Trajectories are reproducible on any platform,
//! independent of iteration order, and individual seeds can be replayed in
//! isolation.

use crate::{Error, Result, Seed, SeedSet};

/// Motion model: each axis moves by a uniform integer in `[-d_max, d_max]`
/// per step, clamped to the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MotionConfig {
    pub d_max: u32,
    pub rng_seed: u64,
}

const DOMAIN_INIT: u64 = 0x5eed_0000_0000_0001;
const DOMAIN_MOVE: u64 = 0x5eed_0000_0000_0002;

fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn draw(rng_seed: u64, domain: u64, step: u64, id: u64, axis: u64) -> u64 {
    let mut h = mix64(rng_seed ^ domain);
    h = mix64(h ^ step);
    h = mix64(h ^ id);
    h = mix64(h ^ axis);
    h
}

/// Maps a hash to `[0, bound)` by the multiply-shift reduction.
fn uniform_below(h: u64, bound: u64) -> u64 {
    debug_assert!(bound >= 1);
    ((h as u128 * bound as u128) >> 64) as u64
}

/// `s` seeds drawn independently and uniformly over the grid.
///
/// Identical `(n, s, rng_seed)` produce identical sets everywhere.
pub fn init_uniform_seeds(n: u32, s: u32, rng_seed: u64) -> Result<SeedSet> {
    crate::seed::check_side(n)?;
    if s == 0 {
        return Err(Error::EmptySeedSet);
    }
    let capacity = (n as u64) * (n as u64);
    if s as u64 > capacity {
        return Err(Error::TooManySeeds {
            count: s as u64,
            capacity,
        });
    }
    let positions = (0..s).map(|id| {
        let x = uniform_below(draw(rng_seed, DOMAIN_INIT, 0, id as u64, 0), n as u64);
        let y = uniform_below(draw(rng_seed, DOMAIN_INIT, 0, id as u64, 1), n as u64);
        (x as i32, y as i32)
    });
    SeedSet::from_positions(n, positions)
}

/// One motion step: every seed's axes move independently by a uniform
/// integer in `[-d_max, d_max]`, clamped to `[0, n - 1]`.
///
/// Clamping (rather than wrapping) keeps each seed's true displacement
/// within the bound the dynamic schedule is derived from; a wrapped seed
/// would teleport across the grid and invalidate it.
pub fn move_seeds(seeds: &SeedSet, cfg: &MotionConfig, step_index: u32) -> SeedSet {
    let n = seeds.n();
    let span = 2 * cfg.d_max as u64 + 1;
    let d_max = cfg.d_max as i64;
    let max_coord = n as i64 - 1;
    let moved = seeds
        .seeds()
        .iter()
        .map(|seed| {
            let dx = uniform_below(
                draw(
                    cfg.rng_seed,
                    DOMAIN_MOVE,
                    step_index as u64,
                    seed.id as u64,
                    0,
                ),
                span,
            ) as i64
                - d_max;
            let dy = uniform_below(
                draw(
                    cfg.rng_seed,
                    DOMAIN_MOVE,
                    step_index as u64,
                    seed.id as u64,
                    1,
                ),
                span,
            ) as i64
                - d_max;
            let x = (seed.x as i64 + dx).clamp(0, max_coord) as i32;
            let y = (seed.y as i64 + dy).clamp(0, max_coord) as i32;
            Seed { id: seed.id, x, y }
        })
        .collect();
    SeedSet::new(n, moved).expect("clamped positions satisfy the seed invariants")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn init_fills_the_grid_bounds() {
        let set = init_uniform_seeds(4, 16, 99).unwrap();
        assert_eq!(set.len(), 16);
        for seed in set.seeds() {
            assert!((0..4).contains(&seed.x) && (0..4).contains(&seed.y));
        }
    }

    #[test]
    fn init_is_deterministic() {
        let a = init_uniform_seeds(100, 40, 1234).unwrap();
        let b = init_uniform_seeds(100, 40, 1234).unwrap();
        assert_eq!(a, b);
        let c = init_uniform_seeds(100, 40, 1235).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn init_rejects_overfull_and_empty() {
        assert!(matches!(
            init_uniform_seeds(4, 17, 0),
            Err(Error::TooManySeeds { .. })
        ));
        assert_eq!(init_uniform_seeds(4, 0, 0), Err(Error::EmptySeedSet));
    }

    #[test]
    fn zero_bound_is_identity() {
        let set = init_uniform_seeds(32, 10, 5).unwrap();
        let cfg = MotionConfig {
            d_max: 0,
            rng_seed: 5,
        };
        assert_eq!(move_seeds(&set, &cfg, 3), set);
    }

    #[test]
    fn corner_seed_stays_clamped() {
        let set = SeedSet::from_positions(8, vec![(0, 0)]).unwrap();
        let cfg = MotionConfig {
            d_max: 5,
            rng_seed: 11,
        };
        for step in 0..50 {
            let moved = move_seeds(&set, &cfg, step);
            let (x, y) = moved.position(0);
            assert!((0..8).contains(&x) && (0..8).contains(&y));
        }
    }

    #[test]
    fn displacement_respects_the_bound() {
        let mut set = init_uniform_seeds(64, 20, 77).unwrap();
        let cfg = MotionConfig {
            d_max: 3,
            rng_seed: 77,
        };
        for step in 1..=20 {
            let moved = move_seeds(&set, &cfg, step);
            for (before, after) in set.seeds().iter().zip(moved.seeds()) {
                assert!((before.x - after.x).abs() <= 3);
                assert!((before.y - after.y).abs() <= 3);
            }
            set = moved;
        }
    }

    #[test]
    fn trajectories_are_a_pure_function_of_the_config() {
        let cfg = MotionConfig {
            d_max: 2,
            rng_seed: 400,
        };
        let run = || {
            let mut set = init_uniform_seeds(50, 12, cfg.rng_seed).unwrap();
            for step in 1..=10 {
                set = move_seeds(&set, &cfg, step);
            }
            set
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn steps_draw_differently() {
        let set = init_uniform_seeds(1000, 200, 8).unwrap();
        let cfg = MotionConfig {
            d_max: 4,
            rng_seed: 8,
        };
        let a = move_seeds(&set, &cfg, 1);
        let b = move_seeds(&set, &cfg, 2);
        assert_ne!(a, b);
    }
}
