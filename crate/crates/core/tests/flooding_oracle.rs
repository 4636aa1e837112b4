//! Comparisons of the flooding builders against independent references: the
//! brute-force per-pixel scan, and a sequential scatter formulation of a
//! single wave.

use jumpflood::dynamics::init_uniform_seeds;
use jumpflood::flooding::{flood_wave, run_exact, run_jfa, run_stf};
use jumpflood::metrics::similarity;
use jumpflood::{
    neighbor_offsets, stamp_seeds, Claim, DistanceMetric, Neighborhood, SeedSet, VoronoiGrid, EMPTY,
};

#[test]
fn jfa_matches_the_exact_scan_on_small_instances() {
    let mut worst = 100.0f64;
    for n in [16u32, 32, 64] {
        for s in [2u32, 4, 8] {
            for rng_seed in 0..4 {
                let seeds = init_uniform_seeds(n, s, rng_seed).unwrap();
                let (jfa, _) = run_jfa(&seeds, DistanceMetric::Euclidean, 2).unwrap();
                let exact = run_exact(&seeds, DistanceMetric::Euclidean);
                let sim: f64 = similarity(&jfa, &exact).unwrap();
                worst = worst.min(sim);
            }
        }
    }
    assert!(worst >= 99.0, "worst-case similarity {worst}");
}

#[test]
fn two_seed_jfa_reproduces_the_half_plane_split() {
    for n in [8u32, 32] {
        for rng_seed in 0..8 {
            let seeds = init_uniform_seeds(n, 2, rng_seed).unwrap();
            let (jfa, _) = run_jfa(&seeds, DistanceMetric::Euclidean, 1).unwrap();
            let exact = run_exact(&seeds, DistanceMetric::Euclidean);
            let sim: f64 = similarity(&jfa, &exact).unwrap();
            assert_eq!(sim, 100.0, "n={n} rng_seed={rng_seed}");
        }
    }
}

#[test]
fn stf_equals_the_exact_scan_on_small_instances() {
    for n in [8u32, 16, 32, 64] {
        for s in [1u32, 2, 5, 8, 16] {
            for rng_seed in 0..4 {
                let seeds = init_uniform_seeds(n, s, rng_seed).unwrap();
                let (stf, _) = run_stf(&seeds, DistanceMetric::Euclidean);
                let exact = run_exact(&seeds, DistanceMetric::Euclidean);
                assert_eq!(stf, exact, "n={n} s={s} rng_seed={rng_seed}");
            }
        }
    }
}

#[test]
fn stf_matches_exact_under_manhattan_too() {
    for rng_seed in 0..4 {
        let seeds = init_uniform_seeds(24, 6, rng_seed).unwrap();
        let (stf, _) = run_stf(&seeds, DistanceMetric::Manhattan);
        let exact = run_exact(&seeds, DistanceMetric::Manhattan);
        assert_eq!(stf, exact, "rng_seed={rng_seed}");
    }
}

/// Sequential scatter reference for one wave: every pixel offers its previous
/// claim to each neighbor, which keeps the best offer seen so far (starting
/// from its own previous claim). Offsets are symmetric, so this must produce
/// exactly the gather result, in any visit order.
fn scatter_wave(
    src: &[Claim],
    seeds: &SeedSet,
    k: u32,
    nb: Neighborhood,
    metric: DistanceMetric,
) -> Vec<Claim> {
    let n = seeds.n() as i32;
    let positions = seeds.positions();
    let rank = |claim: Claim, q: (i32, i32)| -> (u64, u32) {
        match claim.seed_id() {
            Some(id) => (metric.cost(positions[id as usize], q), id),
            None => (u64::MAX, u32::MAX),
        }
    };
    let mut dst = src.to_vec();
    let offsets = neighbor_offsets(nb, k).unwrap();
    for py in 0..n {
        for px in 0..n {
            let offer = src[(py * n + px) as usize];
            for &(dx, dy) in &offsets {
                let qx = px + dx;
                let qy = py + dy;
                if qx < 0 || qy < 0 || qx >= n || qy >= n {
                    continue;
                }
                let q = (qx, qy);
                let idx = (qy * n + qx) as usize;
                if rank(offer, q) < rank(dst[idx], q) {
                    dst[idx] = offer;
                }
            }
        }
    }
    dst
}

#[test]
fn gather_and_scatter_waves_agree_on_8x8() {
    for rng_seed in 0..16u64 {
        let s = 1 + (rng_seed % 5) as u32;
        let seeds = init_uniform_seeds(8, s, rng_seed).unwrap();
        // exercise waves from several starting states, not just the stamp
        let mut state = stamp_seeds(&seeds);
        for (k, nb, metric) in [
            (4, Neighborhood::Moore, DistanceMetric::Euclidean),
            (2, Neighborhood::VonNeumann, DistanceMetric::Manhattan),
            (2, Neighborhood::Moore, DistanceMetric::Euclidean),
            (1, Neighborhood::VonNeumann, DistanceMetric::Euclidean),
            (1, Neighborhood::Moore, DistanceMetric::Manhattan),
        ] {
            let gathered = flood_wave(&state, &seeds, k, nb, metric).unwrap();
            let scattered = scatter_wave(state.claims(), &seeds, k, nb, metric);
            assert_eq!(
                gathered.claims(),
                &scattered[..],
                "rng_seed={rng_seed} k={k} {nb:?} {metric:?}"
            );
            state = gathered;
        }
    }
}

#[test]
fn monotone_progress_and_distance_non_increase_across_a_static_run() {
    for rng_seed in 0..8u64 {
        let seeds = init_uniform_seeds(33, 5, rng_seed).unwrap();
        let positions = seeds.positions();
        let schedule = jumpflood::flooding::jfa_schedule(33).unwrap();
        let mut grid = stamp_seeds(&seeds);
        for (k, nb) in schedule.waves() {
            let next = flood_wave(&grid, &seeds, k, nb, DistanceMetric::Euclidean).unwrap();
            for y in 0..33 {
                for x in 0..33 {
                    let before = grid.claim_at(x, y);
                    let after = next.claim_at(x, y);
                    let q = (x as i32, y as i32);
                    let cost = |c: Claim| match c.seed_id() {
                        Some(id) => DistanceMetric::Euclidean.cost(positions[id as usize], q),
                        None => u64::MAX,
                    };
                    if !before.is_empty() {
                        assert!(!after.is_empty(), "claim vanished at ({x}, {y})");
                    }
                    assert!(cost(after) <= cost(before), "distance grew at ({x}, {y})");
                }
            }
            grid = next;
        }
        assert!(grid.is_complete());
    }
}

#[test]
fn wave_is_identical_for_arbitrary_intermediate_states() {
    // the kernel contract does not require a well-formed diagram as input;
    // feed it a synthetic patchwork state and check against scatter
    let seeds = SeedSet::from_positions(8, vec![(0, 0), (7, 7), (3, 2)]).unwrap();
    let mut claims = vec![EMPTY; 64];
    for (i, claim) in claims.iter_mut().enumerate() {
        *claim = match i % 4 {
            0 => Claim::seed(2),
            1 => EMPTY,
            2 => Claim::seed(0),
            _ => Claim::seed(1),
        };
    }
    let grid = VoronoiGrid::from_claims(8, claims).unwrap();
    for nb in [Neighborhood::Moore, Neighborhood::VonNeumann] {
        for k in [1, 2, 4] {
            let gathered = flood_wave(&grid, &seeds, k, nb, DistanceMetric::Euclidean).unwrap();
            let scattered = scatter_wave(grid.claims(), &seeds, k, nb, DistanceMetric::Euclidean);
            assert_eq!(gathered.claims(), &scattered[..]);
        }
    }
}
