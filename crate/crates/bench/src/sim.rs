//! The simulation loop: one shared motion trajectory, with every requested
//! algorithm computing the diagram of the same post-move seed set each step.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use jumpflood::djfa::{run_djfa_step, DjfaParams};
use jumpflood::dynamics::{init_uniform_seeds, move_seeds, MotionConfig};
use jumpflood::flooding::{jfa_schedule_with_extra_rounds, run_exact, run_schedule, run_stf};
use jumpflood::metrics::{cumulative_times, similarity, speedup, MetricsRecord};
use jumpflood::{DistanceMetric, Scalar, SeedSet, VoronoiGrid};

use crate::config::{Algorithm, BenchError, SimConfig};
use crate::export::{export_csv, export_image, export_sweep_csv};

/// Runs one simulation and returns one record per (step, algorithm).
///
/// Per step: the seeds move once, then every requested algorithm computes
/// the diagram of that same post-move seed set. Static algorithms rebuild
/// from scratch; dynamic ones advance their own previous grid, which is
/// bootstrapped from a fresh jump-flooding build of the initial positions
/// and recorded under the dynamic tag as step 0. Dynamic records carry the
/// similarity against the same-step jump-flooding baseline (computed even
/// when `jfa` itself is not requested, though only requested algorithms get
/// records).
///
/// Timers wrap only the diagram kernels. If the loop fails midway, the
/// records gathered so far are still flushed to `cfg.csv_path`.
pub fn run_simulation(cfg: &SimConfig) -> Result<Vec<MetricsRecord>, BenchError> {
    cfg.validate()?;
    let mut records = Vec::new();
    let outcome = simulate_into(cfg, &mut records);
    if let Some(path) = &cfg.csv_path {
        export_csv(&records, cfg, path)?;
    }
    outcome.map(|()| records)
}

fn simulate_into(cfg: &SimConfig, records: &mut Vec<MetricsRecord>) -> Result<(), BenchError> {
    let jfa_requested = cfg.algorithms.contains(&Algorithm::Jfa);
    let any_dynamic = cfg.algorithms.iter().any(|a| a.is_dynamic());
    let static_schedule = jfa_schedule_with_extra_rounds(cfg.n, cfg.extra_rounds)?;

    if let Some(dir) = &cfg.frames_dir {
        std::fs::create_dir_all(dir).map_err(|source| BenchError::Io {
            path: dir.clone(),
            source,
        })?;
    }

    let mut seeds = init_uniform_seeds(cfg.n, cfg.s, cfg.rng_seed)?;

    // Dynamic chains start from a fresh static build of the initial
    // positions (with their own metric); the cost lands on their tag as
    // step 0 so cumulative times stay honest.
    let mut dynamic_state: BTreeMap<Algorithm, VoronoiGrid> = BTreeMap::new();
    for &alg in cfg.algorithms.iter().filter(|a| a.is_dynamic()) {
        let started = Instant::now();
        let (grid, waves) = run_schedule(&seeds, alg.metric(), &static_schedule);
        let elapsed = started.elapsed().as_secs_f64();
        records.push(MetricsRecord {
            step_index: 0,
            algorithm: alg.name().to_string(),
            wave_count: waves,
            elapsed_seconds: elapsed,
            similarity_vs_baseline: None,
        });
        dynamic_state.insert(alg, grid);
    }

    let motion = MotionConfig {
        d_max: cfg.d_max,
        rng_seed: cfg.rng_seed,
    };
    for step in 1..=cfg.steps {
        seeds = move_seeds(&seeds, &motion, step);

        // the same-step baseline every dynamic variant is compared against
        let baseline = if jfa_requested || any_dynamic {
            let started = Instant::now();
            let (grid, waves) = run_schedule(&seeds, DistanceMetric::Euclidean, &static_schedule);
            Some((grid, started.elapsed().as_secs_f64(), waves))
        } else {
            None
        };

        for &alg in &cfg.algorithms {
            let record = match alg {
                Algorithm::Jfa => {
                    let (grid, elapsed, waves) = baseline
                        .as_ref()
                        .expect("baseline exists when jfa is requested");
                    maybe_dump_frame(cfg, alg, step, grid, &seeds)?;
                    MetricsRecord {
                        step_index: step,
                        algorithm: alg.name().to_string(),
                        wave_count: *waves,
                        elapsed_seconds: *elapsed,
                        similarity_vs_baseline: None,
                    }
                }
                Algorithm::Stf => {
                    let started = Instant::now();
                    let (grid, waves) = run_stf(&seeds, alg.metric());
                    let elapsed = started.elapsed().as_secs_f64();
                    maybe_dump_frame(cfg, alg, step, &grid, &seeds)?;
                    MetricsRecord {
                        step_index: step,
                        algorithm: alg.name().to_string(),
                        wave_count: waves,
                        elapsed_seconds: elapsed,
                        similarity_vs_baseline: None,
                    }
                }
                Algorithm::Exact => {
                    let started = Instant::now();
                    let grid = run_exact(&seeds, alg.metric());
                    let elapsed = started.elapsed().as_secs_f64();
                    maybe_dump_frame(cfg, alg, step, &grid, &seeds)?;
                    // one full scan over the grid
                    MetricsRecord {
                        step_index: step,
                        algorithm: alg.name().to_string(),
                        wave_count: 1,
                        elapsed_seconds: elapsed,
                        similarity_vs_baseline: None,
                    }
                }
                Algorithm::DjfaEuclidean | Algorithm::DjfaManhattan => {
                    let prev = dynamic_state.get(&alg).expect("bootstrapped above");
                    let params = DjfaParams {
                        d_max: cfg.d_max,
                        metric: alg.metric(),
                        vn_phase_waves: cfg.vn_phase_waves,
                        extra_rounds: cfg.extra_rounds,
                    };
                    let started = Instant::now();
                    let (grid, waves) = run_djfa_step(prev, &seeds, &params)?;
                    let elapsed = started.elapsed().as_secs_f64();
                    let sim = match &baseline {
                        Some((base, _, _)) => Some(similarity::<Scalar>(&grid, base)?),
                        None => None,
                    };
                    maybe_dump_frame(cfg, alg, step, &grid, &seeds)?;
                    dynamic_state.insert(alg, grid);
                    MetricsRecord {
                        step_index: step,
                        algorithm: alg.name().to_string(),
                        wave_count: waves,
                        elapsed_seconds: elapsed,
                        similarity_vs_baseline: sim,
                    }
                }
            };
            records.push(record);
        }
    }
    Ok(())
}

fn maybe_dump_frame(
    cfg: &SimConfig,
    alg: Algorithm,
    step: u32,
    grid: &VoronoiGrid,
    seeds: &SeedSet,
) -> Result<(), BenchError> {
    if let Some(dir) = &cfg.frames_dir {
        if step % cfg.frame_every == 0 {
            export_image(grid, seeds, &frame_path(dir, alg, step))?;
        }
    }
    Ok(())
}

pub fn frame_path(dir: &Path, alg: Algorithm, step: u32) -> PathBuf {
    dir.join(format!("{}_step{:05}.ppm", alg.name(), step))
}

/// Per-algorithm aggregate of one simulation run.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgSummary {
    pub algorithm: Algorithm,
    /// Sum of kernel seconds over all records, bootstrap included.
    pub cumulative_seconds: f64,
    /// Waves per simulation step (constant within a run).
    pub waves_per_step: u32,
    /// Mean per-step similarity against the baseline, for dynamic variants.
    pub mean_similarity_pct: Option<f64>,
    /// Cumulative-time speedup versus `jfa`, when `jfa` was run.
    pub speedup_vs_jfa: Option<f64>,
}

/// Aggregates records into one summary per algorithm, ordered by tag name
/// (the CSV row order).
pub fn summarize(cfg: &SimConfig, records: &[MetricsRecord]) -> Vec<AlgSummary> {
    let totals = cumulative_times(records);
    let mut algorithms = cfg.algorithms.clone();
    algorithms.sort_by_key(|a| a.name());

    algorithms
        .into_iter()
        .map(|alg| {
            let per_step: Vec<&MetricsRecord> = records
                .iter()
                .filter(|r| r.step_index >= 1 && r.algorithm == alg.name())
                .collect();
            let waves_per_step = per_step.first().map(|r| r.wave_count).unwrap_or(0);
            debug_assert!(per_step.iter().all(|r| r.wave_count == waves_per_step));

            let sims: Vec<f64> = per_step
                .iter()
                .filter_map(|r| r.similarity_vs_baseline)
                .collect();
            let mean_similarity_pct = if sims.is_empty() {
                None
            } else {
                Some(sims.iter().sum::<f64>() / sims.len() as f64)
            };

            let speedup_vs_jfa = if alg.is_dynamic() {
                match (totals.get(Algorithm::Jfa.name()), totals.get(alg.name())) {
                    (Some(&base), Some(&own)) => speedup::<Scalar>(base, own).ok(),
                    _ => None,
                }
            } else {
                None
            };

            AlgSummary {
                algorithm: alg,
                cumulative_seconds: totals.get(alg.name()).copied().unwrap_or(0.0),
                waves_per_step,
                mean_similarity_pct,
                speedup_vs_jfa,
            }
        })
        .collect()
}

/// One cell of a sweep: a full simulation at a given `(n, s)`.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub n: u32,
    pub s: u32,
    /// Summaries on success, the failure message otherwise (a failing cell
    /// does not abort the sweep).
    pub outcome: Result<Vec<AlgSummary>, String>,
}

/// Runs `base` over the cartesian product of grid sides and seed counts.
///
/// Cells run sequentially so their timings do not contend with each other.
/// The aggregate table is written to `base.csv_path` if set; per-cell CSV
/// and frame output stay disabled.
pub fn sweep(
    base: &SimConfig,
    n_values: &[u32],
    s_values: &[u32],
) -> Result<Vec<SweepRow>, BenchError> {
    if n_values.is_empty() || s_values.is_empty() {
        return Err(BenchError::Config(
            "sweep needs at least one n and one seed count".into(),
        ));
    }
    let mut rows = Vec::with_capacity(n_values.len() * s_values.len());
    for &n in n_values {
        for &s in s_values {
            let mut cfg = base.clone();
            cfg.n = n;
            cfg.s = s;
            cfg.csv_path = None;
            cfg.frames_dir = None;
            let outcome = run_simulation(&cfg)
                .map(|records| summarize(&cfg, &records))
                .map_err(|e| e.to_string());
            rows.push(SweepRow { n, s, outcome });
        }
    }
    if let Some(path) = &base.csv_path {
        export_sweep_csv(&rows, base, path)?;
    }
    Ok(rows)
}
