//! CSV and PPM artifact writers.
//!
//! Both formats are deterministic: identical inputs produce identical bytes
//! (records carry wall-clock times, so re-running a simulation changes only
//! the `elapsed_seconds` column).

use std::fmt::Write as _;
use std::path::Path;

use jumpflood::metrics::MetricsRecord;
use jumpflood::{SeedSet, VoronoiGrid};

use crate::config::{BenchError, SimConfig};
use crate::sim::SweepRow;

pub const CSV_HEADER: &str = "step,algorithm,n,s,d_max,wave_count,elapsed_seconds,similarity_pct";

/// Writes one row per record, ordered by step and then algorithm name.
///
/// Decimal points are locale-independent, and floats print in Rust's
/// shortest round-trip form; an absent similarity is an empty cell.
pub fn export_csv(
    records: &[MetricsRecord],
    cfg: &SimConfig,
    path: &Path,
) -> Result<(), BenchError> {
    let mut ordered: Vec<&MetricsRecord> = records.iter().collect();
    ordered.sort_by(|a, b| {
        (a.step_index, a.algorithm.as_str()).cmp(&(b.step_index, b.algorithm.as_str()))
    });

    let mut out = String::with_capacity(64 * (ordered.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for record in ordered {
        let similarity = match record.similarity_vs_baseline {
            Some(pct) => pct.to_string(),
            None => String::new(),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            record.step_index,
            record.algorithm,
            cfg.n,
            cfg.s,
            cfg.d_max,
            record.wave_count,
            record.elapsed_seconds,
            similarity
        )
        .expect("writing to a String cannot fail");
    }
    write_file(path, out.as_bytes())
}

/// Writes the sweep aggregate table: one row per `(n, s)` cell, with one
/// column group per requested algorithm (ordered by tag name) and a trailing
/// `error` column for cells whose simulation failed.
pub fn export_sweep_csv(
    rows: &[SweepRow],
    base: &SimConfig,
    path: &Path,
) -> Result<(), BenchError> {
    let mut tags: Vec<&'static str> = base.algorithms.iter().map(|a| a.name()).collect();
    tags.sort_unstable();

    let mut out = String::new();
    out.push_str("n,s,d_max");
    for tag in &tags {
        write!(
            out,
            ",{tag}_seconds,{tag}_waves,{tag}_mean_similarity_pct,{tag}_speedup_vs_jfa"
        )
        .expect("writing to a String cannot fail");
    }
    out.push_str(",error\n");

    for row in rows {
        write!(out, "{},{},{}", row.n, row.s, base.d_max).expect("infallible");
        match &row.outcome {
            Ok(summaries) => {
                for tag in &tags {
                    let summary = summaries
                        .iter()
                        .find(|s| s.algorithm.name() == *tag)
                        .expect("summarize covers every requested algorithm");
                    let mean = summary
                        .mean_similarity_pct
                        .map(|v| v.to_string())
                        .unwrap_or_default();
                    let speedup = summary
                        .speedup_vs_jfa
                        .map(|v| v.to_string())
                        .unwrap_or_default();
                    write!(
                        out,
                        ",{},{},{},{}",
                        summary.cumulative_seconds, summary.waves_per_step, mean, speedup
                    )
                    .expect("infallible");
                }
                out.push_str(",\n");
            }
            Err(message) => {
                for _ in &tags {
                    out.push_str(",,,,");
                }
                // commas are the column separator; flatten them out of the message
                writeln!(out, ",{}", message.replace(',', ";")).expect("infallible");
            }
        }
    }
    write_file(path, out.as_bytes())
}

/// Writes a binary PPM (P6) of a complete grid.
///
/// Each region gets a color hashed from its seed id, and each seed's own
/// pixel is marked black. Identical grid and seeds give identical bytes.
pub fn export_image(grid: &VoronoiGrid, seeds: &SeedSet, path: &Path) -> Result<(), BenchError> {
    if grid.n() != seeds.n() {
        return Err(jumpflood::Error::DimensionMismatch {
            left: grid.n(),
            right: seeds.n(),
        }
        .into());
    }
    if !grid.is_complete() {
        return Err(jumpflood::Error::IncompleteGrid.into());
    }
    let n = grid.n();
    let mut bytes = format!("P6\n{n} {n}\n255\n").into_bytes();
    bytes.reserve((n as usize) * (n as usize) * 3);
    for claim in grid.claims() {
        let id = claim.seed_id().expect("grid is complete");
        bytes.extend_from_slice(&region_color(id));
    }
    let header_len = bytes.len() - (n as usize) * (n as usize) * 3;
    for seed in seeds.seeds() {
        let offset = header_len + 3 * ((seed.y as usize) * n as usize + seed.x as usize);
        bytes[offset..offset + 3].copy_from_slice(&[0, 0, 0]);
    }
    write_file(path, &bytes)
}

/// Deterministic palette: a hash of the seed id, with channels kept away
/// from black so seed markers stay visible.
pub fn region_color(id: u32) -> [u8; 3] {
    let mut z = (id as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^= z >> 31;
    let lift = |v: u8| 40 + ((v as u16 * 216) / 256) as u8;
    let b = z.to_le_bytes();
    [lift(b[0]), lift(b[1]), lift(b[2])]
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), BenchError> {
    std::fs::write(path, bytes).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}
