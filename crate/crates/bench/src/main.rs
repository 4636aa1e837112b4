use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use jumpflood_bench::config::{parse_algorithm_list, BenchError, ConfigOverlay};
use jumpflood_bench::{run_simulation, summarize, sweep, AlgSummary};

#[derive(Parser)]
#[command(
    name = "jfbench",
    version,
    about = "Rasterized Voronoi diagrams for moving seeds: simulate and benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate moving seeds and record per-step metrics
    Simulate(SimulateArgs),
    /// Run one simulation per (n, seeds) pair and aggregate the results
    Sweep(SweepArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Simulation steps per run [default: 100]
    #[arg(long)]
    steps: Option<u32>,
    /// Max per-axis seed displacement per step, in pixels
    #[arg(long)]
    dmax: Option<u32>,
    /// Seed for initial placement and motion [default: 42]
    #[arg(long)]
    rng_seed: Option<u64>,
    /// Comma-separated subset of: jfa, djfa-euclidean, djfa-manhattan, stf,
    /// exact [default: jfa,djfa-euclidean,djfa-manhattan]
    #[arg(long)]
    algorithms: Option<String>,
    /// Jump-1 repair rounds appended to flooding runs, 0-2 [default: 1]
    #[arg(long)]
    extra_rounds: Option<u8>,
    /// Von Neumann opening waves for dynamic runs, 0-2 [default: 2]
    #[arg(long)]
    vn_waves: Option<u8>,
    /// Write per-step records (simulate) or the aggregate table (sweep) here
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Directory for PPM frame dumps
    #[arg(long)]
    frames: Option<PathBuf>,
    /// Dump frames every this many steps [default: 10]
    #[arg(long)]
    frame_every: Option<u32>,
    /// Plain-text key=value config file; explicit flags win over file entries
    #[arg(long)]
    config: Option<PathBuf>,
}

impl CommonArgs {
    fn overlay(&self) -> Result<ConfigOverlay, BenchError> {
        Ok(ConfigOverlay {
            n: None,
            s: None,
            steps: self.steps,
            d_max: self.dmax,
            rng_seed: self.rng_seed,
            algorithms: self
                .algorithms
                .as_deref()
                .map(parse_algorithm_list)
                .transpose()?,
            extra_rounds: self.extra_rounds,
            vn_phase_waves: self.vn_waves,
            csv_path: self.csv.clone(),
            frames_dir: self.frames.clone(),
            frame_every: self.frame_every,
        })
    }

    fn file_overlay(&self) -> Result<ConfigOverlay, BenchError> {
        match &self.config {
            Some(path) => ConfigOverlay::from_file(path),
            None => Ok(ConfigOverlay::default()),
        }
    }
}

#[derive(Args)]
struct SimulateArgs {
    /// Grid side in pixels
    #[arg(long)]
    n: Option<u32>,
    /// Number of moving seeds
    #[arg(long)]
    seeds: Option<u32>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated grid sides [default: 256,512,1024]
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<u32>>,
    /// Comma-separated seed counts [default: 64,128,256,512,1024,2048,4096]
    #[arg(long = "seeds", value_delimiter = ',')]
    seeds: Option<Vec<u32>>,
    #[command(flatten)]
    common: CommonArgs,
}

const SWEEP_DEFAULT_N: [u32; 3] = [256, 512, 1024];
const SWEEP_DEFAULT_SEEDS: [u32; 7] = [64, 128, 256, 512, 1024, 2048, 4096];
const SWEEP_DEFAULT_DMAX: u32 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), BenchError> {
    match cli.command {
        Command::Simulate(args) => {
            let mut flags = args.common.overlay()?;
            flags.n = args.n;
            flags.s = args.seeds;
            let cfg = flags.over(args.common.file_overlay()?).into_config()?;
            let records = run_simulation(&cfg)?;
            println!(
                "simulated {} steps on a {}x{} grid with {} seeds (d_max={}, rng_seed={}, \
                 extra_rounds={}, vn_waves={})",
                cfg.steps,
                cfg.n,
                cfg.n,
                cfg.s,
                cfg.d_max,
                cfg.rng_seed,
                cfg.extra_rounds,
                cfg.vn_phase_waves
            );
            print_summaries(&summarize(&cfg, &records));
            if let Some(path) = &cfg.csv_path {
                println!("per-step records written to {}", path.display());
            }
            if let Some(dir) = &cfg.frames_dir {
                println!("frames written to {}", dir.display());
            }
            Ok(())
        }
        Command::Sweep(args) => {
            let mut flags = args.common.overlay()?;
            let n_values = args.n.clone().unwrap_or_else(|| SWEEP_DEFAULT_N.to_vec());
            let s_values = args
                .seeds
                .clone()
                .unwrap_or_else(|| SWEEP_DEFAULT_SEEDS.to_vec());
            // placeholders; sweep() substitutes the real values per cell
            flags.n = n_values.first().copied();
            flags.s = s_values.first().copied();
            flags.d_max = flags.d_max.or(Some(SWEEP_DEFAULT_DMAX));
            let base = flags.over(args.common.file_overlay()?).into_config()?;

            let total = n_values.len() * s_values.len();
            eprintln!(
                "sweeping {total} cells: n in {n_values:?}, seeds in {s_values:?}, \
                 {} steps each",
                base.steps
            );
            let rows = sweep(&base, &n_values, &s_values)?;
            for row in &rows {
                match &row.outcome {
                    Ok(summaries) => {
                        println!("n={} seeds={}", row.n, row.s);
                        print_summaries(summaries);
                    }
                    Err(message) => println!("n={} seeds={}: failed: {message}", row.n, row.s),
                }
            }
            if let Some(path) = &base.csv_path {
                println!("aggregate table written to {}", path.display());
            }
            Ok(())
        }
    }
}

fn print_summaries(summaries: &[AlgSummary]) {
    println!(
        "  {:<16} {:>10} {:>12} {:>13} {:>15}",
        "algorithm", "waves/step", "total_s", "mean_sim_pct", "speedup_vs_jfa"
    );
    for summary in summaries {
        let sim = summary
            .mean_similarity_pct
            .map(|v| format!("{v:.2}"))
            .unwrap_or_else(|| "-".to_string());
        let speedup = summary
            .speedup_vs_jfa
            .map(|v| format!("{v:.2}"))
            .unwrap_or_else(|| "-".to_string());
        println!(
            "  {:<16} {:>10} {:>12.4} {:>13} {:>15}",
            summary.algorithm.name(),
            summary.waves_per_step,
            summary.cumulative_seconds,
            sim,
            speedup
        );
    }
}
