//! Simulation and benchmark harness for the `jumpflood` Voronoi engine.
//!
//! [`run_simulation`] moves a uniform random seed set for a number of steps
//! and, at each step, builds the diagram of the same post-move positions
//! with every requested algorithm, recording wave counts, kernel times and
//! (for the dynamic variants) similarity against the same-step jump-flooding
//! baseline. [`sweep`] runs the simulation over a grid-size x seed-count
//! matrix and aggregates cumulative times, mean similarities and speedups.

pub mod config;
pub mod export;
pub mod sim;

pub use config::{Algorithm, BenchError, ConfigOverlay, SimConfig};
pub use export::{export_csv, export_image, export_sweep_csv, CSV_HEADER};
pub use sim::{run_simulation, summarize, sweep, AlgSummary, SweepRow};
