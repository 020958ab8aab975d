//! Random instances, Monte Carlo simulation, ratio sweeps and reports.

pub mod generator;
pub mod simulate;
pub mod sweep;
pub mod table;

pub use generator::{random_instance, random_instance_from, stream_rng, RewardMode};
pub use simulate::{simulate, SimEstimate};
pub use sweep::{ratio_sweep, ratio_sweep_with, Histogram, SweepConfig, SweepReport};
pub use table::{table1_report, Table1Report};
