//! Scheduling unreliable jobs on identical parallel machines.
//!
//! Each job succeeds with probability `π` and then earns its reward `r`; a
//! failure stops its machine for good. This crate provides
//!
//! * exact evaluation of expected rewards ([`eval`]),
//! * the Largest-Z-ratio-First (LZF) greedy rule and an exact solver for
//!   small instances ([`solvers`]),
//! * the bound function whose minimum, about 0.853196, is LZF's worst-case
//!   ratio, plus the instances that attain it ([`analysis`]),
//! * random instance generation, Monte Carlo simulation and ratio sweeps
//!   ([`harness`]).
//!
//! ```
//! use ujp::{lambda_ratio, Instance, DEFAULT_CAP};
//!
//! let inst = Instance::unit_z(2, &[0.585786, 0.585786, 0.001], None).unwrap();
//! let lambda = lambda_ratio(&inst, DEFAULT_CAP).unwrap();
//! assert!(lambda > 0.853 && lambda < 0.854);
//! ```

pub mod analysis;
pub mod error;
pub mod eval;
pub mod harness;
pub mod model;
pub mod solvers;

pub use error::{Error, Result};
pub use eval::{er_unit_z, evaluate, expected_reward_machine, EvalReport};
pub use model::{unit_z_reward, validate_instance, z_ratio, Instance, Job, RawInstance, Schedule};
pub use solvers::{
    lambda_ratio, lzf_schedule, optimal_schedule, sequence_by_z, Method, SolveResult, DEFAULT_CAP,
};
