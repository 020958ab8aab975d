//! Worst-case analysis of LZF: the bound function, tight instances, and
//! ratio-preserving instance transformations.

pub mod bound;
pub mod search;
pub mod tight;
pub mod transforms;

pub use bound::{f_ratio, global_min_f, min_f_for_m, min_over_p, BoundPoint};
pub use tight::{tight_instance, TightInstance};
pub use transforms::{second_stage_merge, split_job, split_threshold, unit_z_decomposition};
