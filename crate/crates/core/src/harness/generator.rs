//! Seeded random instances.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64(seed)`; the
//! instance with index `k` of a sweep reads stream `k`, so instances can be
//! generated in any order or in parallel with identical results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Instance, Job};

/// How job rewards are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RewardMode {
    /// Reward `(1 − π)/π`, so every Z-ratio is 1.
    UnitZ,
    /// Reward drawn log-uniformly from `[lo, hi]`, independent of `π`.
    LogUniform { lo: f64, hi: f64 },
}

impl RewardMode {
    pub fn check(&self) -> Result<()> {
        match *self {
            RewardMode::UnitZ => Ok(()),
            RewardMode::LogUniform { lo, hi } if lo > 0.0 && lo <= hi && hi.is_finite() => Ok(()),
            RewardMode::LogUniform { lo, hi } => {
                Err(Error::BadConfig(format!("log-uniform rewards need 0 < lo <= hi, got [{lo}, {hi}]")))
            }
        }
    }
}

pub fn check_prob_range((lo, hi): (f64, f64)) -> Result<()> {
    if lo > 0.0 && lo <= hi && hi < 1.0 {
        Ok(())
    } else {
        Err(Error::BadConfig(format!("probability range [{lo}, {hi}] must lie strictly inside (0, 1)")))
    }
}

/// Generator for stream `stream` of `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Draws `n` jobs on `m` machines from `rng`.
pub fn random_instance_from<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    prob_range: (f64, f64),
    reward_mode: RewardMode,
) -> Result<Instance> {
    if n == 0 || m == 0 {
        return Err(Error::BadConfig(format!("need n >= 1 and m >= 1, got n = {n}, m = {m}")));
    }
    check_prob_range(prob_range)?;
    reward_mode.check()?;

    let mut jobs = Vec::with_capacity(n);
    for id in 0..n {
        let prob = rng.gen_range(prob_range.0..=prob_range.1);
        let job = match reward_mode {
            RewardMode::UnitZ => Job::unit_z(id, prob)?,
            RewardMode::LogUniform { lo, hi } => {
                let reward = rng.gen_range(lo.ln()..=hi.ln()).exp();
                Job::new(id, prob, reward)?
            }
        };
        jobs.push(job);
    }
    Instance::new(m, jobs, None)
}

/// Deterministic random instance: stream 0 of `seed`.
pub fn random_instance(
    n: usize,
    m: usize,
    seed: u64,
    prob_range: (f64, f64),
    reward_mode: RewardMode,
) -> Result<Instance> {
    random_instance_from(&mut stream_rng(seed, 0), n, m, prob_range, reward_mode)
}
