//! Monte Carlo estimate of a schedule's expected reward.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generator::stream_rng;
use crate::error::{Error, Result};
use crate::model::{Instance, Schedule};

/// Trials per generator stream. Fixed so reports do not depend on the
/// number of worker threads.
const TRIALS_PER_STREAM: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimEstimate {
    pub mean: f64,
    /// Standard error of the mean; 0 for a single trial.
    pub stderr: f64,
    pub trials: u64,
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let d = x - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let d = other.mean - self.mean;
        let w = other.count as f64 / count as f64;
        Moments {
            count,
            mean: self.mean + d * w,
            m2: self.m2 + other.m2 + d * d * self.count as f64 * w,
        }
    }
}

/// Total reward collected in one realization of the schedule.
fn one_trial<R: Rng>(rng: &mut R, machines: &[Vec<(f64, f64)>]) -> f64 {
    let mut total = 0.0;
    for seq in machines {
        for &(prob, reward) in seq {
            if rng.gen::<f64>() < prob {
                total += reward;
            } else {
                break;
            }
        }
    }
    total
}

/// Simulates `trials` independent runs: every machine processes its jobs in
/// order, each succeeding with its probability, and stops at the first
/// failure.
pub fn simulate(instance: &Instance, schedule: &Schedule, trials: u64, seed: u64) -> Result<SimEstimate> {
    if trials == 0 {
        return Err(Error::BadConfig("simulation needs at least one trial".into()));
    }
    schedule.check_covers(instance)?;
    let machines: Vec<Vec<(f64, f64)>> = schedule
        .machines
        .iter()
        .map(|seq| seq.iter().map(|&id| (instance.jobs()[id].prob, instance.jobs()[id].reward)).collect())
        .collect();

    let streams = trials.div_ceil(TRIALS_PER_STREAM);
    let parts: Vec<Moments> = (0..streams)
        .into_par_iter()
        .map(|s| {
            let mut rng = stream_rng(seed, s);
            let todo = TRIALS_PER_STREAM.min(trials - s * TRIALS_PER_STREAM);
            let mut acc = Moments::default();
            for _ in 0..todo {
                acc.push(one_trial(&mut rng, &machines));
            }
            acc
        })
        .collect();
    let total = parts.into_iter().fold(Moments::default(), Moments::merge);

    let stderr = if total.count > 1 {
        (total.m2 / (total.count - 1) as f64 / total.count as f64).sqrt()
    } else {
        0.0
    };
    Ok(SimEstimate { mean: total.mean, stderr, trials })
}
