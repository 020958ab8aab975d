//! Ratio sweeps: many random instances, each solved by LZF and exactly.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generator::{check_prob_range, random_instance_from, stream_rng, RewardMode};
use crate::error::{Error, Result};
use crate::model::Instance;
use crate::solvers::{lambda_ratio, DEFAULT_CAP};

pub const HISTOGRAM_LO: f64 = 0.85;
pub const HISTOGRAM_WIDTH: f64 = 0.005;
pub const HISTOGRAM_BUCKETS: usize = 30;

fn default_cap() -> usize {
    DEFAULT_CAP
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub seed: u64,
    pub count: usize,
    /// Inclusive range for the number of jobs.
    pub n_range: (usize, usize),
    /// Inclusive range for the number of machines.
    pub m_range: (usize, usize),
    pub prob_range: (f64, f64),
    pub reward_mode: RewardMode,
    #[serde(default = "default_cap")]
    pub cap: usize,
}

impl SweepConfig {
    pub fn check(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::BadConfig("count must be positive".into()));
        }
        let (n_lo, n_hi) = self.n_range;
        let (m_lo, m_hi) = self.m_range;
        if n_lo == 0 || n_lo > n_hi {
            return Err(Error::BadConfig(format!("bad n_range [{n_lo}, {n_hi}]")));
        }
        if m_lo == 0 || m_lo > m_hi {
            return Err(Error::BadConfig(format!("bad m_range [{m_lo}, {m_hi}]")));
        }
        check_prob_range(self.prob_range)?;
        self.reward_mode.check()?;
        if n_hi > self.cap {
            return Err(Error::TooLarge { n: n_hi, cap: self.cap });
        }
        Ok(())
    }

    /// The `index`-th instance of the sweep, drawn from its own stream.
    pub fn instance(&self, index: usize) -> Result<Instance> {
        let mut rng = stream_rng(self.seed, index as u64);
        let n = rng.gen_range(self.n_range.0..=self.n_range.1);
        let m = rng.gen_range(self.m_range.0..=self.m_range.1);
        random_instance_from(&mut rng, n, m, self.prob_range, self.reward_mode)
    }
}

/// Counts of λ values in buckets `[lo + k·width, lo + (k+1)·width)`; values
/// outside the covered range go to the nearest end bucket.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub lo: f64,
    pub width: f64,
    pub counts: Vec<u64>,
}

impl Histogram {
    fn new() -> Self {
        Histogram { lo: HISTOGRAM_LO, width: HISTOGRAM_WIDTH, counts: vec![0; HISTOGRAM_BUCKETS] }
    }

    fn add(&mut self, value: f64) {
        let k = ((value - self.lo) / self.width).floor();
        let k = if k.is_nan() || k < 0.0 { 0 } else { (k as usize).min(self.counts.len() - 1) };
        self.counts[k] += 1;
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub min_lambda: f64,
    pub argmin_instance: Instance,
    pub histogram: Histogram,
    pub count: usize,
}

pub fn ratio_sweep(config: &SweepConfig) -> Result<SweepReport> {
    ratio_sweep_with(config, Vec::new())
}

/// Sweep over the configured random instances followed by `extra`.
/// The first instance reaching the minimum ratio is reported.
pub fn ratio_sweep_with(config: &SweepConfig, extra: Vec<Instance>) -> Result<SweepReport> {
    config.check()?;
    if let Some(big) = extra.iter().find(|i| i.n() > config.cap) {
        return Err(Error::TooLarge { n: big.n(), cap: config.cap });
    }
    let generated = (0..config.count)
        .into_par_iter()
        .map(|k| config.instance(k))
        .collect::<Result<Vec<_>>>()?;
    let instances: Vec<Instance> = generated.into_iter().chain(extra).collect();

    let lambdas = instances
        .par_iter()
        .map(|inst| lambda_ratio(inst, config.cap))
        .collect::<Result<Vec<f64>>>()?;

    let mut histogram = Histogram::new();
    let mut best = 0;
    for (k, &lambda) in lambdas.iter().enumerate() {
        histogram.add(lambda);
        if lambda < lambdas[best] {
            best = k;
        }
    }
    Ok(SweepReport {
        min_lambda: lambdas[best],
        argmin_instance: instances.into_iter().nth(best).expect("index in range"),
        histogram,
        count: lambdas.len(),
    })
}
