//! Instances on which LZF approaches the bound `min_t,p f(m/t, p)`.
//!
//! With `t̄, p̄` the minimizer for `m` and `π = p̄^(1/t̄)`, the instance holds
//! `m·t̄` unit-Z jobs of probability `π` followed by `m − t̄` unit-Z jobs of
//! probability `ε`. LZF deals the `π`-jobs round robin (`t̄` per machine) and
//! then tops `m − t̄` machines with one `ε`-job each. The better schedule
//! stacks `m` of the `π`-jobs on each of `t̄` machines and leaves every
//! `ε`-job alone on its own machine.

use serde::{Deserialize, Serialize};

use super::bound::min_f_for_m;
use crate::error::{Error, Result};
use crate::model::{Instance, Schedule};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TightInstance {
    pub instance: Instance,
    pub t_bar: usize,
    pub p_bar: f64,
    pub pi: f64,
    pub eps: f64,
    /// Predicted LZF value `m − (m−t̄)·ε·p̄ − t̄·p̄`.
    pub z_h: f64,
    /// Predicted value `m − (m−t̄)·ε − t̄·p̄^(m/t̄)` of the stacked schedule.
    pub z_star: f64,
}

impl TightInstance {
    fn m(&self) -> usize {
        self.instance.m()
    }

    fn pi_jobs(&self) -> usize {
        self.m() * self.t_bar
    }

    /// The LZF schedule: round-robin `π`-jobs, then `ε`-jobs on the first
    /// `m − t̄` machines.
    pub fn sigma_h(&self) -> Schedule {
        let m = self.m();
        let mut s = Schedule::empty(m);
        for id in 0..self.pi_jobs() {
            s.machines[id % m].push(id);
        }
        for k in 0..m - self.t_bar {
            s.machines[k].push(self.pi_jobs() + k);
        }
        s
    }

    /// `m` `π`-jobs on each of the first `t̄` machines, the `ε`-jobs alone.
    pub fn sigma_star(&self) -> Schedule {
        let m = self.m();
        let mut s = Schedule::empty(m);
        for id in 0..self.pi_jobs() {
            s.machines[id / m].push(id);
        }
        for k in 0..m - self.t_bar {
            s.machines[self.t_bar + k].push(self.pi_jobs() + k);
        }
        s
    }

    pub fn predicted_ratio(&self) -> f64 {
        self.z_h / self.z_star
    }
}

pub fn tight_instance(m: usize, eps: f64) -> Result<TightInstance> {
    let bound = min_f_for_m(m)?;
    let t_bar = bound.t.expect("min_f_for_m reports t");
    let p_bar = bound.p;
    let pi = p_bar.powf(1.0 / t_bar as f64);
    if !(eps > 0.0 && eps < pi) {
        return Err(Error::Domain(format!("eps = {eps} must lie in (0, {pi})")));
    }

    let mut probs = vec![pi; m * t_bar];
    probs.extend(std::iter::repeat_n(eps, m - t_bar));
    let instance = Instance::unit_z(m, &probs, Some((0..probs.len()).collect()))?;

    let (mf, tf) = (m as f64, t_bar as f64);
    let z_h = mf - (mf - tf) * eps * p_bar - tf * p_bar;
    let z_star = mf - (mf - tf) * eps - tf * p_bar.powf(mf / tf);
    Ok(TightInstance { instance, t_bar, p_bar, pi, eps, z_h, z_star })
}
