//! Expected-reward evaluation.
//!
//! A machine processing `j1, j2, …, jK` earns `r_jk` with probability
//! `π_j1 ⋯ π_jk`: the first failure forfeits everything queued behind it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Instance, Job, Schedule};

/// Tolerance on `|Z − 1|` for the reward shortcut `ER = m − Σ P_h`.
pub const UNIT_Z_TOL: f64 = 1e-9;

/// Expected reward of one machine sequence.
pub fn expected_reward_machine<'a, I>(seq: I) -> f64
where
    I: IntoIterator<Item = &'a Job>,
{
    let mut cum = 1.0;
    let mut er = 0.0;
    for job in seq {
        cum *= job.prob;
        er += cum * job.reward;
    }
    er
}

/// Full breakdown of a schedule's expected reward.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub per_machine_er: Vec<f64>,
    pub total_er: f64,
    /// Product of the success probabilities on each machine; 1 when empty.
    pub machine_cumprob: Vec<f64>,
    /// Cumulative probability of each job: the product up to and including it.
    pub job_cumprob: BTreeMap<usize, f64>,
}

pub fn evaluate(instance: &Instance, schedule: &Schedule) -> Result<EvalReport> {
    schedule.check_covers(instance)?;
    let jobs = instance.jobs();
    let mut per_machine_er = Vec::with_capacity(instance.m());
    let mut machine_cumprob = Vec::with_capacity(instance.m());
    let mut job_cumprob = BTreeMap::new();

    for seq in &schedule.machines {
        let mut cum = 1.0;
        let mut er = 0.0;
        for &id in seq {
            let job = &jobs[id];
            cum *= job.prob;
            er += cum * job.reward;
            job_cumprob.insert(id, cum);
        }
        per_machine_er.push(er);
        machine_cumprob.push(cum);
    }
    let total_er = per_machine_er.iter().sum();
    Ok(EvalReport { per_machine_er, total_er, machine_cumprob, job_cumprob })
}

/// Checks that every job's Z-ratio is within [`UNIT_Z_TOL`] of 1.
pub fn check_unit_z(instance: &Instance) -> Result<()> {
    match instance.jobs().iter().find(|j| (j.z_ratio() - 1.0).abs() > UNIT_Z_TOL) {
        Some(j) => Err(Error::NotUnitZ { id: j.id, z: j.z_ratio() }),
        None => Ok(()),
    }
}

pub fn is_unit_z(instance: &Instance) -> bool {
    check_unit_z(instance).is_ok()
}

/// `m − Σ_h P_h(S)`, valid when every job has Z-ratio 1.
pub fn er_unit_z(instance: &Instance, schedule: &Schedule) -> Result<f64> {
    check_unit_z(instance)?;
    schedule.check_covers(instance)?;
    let jobs = instance.jobs();
    let cumprob_sum: f64 = schedule
        .machines
        .iter()
        .map(|seq| seq.iter().map(|&id| jobs[id].prob).product::<f64>())
        .sum();
    Ok(instance.m() as f64 - cumprob_sum)
}
