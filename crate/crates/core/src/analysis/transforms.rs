//! Instance transformations that never make LZF look better relative to the
//! optimum, each with a checkable consequence:
//!
//! * [`unit_z_decomposition`] splits an instance into nested unit-Z
//!   instances, one per distinct Z-level, whose worst ratio bounds the
//!   original ratio from below.
//! * [`split_job`] replaces a job by two consecutive jobs whose product of
//!   probabilities is the original one.
//! * [`second_stage_merge`] moves the probabilities of two jobs towards 0
//!   and 1 while keeping their sum.

use crate::error::{Error, Result};
use crate::eval::check_unit_z;
use crate::model::{z_levels, Instance, Job};
use crate::solvers::lzf_steps;

/// Default upper limit on `δ` for [`second_stage_merge`].
pub const DEFAULT_MERGE_EPS: f64 = 1e-3;

/// Returns the nested instances `I_1 ⊂ I_2 ⊂ … ⊂ I_d`, where `I_k` keeps the
/// jobs of the `k` highest Z-levels with rewards reset to unit Z.
///
/// Job ids are renumbered in ascending original-id order, and each `I_k`
/// inherits the parent's LZF order restricted to its jobs.
pub fn unit_z_decomposition(instance: &Instance) -> Result<Vec<Instance>> {
    let levels = z_levels(instance.jobs());
    let mut level_of = vec![0; instance.n()];
    for (k, level) in levels.iter().enumerate() {
        for &id in level {
            level_of[id] = k;
        }
    }

    let mut out = Vec::with_capacity(levels.len());
    for k in 0..levels.len() {
        let mut renumber = vec![usize::MAX; instance.n()];
        let mut jobs = Vec::new();
        for job in instance.jobs() {
            if level_of[job.id] <= k {
                renumber[job.id] = jobs.len();
                jobs.push(Job::unit_z(jobs.len(), job.prob)?);
            }
        }
        let order = instance
            .lzf_order()
            .iter()
            .filter(|&&id| level_of[id] <= k)
            .map(|&id| renumber[id])
            .collect();
        out.push(Instance::new(instance.m(), jobs, Some(order))?);
    }
    Ok(out)
}

fn job_prob(instance: &Instance, id: usize) -> Result<f64> {
    instance
        .job(id)
        .map(|j| j.prob)
        .ok_or_else(|| Error::Domain(format!("no job with id {id}")))
}

/// Replaces unit-Z job `job_id` by `j1` (probability `pi1`, keeping the id)
/// and `j2` (probability `π_j / pi1`, id `n`), adjacent in the LZF order.
pub fn split_job(instance: &Instance, job_id: usize, pi1: f64) -> Result<Instance> {
    check_unit_z(instance)?;
    let prob = job_prob(instance, job_id)?;
    if !(pi1 > prob && pi1 < 1.0) {
        return Err(Error::Domain(format!("pi1 = {pi1} must lie in ({prob}, 1)")));
    }
    let n = instance.n();
    let mut jobs = instance.jobs().to_vec();
    jobs[job_id] = Job::unit_z(job_id, pi1)?;
    jobs.push(Job::unit_z(n, prob / pi1)?);

    let mut order = Vec::with_capacity(n + 1);
    for &id in instance.lzf_order() {
        order.push(id);
        if id == job_id {
            order.push(n);
        }
    }
    Instance::new(instance.m(), jobs, Some(order))
}

/// Lower bound on `pi1` above which [`split_job`] leaves the LZF schedule
/// unchanged apart from the split itself: once `j1` runs, its machine must
/// still be the one LZF picks for `j2`. `None` when no `pi1 < 1` works,
/// which happens when another machine tied for the maximum.
pub fn split_threshold(instance: &Instance, job_id: usize) -> Option<f64> {
    let prob = instance.job(job_id)?.prob;
    let step = lzf_steps(instance).into_iter().find(|s| s.job == job_id)?;
    let before = step.cumprob_before[step.machine];
    let rival = step
        .cumprob_before
        .iter()
        .enumerate()
        .filter(|&(h, _)| h != step.machine)
        .map(|(_, &c)| c)
        .fold(0.0, f64::max);
    let floor = prob.max(rival / before);
    (floor < 1.0).then_some(floor)
}

/// Replaces the probabilities of unit-Z jobs `i` and `j`:
///
/// * if `π_i + π_j ≤ 1`: `(δ, π_i + π_j − δ)`,
/// * otherwise: `(π_i + π_j − 1 + δ, 1 − δ)`.
///
/// Both keep `π_i + π_j`, so the LZF value is unchanged whenever `i` and `j`
/// end machines sharing the same prefix probability. `δ` must lie in
/// `(0, min(π_i, 1 − π_j))`; without one, half of
/// `min(π_i, 1 − π_j, DEFAULT_MERGE_EPS)` is used.
pub fn second_stage_merge(instance: &Instance, i: usize, j: usize, delta: Option<f64>) -> Result<Instance> {
    check_unit_z(instance)?;
    if i == j {
        return Err(Error::Domain(format!("merge needs two distinct jobs, got {i} twice")));
    }
    let (pi, pj) = (job_prob(instance, i)?, job_prob(instance, j)?);
    let limit = pi.min(1.0 - pj);
    let delta = delta.unwrap_or(0.5 * limit.min(DEFAULT_MERGE_EPS));
    if !(delta > 0.0 && delta < limit) {
        return Err(Error::Domain(format!("delta = {delta} must lie in (0, {limit})")));
    }
    let sum = pi + pj;
    let (new_i, new_j) = if sum <= 1.0 { (delta, sum - delta) } else { (sum - 1.0 + delta, 1.0 - delta) };

    let mut jobs = instance.jobs().to_vec();
    jobs[i] = Job::unit_z(i, new_i)?;
    jobs[j] = Job::unit_z(j, new_j)?;
    Instance::new(instance.m(), jobs, Some(instance.lzf_order().to_vec()))
}
