//! Jobs, instances and schedules.
//!
//! An [`Instance`] always carries a validated LZF order: a permutation of the
//! job ids sorted by non-increasing Z-ratio. When the input omits it, one is
//! synthesized (Z descending, ties by ascending id), which makes the primary
//! LZF schedule of every instance unique.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance under which two Z-ratios count as tied.
pub const Z_TIE_REL: f64 = 1e-9;

/// Slack allowed when checking that a supplied order is Z-nonincreasing.
/// Twice the tie tolerance, so that every synthesized order validates.
const ORDER_SLACK_REL: f64 = 2.0 * Z_TIE_REL;

/// A single unreliable job.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Job {
    pub id: usize,
    /// Success probability, strictly inside (0, 1).
    pub prob: f64,
    /// Reward earned if the job completes.
    pub reward: f64,
}

impl Job {
    pub fn new(id: usize, prob: f64, reward: f64) -> Result<Self> {
        let job = Job { id, prob, reward };
        job.check()?;
        Ok(job)
    }

    /// Job whose reward is chosen so that its Z-ratio is exactly 1.
    pub fn unit_z(id: usize, prob: f64) -> Result<Self> {
        let reward = unit_z_reward(prob).map_err(|_| Error::ProbOutOfRange { id: Some(id), prob })?;
        Ok(Job { id, prob, reward })
    }

    pub fn z_ratio(&self) -> f64 {
        z_ratio(self)
    }

    fn check(&self) -> Result<()> {
        if !(self.prob > 0.0 && self.prob < 1.0) {
            return Err(Error::ProbOutOfRange { id: Some(self.id), prob: self.prob });
        }
        if !(self.reward >= 0.0 && self.reward.is_finite()) {
            return Err(Error::NegativeReward { id: self.id, reward: self.reward });
        }
        Ok(())
    }
}

/// Z-ratio `π·r / (1 − π)`.
pub fn z_ratio(job: &Job) -> f64 {
    job.prob * job.reward / (1.0 - job.prob)
}

/// Reward `(1 − π) / π` that gives a job of probability `prob` a Z-ratio of 1.
pub fn unit_z_reward(prob: f64) -> Result<f64> {
    if !(prob > 0.0 && prob < 1.0) {
        return Err(Error::ProbOutOfRange { id: None, prob });
    }
    Ok((1.0 - prob) / prob)
}

pub(crate) fn z_tied(leader: f64, z: f64) -> bool {
    z >= leader * (1.0 - Z_TIE_REL)
}

/// Jobs grouped into Z-levels: positions sorted by non-increasing Z-ratio,
/// with Z-ratios within [`Z_TIE_REL`] of the first member of a run treated
/// as tied. Each level lists its positions by ascending id.
pub(crate) fn z_levels(jobs: &[Job]) -> Vec<Vec<usize>> {
    let z: Vec<f64> = jobs.iter().map(z_ratio).collect();
    let mut pos: Vec<usize> = (0..jobs.len()).collect();
    pos.sort_by(|&a, &b| z[b].total_cmp(&z[a]).then(jobs[a].id.cmp(&jobs[b].id)));

    let mut levels = Vec::new();
    let mut start = 0;
    while start < pos.len() {
        let leader = z[pos[start]];
        let mut end = start + 1;
        while end < pos.len() && z_tied(leader, z[pos[end]]) {
            end += 1;
        }
        let mut level = pos[start..end].to_vec();
        level.sort_by_key(|&p| jobs[p].id);
        levels.push(level);
        start = end;
    }
    levels
}

/// Positions of `jobs` in non-increasing Z-ratio order, ties by ascending id.
/// Unit-Z jobs whose ratios differ only by rounding keep id order.
pub(crate) fn z_order_positions(jobs: &[Job]) -> Vec<usize> {
    z_levels(jobs).into_iter().flatten().collect()
}

/// Wire form of an instance, before validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawInstance {
    pub m: usize,
    pub jobs: Vec<Job>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lzf_order: Option<Vec<usize>>,
}

/// A validated UJP instance: `m` identical machines, jobs with ids `0..n`
/// stored at the index equal to their id, and a fixed LZF order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawInstance", into = "RawInstance")]
pub struct Instance {
    m: usize,
    jobs: Vec<Job>,
    lzf_order: Vec<usize>,
}

impl Instance {
    pub fn new(m: usize, jobs: Vec<Job>, lzf_order: Option<Vec<usize>>) -> Result<Self> {
        validate_instance(RawInstance { m, jobs, lzf_order })
    }

    /// Instance of unit-Z jobs with the given probabilities, ids in input order.
    pub fn unit_z(m: usize, probs: &[f64], lzf_order: Option<Vec<usize>>) -> Result<Self> {
        let jobs = probs
            .iter()
            .enumerate()
            .map(|(id, &p)| Job::unit_z(id, p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, jobs, lzf_order)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.jobs.len()
    }

    /// Jobs indexed by id.
    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    pub fn job(&self, id: usize) -> Option<&Job> {
        self.jobs.get(id)
    }

    pub fn lzf_order(&self) -> &[usize] {
        &self.lzf_order
    }

    /// Same jobs on a different number of machines, keeping the LZF order.
    pub fn with_machines(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::NoMachines);
        }
        Ok(Instance { m, ..self.clone() })
    }
}

impl TryFrom<RawInstance> for Instance {
    type Error = Error;

    fn try_from(raw: RawInstance) -> Result<Self> {
        validate_instance(raw)
    }
}

impl From<Instance> for RawInstance {
    fn from(inst: Instance) -> Self {
        RawInstance { m: inst.m, jobs: inst.jobs, lzf_order: Some(inst.lzf_order) }
    }
}

/// Checks every instance invariant and fills in a missing LZF order.
pub fn validate_instance(raw: RawInstance) -> Result<Instance> {
    if raw.m == 0 {
        return Err(Error::NoMachines);
    }
    let n = raw.jobs.len();
    let mut slots: Vec<Option<Job>> = vec![None; n];
    for job in &raw.jobs {
        job.check()?;
        if job.id >= n {
            return Err(Error::IdOutOfRange { id: job.id, n });
        }
        if slots[job.id].replace(*job).is_some() {
            return Err(Error::DuplicateId(job.id));
        }
    }
    let jobs: Vec<Job> = slots.into_iter().map(|s| s.expect("ids form a permutation")).collect();

    let lzf_order = match raw.lzf_order {
        Some(order) => {
            check_order(&jobs, &order)?;
            order
        }
        None => z_order_positions(&jobs),
    };
    Ok(Instance { m: raw.m, jobs, lzf_order })
}

fn check_order(jobs: &[Job], order: &[usize]) -> Result<()> {
    if order.len() != jobs.len() {
        return Err(Error::BadOrder(format!(
            "order lists {} jobs, instance has {}",
            order.len(),
            jobs.len()
        )));
    }
    let mut seen = vec![false; jobs.len()];
    let mut running_min = f64::INFINITY;
    for (k, &id) in order.iter().enumerate() {
        if id >= jobs.len() || seen[id] {
            return Err(Error::BadOrder(format!("entry {id} at position {k} is not a fresh job id")));
        }
        seen[id] = true;
        let z = z_ratio(&jobs[id]);
        if z > running_min * (1.0 + ORDER_SLACK_REL) {
            return Err(Error::BadOrder(format!(
                "job {id} at position {k} has Z = {z}, above an earlier Z = {running_min}"
            )));
        }
        running_min = running_min.min(z);
    }
    Ok(())
}

/// Per-machine ordered job-id sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub machines: Vec<Vec<usize>>,
}

impl Schedule {
    pub fn new(machines: Vec<Vec<usize>>) -> Self {
        Schedule { machines }
    }

    pub fn empty(m: usize) -> Self {
        Schedule { machines: vec![Vec::new(); m] }
    }

    /// Verifies that the schedule has `m` machines and lists every job once.
    pub fn check_covers(&self, instance: &Instance) -> Result<()> {
        if self.machines.len() != instance.m() {
            return Err(Error::CoverageMismatch(format!(
                "{} machine sequences for m = {}",
                self.machines.len(),
                instance.m()
            )));
        }
        let n = instance.n();
        let mut seen = vec![false; n];
        for &id in self.machines.iter().flatten() {
            if id >= n {
                return Err(Error::CoverageMismatch(format!("unknown job id {id}")));
            }
            if std::mem::replace(&mut seen[id], true) {
                return Err(Error::CoverageMismatch(format!("job {id} scheduled twice")));
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::CoverageMismatch(format!("job {missing} is not scheduled")));
        }
        Ok(())
    }
}
