//! The LZF greedy rule, the single-machine priority rule and an exact
//! multi-machine solver for small instances.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::evaluate;
use crate::model::{z_order_positions, Instance, Job, Schedule};

/// Default job-count limit for [`optimal_schedule`].
pub const DEFAULT_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Lzf,
    Exact,
    SingleMachine,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub schedule: Schedule,
    /// Total expected reward of `schedule`.
    pub value: f64,
    pub method: Method,
}

/// Jobs in non-increasing Z-ratio order, ties by ascending id.
/// This sequence is optimal on a single machine.
pub fn sequence_by_z(jobs: &[Job]) -> Vec<Job> {
    z_order_positions(jobs).into_iter().map(|p| jobs[p]).collect()
}

/// One assignment made by the LZF rule.
#[derive(Debug, Clone, PartialEq)]
pub struct LzfStep {
    pub job: usize,
    pub machine: usize,
    /// Cumulative probability of every machine just before the assignment.
    pub cumprob_before: Vec<f64>,
}

fn argmax_lowest(values: &[f64]) -> usize {
    let mut best = 0;
    for (h, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = h;
        }
    }
    best
}

/// Replays the LZF rule over the instance's order and records each choice.
pub fn lzf_steps(instance: &Instance) -> Vec<LzfStep> {
    let mut cum = vec![1.0; instance.m()];
    let mut steps = Vec::with_capacity(instance.n());
    for &id in instance.lzf_order() {
        let machine = argmax_lowest(&cum);
        steps.push(LzfStep { job: id, machine, cumprob_before: cum.clone() });
        cum[machine] *= instance.jobs()[id].prob;
    }
    steps
}

/// The primary LZF schedule: jobs taken in LZF order, each sent to a machine
/// with maximum current cumulative probability (lowest index on ties).
pub fn lzf_schedule(instance: &Instance) -> Result<SolveResult> {
    if instance.n() == 0 {
        return Err(Error::EmptyInstance);
    }
    let mut schedule = Schedule::empty(instance.m());
    for step in lzf_steps(instance) {
        schedule.machines[step.machine].push(step.job);
    }
    let value = evaluate(instance, &schedule)?.total_er;
    Ok(SolveResult { schedule, value, method: Method::Lzf })
}

/// Depth-first enumeration of restricted-growth strings over the jobs in
/// Z-order. Every set partition into at most `m` blocks is visited once, so
/// identical machines are never permuted. Blocks inherit the global Z-order,
/// which makes each one optimally sequenced, and the reward of a block is
/// accumulated as jobs are appended.
struct PartitionSearch {
    probs: Vec<f64>,
    weights: Vec<f64>,
    m: usize,
    assign: Vec<usize>,
    cum: Vec<f64>,
    er: Vec<f64>,
    best_value: f64,
    best_assign: Vec<usize>,
    leaves: u64,
}

impl PartitionSearch {
    fn new(jobs: &[Job], m: usize) -> Self {
        let n = jobs.len();
        let m = m.min(n.max(1));
        PartitionSearch {
            probs: jobs.iter().map(|j| j.prob).collect(),
            weights: jobs.iter().map(|j| j.prob * j.reward).collect(),
            m,
            assign: vec![0; n],
            cum: vec![1.0; m],
            er: vec![0.0; m],
            best_value: f64::NEG_INFINITY,
            best_assign: vec![0; n],
            leaves: 0,
        }
    }

    fn run(&mut self) {
        self.descend(0, 0);
    }

    fn descend(&mut self, k: usize, used: usize) {
        if k == self.probs.len() {
            self.leaves += 1;
            let value: f64 = self.er[..used].iter().sum();
            // strict: the lexicographically first maximizer wins
            if value > self.best_value {
                self.best_value = value;
                self.best_assign.copy_from_slice(&self.assign);
            }
            return;
        }
        let limit = (used + 1).min(self.m);
        for h in 0..limit {
            let (cum, er) = (self.cum[h], self.er[h]);
            self.er[h] = er + cum * self.weights[k];
            self.cum[h] = cum * self.probs[k];
            self.assign[k] = h;
            self.descend(k + 1, used.max(h + 1));
            self.cum[h] = cum;
            self.er[h] = er;
        }
    }
}

/// Number of assignments the exact solver enumerates for `n` jobs on `m`
/// machines, i.e. set partitions of `n` items into at most `m` blocks.
pub fn count_canonical_assignments(n: usize, m: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    let jobs: Vec<Job> = (0..n).map(|id| Job { id, prob: 0.5, reward: 1.0 }).collect();
    let mut search = PartitionSearch::new(&jobs, m);
    search.run();
    search.leaves
}

/// Exact maximizer of the total expected reward, by enumeration of job
/// partitions. Fails with [`Error::TooLarge`] beyond `cap` jobs.
pub fn optimal_schedule(instance: &Instance, cap: usize) -> Result<SolveResult> {
    let n = instance.n();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    let ordered = sequence_by_z(instance.jobs());

    if instance.m() == 1 {
        let mut schedule = Schedule::empty(1);
        schedule.machines[0] = ordered.iter().map(|j| j.id).collect();
        let value = evaluate(instance, &schedule)?.total_er;
        return Ok(SolveResult { schedule, value, method: Method::SingleMachine });
    }
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }

    let mut search = PartitionSearch::new(&ordered, instance.m());
    search.run();
    let mut schedule = Schedule::empty(instance.m());
    for (job, &h) in ordered.iter().zip(&search.best_assign) {
        schedule.machines[h].push(job.id);
    }
    let value = evaluate(instance, &schedule)?.total_er;
    Ok(SolveResult { schedule, value, method: Method::Exact })
}

/// LZF and optimal results for one instance, with their ratio.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub lzf: SolveResult,
    pub opt: SolveResult,
    pub lambda: f64,
}

pub fn ratio_report(instance: &Instance, cap: usize) -> Result<RatioReport> {
    let lzf = lzf_schedule(instance)?;
    let opt = optimal_schedule(instance, cap)?;
    // Ties and all-zero rewards give exactly 1; rounding never pushes above it.
    let lambda = if lzf.value >= opt.value { 1.0 } else { lzf.value / opt.value };
    Ok(RatioReport { lzf, opt, lambda })
}

/// `λ(I) = ER[S_LZF] / ER[S_OPT]`.
pub fn lambda_ratio(instance: &Instance, cap: usize) -> Result<f64> {
    ratio_report(instance, cap).map(|r| r.lambda)
}
