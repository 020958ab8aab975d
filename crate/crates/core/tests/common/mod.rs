//! Independent oracles shared by the integration tests. Nothing here calls
//! the solvers it is used to check.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ujp::{Instance, Job};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Expected reward of jobs in the given order, straight from the definition:
/// the k-th job pays off with the product of the first k probabilities.
pub fn brute_er(jobs: &[&Job]) -> f64 {
    (0..jobs.len())
        .map(|k| jobs[..=k].iter().map(|j| j.prob).product::<f64>() * jobs[k].reward)
        .sum()
}

/// Best single-machine order by trying all n! permutations (Heap's algorithm).
pub fn best_permutation_er(jobs: &[Job]) -> f64 {
    let mut perm: Vec<&Job> = jobs.iter().collect();
    let n = perm.len();
    let mut best = brute_er(&perm);
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.max(brute_er(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Exact optimum over all m^n assignments, each machine sequenced by
/// sorting its jobs on π·r/(1−π) descending.
pub fn naive_optimum(instance: &Instance) -> f64 {
    let (n, m) = (instance.n(), instance.m());
    let jobs = instance.jobs();
    let mut best = f64::NEG_INFINITY;
    let mut code = vec![0usize; n];
    loop {
        let mut total = 0.0;
        for h in 0..m {
            let mut block: Vec<&Job> = (0..n).filter(|&k| code[k] == h).map(|k| &jobs[k]).collect();
            block.sort_by(|a, b| {
                let za = a.prob * a.reward / (1.0 - a.prob);
                let zb = b.prob * b.reward / (1.0 - b.prob);
                zb.partial_cmp(&za).unwrap()
            });
            total += brute_er(&block);
        }
        best = best.max(total);
        // next base-m counter value
        let mut k = 0;
        loop {
            if k == n {
                return best;
            }
            code[k] += 1;
            if code[k] < m {
                break;
            }
            code[k] = 0;
            k += 1;
        }
    }
}

/// Σ_{k=1}^{min(n,m)} S(n, k), Stirling numbers of the second kind by the
/// recurrence S(n, k) = k·S(n−1, k) + S(n−1, k−1).
pub fn partitions_into_at_most(n: usize, m: usize) -> u64 {
    let mut s = vec![vec![0u64; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = k as u64 * s[i - 1][k] + s[i - 1][k - 1];
        }
    }
    (1..=m.min(n)).map(|k| s[n][k]).sum()
}

pub fn random_general(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Instance {
    let jobs = (0..n)
        .map(|id| {
            let prob = rng.gen_range(0.02..0.98);
            let reward = rng.gen_range((0.05f64).ln()..(20f64).ln()).exp();
            Job::new(id, prob, reward).unwrap()
        })
        .collect();
    Instance::new(m, jobs, None).unwrap()
}

pub fn random_unit_z(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Instance {
    let probs: Vec<f64> = (0..n).map(|_| rng.gen_range(0.02..0.98)).collect();
    Instance::unit_z(m, &probs, None).unwrap()
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Unit-Z instance whose LZF schedule gives every machine the same prefix of
/// `prefix_len` jobs (dealt round robin, so all machines tie bitwise), then
/// `second` further jobs that each end a distinct machine.
pub fn conforming_instance(rng: &mut ChaCha8Rng, m: usize, prefix_len: usize, second: usize) -> Instance {
    assert!(second < m);
    let mut probs = Vec::new();
    for _ in 0..prefix_len {
        let q = rng.gen_range(0.6..0.99);
        probs.extend(std::iter::repeat_n(q, m));
    }
    for _ in 0..second {
        probs.push(rng.gen_range(0.05..0.95));
    }
    Instance::unit_z(m, &probs, None).unwrap()
}
