//! Seeded random corpus runs with invariant checking and timing summaries.

use rayon::prelude::*;
use serde::Serialize;

use crate::check::{check_instance, InstanceCheck, Limits};
use crate::io::gen;

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "ALLONES_THREADS";

/// Edge densities cycled through by trial index.
pub const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub limits: Limits,
    pub timing: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self { sizes: vec![8, 10, 12], trials: 200, seed: 0, limits: Limits::default(), timing: true }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(rename_all = "camelCase")]
pub struct RatioSummary {
    /// Instances with a known `opt > 0`.
    pub count: usize,
    pub optimal: usize,
    pub min: f64,
    pub mean: f64,
    pub p50: f64,
    pub p90: f64,
    pub max: f64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(rename_all = "camelCase")]
pub struct TimingSummary {
    pub p50_micros: f64,
    pub p90_micros: f64,
    pub p99_micros: f64,
    pub max_micros: f64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(rename_all = "camelCase")]
pub struct SizeReport {
    pub n: usize,
    pub instances: usize,
    pub feasible: usize,
    pub oracle_checked: usize,
    pub violations: usize,
    pub ratio: Option<RatioSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<TimingSummary>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(rename_all = "camelCase")]
pub struct BenchReport {
    pub seed: u64,
    pub trials: usize,
    pub sizes: Vec<SizeReport>,
    pub total_violations: usize,
    /// First few violation messages, tagged with size and trial.
    pub violation_samples: Vec<String>,
}

/// Seed for trial `trial` at size `n`: a SplitMix64 step over the mixed inputs.
pub fn trial_seed(seed: u64, n: usize, trial: usize) -> u64 {
    let mut z = seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (trial as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn trial_instance(seed: u64, n: usize, trial: usize) -> crate::lamp::Instance {
    gen::random_mixed(n, DENSITIES[trial % DENSITIES.len()], trial_seed(seed, n, trial))
}

/// Runs `f` on a pool capped by `ALLONES_THREADS` when it is set.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).filter(|&t| t > 0);
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn percentile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let idx = ((sorted.len() - 1) as f64 * q).round() as usize;
    sorted[idx]
}

fn summarize_ratio(checks: &[InstanceCheck]) -> Option<RatioSummary> {
    let mut ratios: Vec<f64> = checks
        .iter()
        .filter_map(|c| match (c.sol, c.opt) {
            (Some(sol), Some(opt)) if opt > 0 => Some(sol as f64 / opt as f64),
            _ => None,
        })
        .collect();
    if ratios.is_empty() {
        return None;
    }
    ratios.sort_by(f64::total_cmp);
    let optimal = ratios.iter().filter(|&&r| r == 1.0).count();
    Some(RatioSummary {
        count: ratios.len(),
        optimal,
        min: ratios[0],
        mean: ratios.iter().sum::<f64>() / ratios.len() as f64,
        p50: percentile(&ratios, 0.5),
        p90: percentile(&ratios, 0.9),
        max: *ratios.last().unwrap(),
    })
}

fn summarize_timing(checks: &[InstanceCheck]) -> TimingSummary {
    let mut t: Vec<f64> = checks.iter().map(|c| c.nanos as f64 / 1e3).collect();
    t.sort_by(f64::total_cmp);
    TimingSummary {
        p50_micros: percentile(&t, 0.5),
        p90_micros: percentile(&t, 0.9),
        p99_micros: percentile(&t, 0.99),
        max_micros: t.last().copied().unwrap_or(0.0),
    }
}

pub fn run(config: &BenchConfig) -> BenchReport {
    with_thread_cap(|| run_in_current_pool(config))
}

fn run_in_current_pool(config: &BenchConfig) -> BenchReport {
    let mut sizes = Vec::new();
    let mut samples = Vec::new();
    let mut total = 0;
    for &n in &config.sizes {
        let checks: Vec<InstanceCheck> = (0..config.trials)
            .into_par_iter()
            .map(|t| check_instance(&trial_instance(config.seed, n, t), config.limits))
            .collect();
        let violations: usize = checks.iter().map(|c| c.violations.len()).sum();
        total += violations;
        for (t, c) in checks.iter().enumerate() {
            for v in &c.violations {
                if samples.len() < 20 {
                    samples.push(format!("n={n} trial={t}: {v}"));
                }
            }
        }
        sizes.push(SizeReport {
            n,
            instances: checks.len(),
            feasible: checks.iter().filter(|c| c.feasible).count(),
            oracle_checked: checks.iter().filter(|c| c.opt.is_some() || (!c.feasible && c.n <= config.limits.press)).count(),
            violations,
            ratio: summarize_ratio(&checks),
            timing: config.timing.then(|| summarize_timing(&checks)),
        });
    }
    BenchReport { seed: config.seed, trials: config.trials, sizes, total_violations: total, violation_samples: samples }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_clean_and_repeatable() {
        let config = BenchConfig { sizes: vec![6, 9], trials: 30, seed: 3, timing: false, ..Default::default() };
        let a = run(&config);
        assert_eq!(a.total_violations, 0, "{:?}", a.violation_samples);
        assert_eq!(a, run(&config));
        assert_eq!(a.sizes[0].instances, 30);
    }

    #[test]
    fn trial_seeds_differ() {
        assert_ne!(trial_seed(0, 8, 0), trial_seed(0, 8, 1));
        assert_ne!(trial_seed(0, 8, 0), trial_seed(0, 9, 0));
    }
}
