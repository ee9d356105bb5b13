//! Invariant checks for one instance against the brute-force oracles.

use std::time::Instant;

use crate::approx::{analyze, Analysis};
use crate::exact::{exact_by_null_space, exact_by_press_enumeration, ExactError};
use crate::lamp::{build_system, simulate_presses, Instance};

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest `n` handed to press enumeration.
    pub press: usize,
    /// Largest corank handed to kernel enumeration.
    pub null_space: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { press: crate::exact::PRESS_LIMIT, null_space: crate::exact::NULL_SPACE_LIMIT }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceCheck {
    pub n: usize,
    pub feasible: bool,
    pub sol: Option<usize>,
    pub opt: Option<usize>,
    pub r: usize,
    pub m: usize,
    pub violations: Vec<String>,
    /// Wall time of the approximate solve.
    pub nanos: u128,
}

/// Solves `inst` approximately and checks every guarantee that can be
/// checked within `limits`.
pub fn check_instance(inst: &Instance, limits: Limits) -> InstanceCheck {
    let n = inst.n();
    let started = Instant::now();
    let analysis = analyze(inst);
    let solution = analysis.as_ref().ok().map(Analysis::solution);
    let nanos = started.elapsed().as_nanos();

    let mut violations = Vec::new();
    let (r, m) = match &analysis {
        Ok(a) => (a.general.rank, a.general.corank()),
        Err(w) => (w.rank, n - w.rank),
    };

    let press_oracle = match exact_by_press_enumeration(inst, limits.press) {
        Ok(o) => Some(o),
        Err(ExactError::TooLarge { .. }) => None,
        Err(e) => {
            violations.push(format!("press oracle failed: {e}"));
            None
        }
    };
    let (a, b) = build_system(inst);
    let null_oracle = match exact_by_null_space(&a, &b, limits.null_space) {
        Ok(o) => Some(o),
        Err(ExactError::TooLarge { .. }) => None,
        Err(e) => {
            violations.push(format!("kernel oracle failed: {e}"));
            None
        }
    };

    if let Some(p) = &press_oracle {
        if p.is_some() != solution.is_some() {
            violations.push(format!("feasibility: solver says {}, press oracle says {}", solution.is_some(), p.is_some()));
        }
    }
    if let Some(k) = &null_oracle {
        if k.is_some() != solution.is_some() {
            violations.push(format!("feasibility: solver says {}, kernel oracle says {}", solution.is_some(), k.is_some()));
        }
    }
    if let (Some(p), Some(k)) = (&press_oracle, &null_oracle) {
        if p.as_ref().map(|o| o.opt) != k.as_ref().map(|o| o.opt) {
            violations.push(format!("oracles disagree: press {:?}, kernel {:?}", p.as_ref().map(|o| o.opt), k.as_ref().map(|o| o.opt)));
        }
    }
    if let Err(w) = &analysis {
        if !w.certifies(&a, &b) {
            violations.push("inconsistency witness does not certify".into());
        }
    }

    let opt = press_oracle.flatten().or(null_oracle.flatten()).map(|o| o.opt);

    if let (Ok(an), Some(sol)) = (&analysis, &solution) {
        if a.mat_vec(&sol.press).expect("square system") != b {
            violations.push("A·press != B".into());
        }
        if !simulate_presses(inst, &sol.press).is_all_ones() {
            violations.push("simulated presses leave a lamp off".into());
        }
        if !sol.meets_rank_bound() {
            violations.push(format!("sol {} > r {}", sol.weight, sol.certificate.r));
        }
        if !sol.meets_mixed_bound() {
            let c = &sol.certificate;
            violations.push(format!("2·sol {} > n + g1 - g0 = {}", 2 * sol.weight, n + c.g1 - c.g0));
        }
        violations.extend(an.decomposition.structure_violations());
        let greedy = crate::approx::greedy_assign(&an.decomposition);
        for i in 1..=an.decomposition.m() {
            let range = an.decomposition.part_range(i);
            let ones = greedy.u_permuted.weight_in(range.start, range.end);
            if 2 * ones > range.len() {
                violations.push(format!("part {i}: {ones} presses among {} rows", range.len()));
            }
        }
        if let Some(opt) = opt {
            let c = &sol.certificate;
            if !(c.g1 <= opt && opt <= sol.weight && 2 * sol.weight <= n + opt) {
                violations.push(format!("sandwich: g1 {} opt {opt} sol {} n {n}", c.g1, sol.weight));
            }
        }
    }

    InstanceCheck { n, feasible: solution.is_some(), sol: solution.map(|s| s.weight), opt, r, m, violations, nanos }
}
