//! Machine-readable and human-readable solve reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::approx::{analyze, Analysis};
use crate::exact::{exact_by_null_space, ExactError};
use crate::gf2::Inconsistency;
use crate::lamp::Instance;

/// JSON shape printed by `allones solve --output json`.
///
/// Infeasible reports carry `feasible`, `r`, `m` and `witness` only.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct SolveReport {
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub press: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sol: Option<usize>,
    pub r: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g0: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_mixed_numerator: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_mixed_denominator: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub opt: Option<usize>,
    /// Lamps whose combined parity no press set can change.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl SolveReport {
    /// Runs the approximate solver and, when the corank is at most
    /// `exact_limit`, the kernel-enumeration optimum.
    pub fn build(inst: &Instance, exact_limit: usize) -> Self {
        match analyze(inst) {
            Ok(analysis) => Self::feasible(&analysis, exact_limit),
            Err(w) => Self::infeasible(inst.n(), &w),
        }
    }

    fn feasible(analysis: &Analysis, exact_limit: usize) -> Self {
        let mut sol = analysis.solution();
        if sol.certificate.m <= exact_limit {
            match exact_by_null_space(&analysis.a, &analysis.b, exact_limit) {
                Ok(Some(o)) => sol.certificate.opt_exact = Some(o.opt),
                Ok(None) => unreachable!("system already known consistent"),
                Err(ExactError::TooLarge { .. }) => {}
                Err(e) => panic!("kernel enumeration failed on a consistent system: {e}"),
            }
        }
        let c = &sol.certificate;
        let bound = c.mixed_bound();
        Self {
            feasible: true,
            press: Some(sol.pressed()),
            sol: Some(sol.weight),
            r: c.r,
            m: c.m,
            g0: Some(c.g0),
            g1: Some(c.g1),
            bound_rank: Some(c.r),
            bound_mixed_numerator: Some(*bound.numer()),
            bound_mixed_denominator: Some(*bound.denom()),
            opt: c.opt_exact,
            witness: None,
        }
    }

    fn infeasible(n: usize, w: &Inconsistency) -> Self {
        Self {
            feasible: false,
            press: None,
            sol: None,
            r: w.rank,
            m: n - w.rank,
            g0: None,
            g1: None,
            bound_rank: None,
            bound_mixed_numerator: None,
            bound_mixed_denominator: None,
            opt: None,
            witness: Some(w.rows()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.feasible {
            let _ = writeln!(out, "infeasible");
            let _ = writeln!(out, "r = {}, m = {}", self.r, self.m);
            if let Some(w) = &self.witness {
                let _ = writeln!(out, "witness lamps (odd parity that no press set changes): {}", join(w));
            }
            return out;
        }
        let _ = writeln!(out, "feasible");
        let _ = writeln!(out, "press = [{}]", join(self.press.as_deref().unwrap_or_default()));
        let sol = self.sol.unwrap_or_default();
        let _ = writeln!(out, "sol = {sol}");
        let _ = writeln!(out, "r = {}, m = {}, g0 = {}, g1 = {}", self.r, self.m, self.g0.unwrap_or(0), self.g1.unwrap_or(0));
        let (num, den) = (self.bound_mixed_numerator.unwrap_or(0), self.bound_mixed_denominator.unwrap_or(1));
        let mixed = if den == 1 { num.to_string() } else { format!("{num}/{den}") };
        let _ = writeln!(out, "bounds: sol <= r = {}, sol <= (n + g1 - g0)/2 = {mixed}", self.r);
        match self.opt {
            Some(opt) => {
                let _ = writeln!(out, "opt = {opt} (gap {})", sol - opt);
            }
            None => {
                let _ = writeln!(out, "opt not computed (m = {} above exact limit)", self.m);
            }
        }
        out
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lamp::SwitchType;

    #[test]
    fn k2_json() {
        let inst = Instance::classic(2, [(0, 1)]).unwrap();
        let json = SolveReport::build(&inst, 20).to_json();
        assert_eq!(
            json,
            r#"{"feasible":true,"press":[0],"sol":1,"r":1,"m":1,"g0":0,"g1":0,"boundRank":1,"boundMixedNumerator":1,"boundMixedDenominator":1,"opt":1}"#
        );
    }

    #[test]
    fn exact_limit_skips_opt() {
        let inst = Instance::classic(2, [(0, 1)]).unwrap();
        let r = SolveReport::build(&inst, 0);
        assert_eq!(r.opt, None);
        assert!(r.to_text().contains("opt not computed"));
    }

    #[test]
    fn infeasible_json() {
        let inst = Instance::classic(1, []).unwrap().with_all_switches(SwitchType::Sigma);
        let r = SolveReport::build(&inst, 20);
        assert_eq!(r.to_json(), r#"{"feasible":false,"r":0,"m":1,"witness":[0]}"#);
        assert!(r.to_text().starts_with("infeasible"));
    }
}
