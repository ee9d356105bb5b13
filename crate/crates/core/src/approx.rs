//! Echelon-greedy approximation for the minimum all-ones problem.
//!
//! The solution set of `A·u = b` is `{epsilon·z ⊕ gamma}` after the kernel
//! basis has been put in grouped column echelon form. Part `i` of the rows
//! depends only on `z_1..z_i`, and `z_i` flips every row of the part, so the
//! coefficients can be fixed one part at a time by majority vote. Every part
//! then contributes at most half of its rows to the press count, and part 0
//! is forced by `gamma`.

use num_rational::Ratio;

use crate::gf2::{solve, BitMatrix, BitVector, EchelonDecomposition, GeneralSolution, Inconsistency, Solve};
use crate::lamp::{build_system, Certificate, Instance, Solution};

/// Coefficients chosen by the greedy pass and the resulting press vector in
/// grouped row order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyAssignment {
    pub z: BitVector,
    pub u_permuted: BitVector,
}

/// Majority vote per part. Ties keep `z_i = 0`.
pub fn greedy_assign(dec: &EchelonDecomposition) -> GreedyAssignment {
    let m = dec.m();
    let mut u = dec.gamma_permuted().clone();
    let mut z = BitVector::zeros(m);
    for i in 1..=m {
        let range = dec.part_range(i);
        let size = range.len();
        // `u` already carries epsilon[j][p]·z_p for p < i; with z_i = 0 its
        // ones in this part are the mismatches.
        let cnt = u.weight_in(range.start, range.end);
        if 2 * cnt > size {
            z.set(i - 1, true);
            u.xor_assign(dec.column(i - 1));
        }
    }
    GreedyAssignment { z, u_permuted: u }
}

/// Maps a grouped-order vector back to original vertex order.
pub fn unpermute(dec: &EchelonDecomposition, u_permuted: &BitVector) -> BitVector {
    dec.perm().apply_inverse(u_permuted)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub g0: usize,
    pub g1: usize,
    pub rank_bound: usize,
    /// `(n + g1 - g0) / 2`.
    pub mixed_bound: Ratio<u64>,
}

pub fn compute_bounds(dec: &EchelonDecomposition, n: usize, r: usize) -> Bounds {
    let k0 = dec.parts()[0];
    let g1 = dec.gamma_permuted().weight_in(0, k0);
    let g0 = k0 - g1;
    Bounds { g0, g1, rank_bound: r, mixed_bound: Ratio::new((n + g1 - g0) as u64, 2) }
}

/// Everything the greedy pass needs, kept so it can be rerun cheaply.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub a: BitMatrix,
    pub b: BitVector,
    pub general: GeneralSolution,
    pub decomposition: EchelonDecomposition,
}

impl Analysis {
    /// Runs the greedy pass on the cached decomposition.
    pub fn solution(&self) -> Solution {
        let greedy = greedy_assign(&self.decomposition);
        let press = unpermute(&self.decomposition, &greedy.u_permuted);
        let n = self.general.vars();
        let bounds = compute_bounds(&self.decomposition, n, self.general.rank);
        Solution::new(
            press,
            Certificate { r: self.general.rank, m: self.general.corank(), g0: bounds.g0, g1: bounds.g1, opt_exact: None },
        )
    }

    pub fn bounds(&self) -> Bounds {
        compute_bounds(&self.decomposition, self.general.vars(), self.general.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Feasible(Solution),
    Infeasible(Inconsistency),
}

impl Outcome {
    pub fn solution(&self) -> Option<&Solution> {
        match self {
            Outcome::Feasible(s) => Some(s),
            Outcome::Infeasible(_) => None,
        }
    }

    pub fn into_solution(self) -> Option<Solution> {
        match self {
            Outcome::Feasible(s) => Some(s),
            Outcome::Infeasible(_) => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Outcome::Feasible(_))
    }
}

/// Solves, decomposes and caches an arbitrary square or rectangular system.
pub fn analyze_system(a: BitMatrix, b: BitVector) -> Result<Analysis, Inconsistency> {
    let general = match solve(&a, &b).expect("system built with matching dimensions") {
        Solve::Consistent(g) => g,
        Solve::Inconsistent(w) => return Err(w),
    };
    let decomposition = EchelonDecomposition::new(&general.null_basis, &general.particular)
        .expect("kernel basis from elimination has full column rank");
    Ok(Analysis { a, b, general, decomposition })
}

pub fn analyze(inst: &Instance) -> Result<Analysis, Inconsistency> {
    let (a, b) = build_system(inst);
    analyze_system(a, b)
}

/// Echelon-greedy solution for `inst`, or the reason none exists.
///
/// A returned solution satisfies `weight <= r` and `2·weight <= n + g1 - g0`.
pub fn solve_approx(inst: &Instance) -> Outcome {
    match analyze(inst) {
        Ok(analysis) => Outcome::Feasible(analysis.solution()),
        Err(w) => Outcome::Infeasible(w),
    }
}
