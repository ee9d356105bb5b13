//! Brute-force optima, used as oracles for the approximate solver.
//!
//! [`exact_by_null_space`] walks the `2^m` solutions of `A·u = b` in Gray-code
//! order; [`exact_by_press_enumeration`] tries all `2^n` press vectors on the
//! graph itself and never touches the linear algebra.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::gf2::{solve, BitMatrix, BitVector, LinalgError, Solve};
use crate::lamp::{Instance, SwitchType};

/// Default cap on the kernel dimension for [`exact_by_null_space`].
pub const NULL_SPACE_LIMIT: usize = 24;
/// Default cap on the vertex count for [`exact_by_press_enumeration`].
pub const PRESS_LIMIT: usize = 20;

// Below this many free variables a single thread walks the whole cube.
const PARALLEL_MIN_M: usize = 16;
const SPLIT_BITS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("search space too large: {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimum {
    pub opt: usize,
    pub argmin: BitVector,
}

/// Minimum-weight solution of `A·u = b` by enumerating the kernel.
///
/// `Ok(None)` means the system is inconsistent. Among minimizers
/// the coefficient vector `x` that is lexicographically smallest (`x_0`
/// compared first) wins.
pub fn exact_by_null_space(a: &BitMatrix, b: &BitVector, limit: usize) -> Result<Option<Optimum>, ExactError> {
    let general = match solve(a, b)? {
        Solve::Consistent(g) => g,
        Solve::Inconsistent(_) => return Ok(None),
    };
    let m = general.corank();
    if m > limit || m >= 64 {
        return Err(ExactError::TooLarge { size: m, limit });
    }
    let basis: Vec<BitVector> = general.null_basis.transpose().into_rows();
    let gamma = &general.particular;

    let best = if m < PARALLEL_MIN_M {
        walk(&basis, gamma, 0, m)
    } else {
        let high = SPLIT_BITS.min(m);
        (0u64..1 << high)
            .into_par_iter()
            .map(|prefix| walk(&basis, gamma, prefix, m - high))
            .reduce(|| (usize::MAX, 0), pick)
    };
    let argmin = combine(&basis, gamma, best.1);
    Ok(Some(Optimum { opt: best.0, argmin }))
}

// Lexicographic key for x with x_0 most significant.
fn lex_key(x: u64, m: usize) -> u64 {
    if m == 0 {
        0
    } else {
        x.reverse_bits() >> (64 - m)
    }
}

fn pick(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    match a.0.cmp(&b.0) {
        Ordering::Less => a,
        Ordering::Greater => b,
        Ordering::Equal => {
            // Keys are over the same bit width, so any leading zeros cancel.
            if a.1.reverse_bits() <= b.1.reverse_bits() {
                a
            } else {
                b
            }
        }
    }
}

fn combine(basis: &[BitVector], gamma: &BitVector, x: u64) -> BitVector {
    let mut u = gamma.clone();
    for (k, col) in basis.iter().enumerate() {
        if (x >> k) & 1 == 1 {
            u.xor_assign(col);
        }
    }
    u
}

/// Gray-code walk over the `low` least significant coefficients with the
/// higher ones fixed to `prefix`. Returns (best weight, x).
fn walk(basis: &[BitVector], gamma: &BitVector, prefix: u64, low: usize) -> (usize, u64) {
    let m = basis.len();
    let fixed = prefix << low;
    let mut u = combine(basis, gamma, fixed);
    let mut x = fixed;
    let mut best = (u.weight(), x);
    let mut best_key = lex_key(x, m);
    for step in 1u64..(1u64 << low) {
        let bit = step.trailing_zeros() as usize;
        u.xor_assign(&basis[bit]);
        x ^= 1 << bit;
        let w = u.weight();
        if w < best.0 || (w == best.0 && lex_key(x, m) < best_key) {
            best = (w, x);
            best_key = lex_key(x, m);
        }
    }
    best
}

/// Minimum-weight press vector by trying every subset of buttons.
///
/// `Ok(None)` means no press vector lights every lamp. Ties go to the
/// lexicographically smallest press vector (vertex 0 compared first).
pub fn exact_by_press_enumeration(inst: &Instance, limit: usize) -> Result<Option<Optimum>, ExactError> {
    let n = inst.n();
    if n > limit || n >= 64 {
        return Err(ExactError::TooLarge { size: n, limit });
    }
    let mut toggles = vec![0u64; n];
    for &(i, j) in inst.edges() {
        toggles[i] |= 1 << j;
        toggles[j] |= 1 << i;
    }
    for (v, s) in inst.switches().iter().enumerate() {
        if *s == SwitchType::SigmaPlus {
            toggles[v] |= 1 << v;
        }
    }
    let all_on = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let start = inst.initially_on().iter().enumerate().fold(0u64, |acc, (i, b)| acc | (u64::from(b) << i));

    let mut state = start;
    let mut press = 0u64;
    let mut best: Option<(u32, u64)> = (state == all_on).then_some((0, 0));
    for step in 1u64..(1u64 << n) {
        let v = step.trailing_zeros() as usize;
        state ^= toggles[v];
        press ^= 1 << v;
        if state == all_on {
            let w = press.count_ones();
            let better = match best {
                None => true,
                Some((bw, bp)) => w < bw || (w == bw && lex_key(press, n) < lex_key(bp, n)),
            };
            if better {
                best = Some((w, press));
            }
        }
    }
    Ok(best.map(|(w, p)| Optimum {
        opt: w as usize,
        argmin: (0..n).map(|i| (p >> i) & 1 == 1).collect(),
    }))
}
