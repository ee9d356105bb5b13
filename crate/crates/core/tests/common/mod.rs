//! Test-only oracles on plain `Vec<bool>`, sharing no code with the packed
//! implementation.

#![allow(dead_code)]

use allones::{BitMatrix, BitVector, Instance, SwitchType};

pub type Dense = Vec<Vec<bool>>;

pub fn dense(m: &BitMatrix) -> Dense {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect()
}

pub fn bools(v: &BitVector) -> Vec<bool> {
    v.iter().collect()
}

/// Row reduction on booleans, one bit at a time.
pub fn naive_rank(mut rows: Dense) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn naive_mat_vec(rows: &Dense, v: &[bool]) -> Vec<bool> {
    rows.iter().map(|r| r.iter().zip(v).filter(|(a, b)| **a && **b).count() % 2 == 1).collect()
}

/// Lamp states after pressing, computed from the edge list alone.
pub fn naive_simulate(inst: &Instance, press: &[bool]) -> Vec<bool> {
    let mut state = bools(inst.initially_on());
    for (v, &p) in press.iter().enumerate() {
        if !p {
            continue;
        }
        if inst.switches()[v] == SwitchType::SigmaPlus {
            state[v] ^= true;
        }
        for &(a, b) in inst.edges() {
            if a == v {
                state[b] ^= true;
            } else if b == v {
                state[a] ^= true;
            }
        }
    }
    state
}

/// All `x` with `A·x = b`, by trying every vector (`cols <= 16`).
pub fn all_solutions(a: &Dense, b: &[bool], cols: usize) -> Vec<Vec<bool>> {
    (0u32..1 << cols)
        .map(|mask| (0..cols).map(|i| (mask >> i) & 1 == 1).collect::<Vec<bool>>())
        .filter(|x| naive_mat_vec(a, x) == b)
        .collect()
}

/// `{basis·x ⊕ offset}` as sorted strings, enumerating every `x`.
pub fn affine_set(columns: &[Vec<bool>], offset: &[bool]) -> Vec<String> {
    let m = columns.len();
    let mut out: Vec<String> = (0u64..1 << m)
        .map(|mask| {
            let mut u = offset.to_vec();
            for (k, c) in columns.iter().enumerate() {
                if (mask >> k) & 1 == 1 {
                    for (x, y) in u.iter_mut().zip(c) {
                        *x ^= *y;
                    }
                }
            }
            u.iter().map(|&b| if b { '1' } else { '0' }).collect()
        })
        .collect();
    out.sort();
    out
}

pub fn columns_of(m: &BitMatrix) -> Vec<Vec<bool>> {
    (0..m.cols()).map(|j| bools(&m.column(j))).collect()
}
