use std::ops::Range;

use super::vector::WORD_BITS;
use super::{BitMatrix, BitVector, LinalgError, RowPermutation};

/// A kernel basis brought to column echelon form with its rows grouped into
/// parts.
///
/// Part 0 holds the rows of `epsilon` that are entirely zero. Part `i >= 1`
/// holds the rows whose last nonzero column is `i - 1`; each such row has
/// that bit set and nothing to its right. Parts are contiguous and appear in
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonDecomposition {
    epsilon: BitMatrix,
    // Columns of `epsilon` as packed length-n vectors.
    columns: Vec<BitVector>,
    perm: RowPermutation,
    parts: Vec<usize>,
    gamma_permuted: BitVector,
}

impl EchelonDecomposition {
    /// Column-echelon reduction of `null_basis` (`n × m`, full column rank)
    /// followed by a stable grouping of its rows by last nonzero column.
    ///
    /// The column operations form an invertible `Q` that is not kept: the
    /// affine set `{epsilon·z ⊕ gamma_permuted}` is the row-permuted image of
    /// `{null_basis·x ⊕ gamma}`.
    pub fn new(null_basis: &BitMatrix, gamma: &BitVector) -> Result<Self, LinalgError> {
        let n = null_basis.rows();
        let m = null_basis.cols();
        if gamma.len() != n {
            return Err(LinalgError::DimensionMismatch { context: "column echelon", expected: n, found: gamma.len() });
        }

        let mut cols = null_basis.transpose().into_rows();
        let mut done = 0;
        for row in 0..n {
            if done == m {
                break;
            }
            let Some(p) = (done..m).find(|&k| cols[k].get(row)) else {
                continue;
            };
            cols.swap(done, p);
            let (head, tail) = cols.split_at_mut(done + 1);
            let pivot = &head[done];
            for c in tail.iter_mut() {
                if c.get(row) {
                    c.xor_assign_from(pivot, row / WORD_BITS);
                }
            }
            done += 1;
        }
        if done < m {
            return Err(LinalgError::RankDeficient { expected: m, found: done });
        }

        // Last nonzero column per row; ascending k overwrites, leaving the max.
        let mut last: Vec<Option<usize>> = vec![None; n];
        for (k, c) in cols.iter().enumerate() {
            for j in c.ones_iter() {
                last[j] = Some(k);
            }
        }

        // Stable counting sort: zero rows first, then by last column ascending.
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
        for (j, key) in last.iter().enumerate() {
            buckets[key.map_or(0, |k| k + 1)].push(j);
        }
        let mut parts = Vec::with_capacity(m + 1);
        let mut order = Vec::with_capacity(n);
        for bucket in &buckets {
            order.extend_from_slice(bucket);
            parts.push(order.len());
        }
        let perm = RowPermutation::from_order(&order);

        let columns: Vec<BitVector> = cols.iter().map(|c| perm.apply(c)).collect();
        let epsilon = BitMatrix::from_columns(n, &columns);
        let gamma_permuted = perm.apply(gamma);

        Ok(Self { epsilon, columns, perm, parts, gamma_permuted })
    }

    /// The `n × m` column echelon matrix with grouped rows.
    pub fn epsilon(&self) -> &BitMatrix {
        &self.epsilon
    }

    /// Column `i` of `epsilon` as a packed length-n vector.
    pub fn column(&self, i: usize) -> &BitVector {
        &self.columns[i]
    }

    pub fn perm(&self) -> &RowPermutation {
        &self.perm
    }

    /// Part end indices `k_0 <= k_1 <= ... <= k_m = n`.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn gamma_permuted(&self) -> &BitVector {
        &self.gamma_permuted
    }

    pub fn n(&self) -> usize {
        self.gamma_permuted.len()
    }

    /// Number of free variables.
    pub fn m(&self) -> usize {
        self.columns.len()
    }

    /// Row range of part `i` (part 0 is the all-zero block).
    pub fn part_range(&self, i: usize) -> Range<usize> {
        if i == 0 {
            0..self.parts[0]
        } else {
            self.parts[i - 1]..self.parts[i]
        }
    }

    /// `epsilon·z ⊕ gamma_permuted`.
    pub fn evaluate(&self, z: &BitVector) -> BitVector {
        assert_eq!(z.len(), self.m(), "coefficient vector has the wrong length");
        let mut u = self.gamma_permuted.clone();
        for i in z.ones_iter() {
            u.xor_assign(&self.columns[i]);
        }
        u
    }

    /// Describes every violated structural invariant; empty when the
    /// decomposition is well formed.
    pub fn structure_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (n, m) = (self.n(), self.m());
        if self.parts.len() != m + 1 || self.parts.last() != Some(&n) {
            out.push(format!("parts {:?} do not end at n = {n} with m + 1 = {} entries", self.parts, m + 1));
            return out;
        }
        for i in 1..=m {
            if self.parts[i] <= self.parts[i - 1] {
                out.push(format!("part {i} is empty"));
            }
        }
        for j in self.part_range(0) {
            if !self.epsilon.row(j).is_zero() {
                out.push(format!("row {j} in part 0 is nonzero"));
            }
        }
        for i in 1..=m {
            for j in self.part_range(i) {
                if self.epsilon.row(j).last_one() != Some(i - 1) {
                    out.push(format!("row {j} in part {i} has last nonzero column {:?}", self.epsilon.row(j).last_one()));
                }
            }
        }
        out
    }
}
