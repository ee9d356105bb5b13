use std::fmt;

use super::{BitVector, LinalgError};

/// Dense row-major matrix over GF(2). Each row is a packed [`BitVector`] of
/// length `cols`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![BitVector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { cols: n, rows: (0..n).map(|i| BitVector::unit(n, i)).collect() }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![BitVector::ones(cols); rows] }
    }

    /// Builds a matrix from rows that all have length `cols`.
    ///
    /// # Panics
    ///
    /// Panics if any row has the wrong length.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Self {
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has length {} but matrix has {cols} columns", r.len());
        }
        Self { cols, rows }
    }

    /// Builds a matrix from nested 0/1 slices. An empty outer slice gives a 0×0 matrix.
    pub fn from_bits<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        Self::from_rows(cols, rows.iter().map(|r| BitVector::from_bits(r.as_ref())).collect())
    }

    /// Builds an `len × k` matrix whose columns are the given vectors.
    pub fn from_columns(len: usize, columns: &[BitVector]) -> Self {
        let mut m = Self::zeros(len, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), len, "column {j} has the wrong length");
            for i in c.ones_iter() {
                m.rows[i].set(j, true);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &BitVector> {
        self.rows.iter()
    }

    pub(crate) fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> BitVector {
        assert!(j < self.cols, "column {j} out of range");
        self.rows.iter().map(|r| r.get(j)).collect()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones_iter() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows() == self.cols && *self == self.transpose()
    }

    /// `M · v` over GF(2).
    pub fn mat_vec(&self, v: &BitVector) -> Result<BitVector, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    /// `M · N` over GF(2).
    pub fn mat_mul(&self, other: &BitMatrix) -> Result<BitMatrix, LinalgError> {
        if other.rows() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: other.rows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BitVector::zeros(other.cols);
                for k in r.ones_iter() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix { cols: other.cols, rows })
    }

    /// Rank over GF(2). Works on a private copy.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for r in tail.iter_mut() {
                if r.get(col) {
                    r.xor_assign(pivot);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_identity_and_all_ones() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::ones(3, 3).rank(), 1);
        assert_eq!(BitMatrix::zeros(4, 7).rank(), 0);
        assert_eq!(BitMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn rank_leaves_input_untouched() {
        let m = BitMatrix::from_bits(&[[1u8, 1, 0], [1, 1, 0], [0, 1, 1]]);
        let before = m.clone();
        assert_eq!(m.rank(), 2);
        assert_eq!(m, before);
    }

    #[test]
    fn mat_vec_examples() {
        let v = BitVector::from_bits(&[1, 0, 1, 1]);
        assert_eq!(BitMatrix::identity(4).mat_vec(&v).unwrap(), v);
        let m = BitMatrix::from_bits(&[[1u8, 1], [1, 1]]);
        assert_eq!(m.mat_vec(&BitVector::from_bits(&[1, 1])).unwrap(), BitVector::zeros(2));
        assert!(BitMatrix::zeros(5, 4).mat_vec(&v).unwrap().is_zero());
    }

    #[test]
    fn mat_vec_dimension_mismatch() {
        let err = BitMatrix::identity(3).mat_vec(&BitVector::zeros(4)).unwrap_err();
        assert!(matches!(err, LinalgError::DimensionMismatch { expected: 3, found: 4, .. }));
    }

    #[test]
    fn transpose_and_columns() {
        let m = BitMatrix::from_bits(&[[1u8, 0, 1], [0, 1, 1]]);
        let t = m.transpose();
        assert_eq!(t.rows(), 3);
        assert_eq!(t.cols(), 2);
        assert_eq!(t.row(2), &BitVector::from_bits(&[1, 1]));
        assert_eq!(m.column(2), BitVector::from_bits(&[1, 1]));
        assert_eq!(BitMatrix::from_columns(2, &[m.column(0), m.column(1), m.column(2)]), m);
    }
}
