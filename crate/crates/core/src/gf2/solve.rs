use super::vector::WORD_BITS;
use super::{BitMatrix, BitVector, LinalgError};

/// All solutions of a consistent system `A·x = b`: `{ particular ⊕ N·c }`
/// where the columns of `null_basis` (`cols × m`) span the kernel of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSolution {
    /// Solution with every free variable set to zero.
    pub particular: BitVector,
    /// `cols × m` matrix; column `k` sets free variable `free_columns[k]` to 1.
    pub null_basis: BitMatrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub free_columns: Vec<usize>,
}

impl GeneralSolution {
    /// Dimension of the solution space.
    pub fn corank(&self) -> usize {
        self.free_columns.len()
    }

    pub fn vars(&self) -> usize {
        self.particular.len()
    }
}

/// Proof that `A·x = b` has no solution: the listed equations sum to `0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    /// Indicator over the rows of `A`.
    pub combination: BitVector,
    pub rank: usize,
}

impl Inconsistency {
    pub fn rows(&self) -> Vec<usize> {
        self.combination.ones_iter().collect()
    }

    /// Checks that the selected rows of `a` cancel while the selected entries
    /// of `b` sum to one.
    pub fn certifies(&self, a: &BitMatrix, b: &BitVector) -> bool {
        if self.combination.len() != a.rows() || b.len() != a.rows() {
            return false;
        }
        let mut sum = BitVector::zeros(a.cols());
        for i in self.combination.ones_iter() {
            sum.xor_assign(a.row(i));
        }
        sum.is_zero() && self.combination.dot(b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solve {
    Consistent(GeneralSolution),
    Inconsistent(Inconsistency),
}

impl Solve {
    pub fn consistent(self) -> Option<GeneralSolution> {
        match self {
            Solve::Consistent(s) => Some(s),
            Solve::Inconsistent(_) => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, Solve::Consistent(_))
    }

    pub fn rank(&self) -> usize {
        match self {
            Solve::Consistent(s) => s.rank,
            Solve::Inconsistent(w) => w.rank,
        }
    }
}

struct Reduced {
    rows: Vec<BitVector>,
    rhs: BitVector,
    pivots: Vec<usize>,
    combos: Option<Vec<BitVector>>,
}

/// Gauss-Jordan elimination to reduced row echelon form. Pivot for each
/// column is the first remaining row (top to bottom) with that bit set.
fn reduce(a: &BitMatrix, b: &BitVector, track: bool) -> Reduced {
    let n_rows = a.rows();
    let mut rows: Vec<BitVector> = a.row_iter().cloned().collect();
    let mut rhs = b.clone();
    let mut combos = track.then(|| (0..n_rows).map(|i| BitVector::unit(n_rows, i)).collect::<Vec<_>>());
    let mut pivots = Vec::new();

    for col in 0..a.cols() {
        let r = pivots.len();
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| rows[i].get(col)) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            let (x, y) = (rhs.get(p), rhs.get(r));
            rhs.set(p, y);
            rhs.set(r, x);
            if let Some(c) = combos.as_mut() {
                c.swap(p, r);
            }
        }
        let pivot = std::mem::take(&mut rows[r]);
        let pivot_rhs = rhs.get(r);
        let first_word = col / WORD_BITS;
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign_from(&pivot, first_word);
                if pivot_rhs {
                    rhs.flip(i);
                }
                if let Some(c) = combos.as_mut() {
                    let (src, dst) = if i < r {
                        let (lo, hi) = c.split_at_mut(r);
                        (&hi[0], &mut lo[i])
                    } else {
                        let (lo, hi) = c.split_at_mut(i);
                        (&lo[r], &mut hi[0])
                    };
                    dst.xor_assign(src);
                }
            }
        }
        rows[r] = pivot;
        pivots.push(col);
    }
    Reduced { rows, rhs, pivots, combos }
}

/// Solves `A·x = b` over GF(2).
///
/// Returns the canonical particular solution (free variables zero) together
/// with the standard kernel basis, or a witness of inconsistency. A length
/// mismatch between `A` and `b` is an error, not an inconsistency.
pub fn solve(a: &BitMatrix, b: &BitVector) -> Result<Solve, LinalgError> {
    if a.rows() != b.len() {
        return Err(LinalgError::DimensionMismatch { context: "solve", expected: a.rows(), found: b.len() });
    }
    let reduced = reduce(a, b, false);
    let rank = reduced.pivots.len();

    if let Some(bad) = (rank..a.rows()).find(|&i| reduced.rhs.get(i)) {
        // Rerun with row-combination tracking only on the failure path.
        let tracked = reduce(a, b, true);
        let combos = tracked.combos.expect("tracking requested");
        debug_assert!(tracked.rhs.get(bad));
        return Ok(Solve::Inconsistent(Inconsistency { combination: combos[bad].clone(), rank }));
    }

    let vars = a.cols();
    let mut is_pivot = vec![false; vars];
    for &c in &reduced.pivots {
        is_pivot[c] = true;
    }
    let free_columns: Vec<usize> = (0..vars).filter(|&c| !is_pivot[c]).collect();

    let mut particular = BitVector::zeros(vars);
    for (i, &c) in reduced.pivots.iter().enumerate() {
        if reduced.rhs.get(i) {
            particular.set(c, true);
        }
    }

    let mut null_basis = BitMatrix::zeros(vars, free_columns.len());
    for (k, &f) in free_columns.iter().enumerate() {
        null_basis.set(f, k, true);
        for (i, &c) in reduced.pivots.iter().enumerate() {
            if reduced.rows[i].get(f) {
                null_basis.set(c, k, true);
            }
        }
    }

    Ok(Solve::Consistent(GeneralSolution {
        particular,
        null_basis,
        rank,
        pivot_columns: reduced.pivots,
        free_columns,
    }))
}
