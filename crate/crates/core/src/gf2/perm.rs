use super::{BitVector, LinalgError};

/// A bijection on `0..n`. `forward[i]` is where original index `i` lands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowPermutation {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl RowPermutation {
    pub fn identity(n: usize) -> Self {
        Self { forward: (0..n).collect(), inverse: (0..n).collect() }
    }

    /// Validates `forward` as a permutation.
    pub fn from_forward(forward: Vec<usize>) -> Result<Self, LinalgError> {
        let n = forward.len();
        let mut inverse = vec![usize::MAX; n];
        for (i, &f) in forward.iter().enumerate() {
            if f >= n || inverse[f] != usize::MAX {
                return Err(LinalgError::NotAPermutation);
            }
            inverse[f] = i;
        }
        Ok(Self { forward, inverse })
    }

    /// Permutation that places original index `order[k]` at position `k`.
    pub(crate) fn from_order(order: &[usize]) -> Self {
        let mut forward = vec![0; order.len()];
        for (k, &orig) in order.iter().enumerate() {
            forward[orig] = k;
        }
        Self { forward, inverse: order.to_vec() }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse_map(&self) -> &[usize] {
        &self.inverse
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &f)| i == f)
    }

    /// `out[forward[i]] = v[i]`.
    pub fn apply(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.len(), "permutation length mismatch");
        self.inverse.iter().map(|&orig| v.get(orig)).collect()
    }

    /// `out[i] = v[forward[i]]`, undoing [`apply`](Self::apply).
    pub fn apply_inverse(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.len(), "permutation length mismatch");
        self.forward.iter().map(|&dst| v.get(dst)).collect()
    }
}
