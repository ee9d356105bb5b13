//! Lamp/switch instances and their translation into `A·u = b` over GF(2).

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::gf2::{BitMatrix, BitVector};

/// What a button toggles when pressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SwitchType {
    /// Toggles the vertex's own lamp and its neighbours' lamps.
    SigmaPlus,
    /// Toggles only the neighbours' lamps.
    Sigma,
}

impl SwitchType {
    pub fn symbol(self) -> char {
        match self {
            SwitchType::SigmaPlus => '+',
            SwitchType::Sigma => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '+' => Some(SwitchType::SigmaPlus),
            '-' => Some(SwitchType::Sigma),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {index} out of range for {n} vertices")]
    OutOfRange { index: usize, n: usize },
    #[error("{what} has length {found}, expected {expected}")]
    LengthMismatch { what: &'static str, expected: usize, found: usize },
}

/// A simple undirected graph with a switch type and an initial lamp state on
/// every vertex.
///
/// Edges are stored normalized (`i < j`) and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    edges: Vec<(usize, usize)>,
    switches: Vec<SwitchType>,
    initially_on: BitVector,
}

impl Instance {
    pub fn new<I>(
        n: usize,
        edges: I,
        switches: Vec<SwitchType>,
        initially_on: BitVector,
    ) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if switches.len() != n {
            return Err(InstanceError::LengthMismatch { what: "switch list", expected: n, found: switches.len() });
        }
        if initially_on.len() != n {
            return Err(InstanceError::LengthMismatch {
                what: "initial lamp state",
                expected: n,
                found: initially_on.len(),
            });
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            for index in [i, j] {
                if index >= n {
                    return Err(InstanceError::OutOfRange { index, n });
                }
            }
            if i == j {
                return Err(InstanceError::SelfLoop(i));
            }
            if !set.insert((i.min(j), i.max(j))) {
                return Err(InstanceError::DuplicateEdge(i, j));
            }
        }
        Ok(Self { n, edges: set.into_iter().collect(), switches, initially_on })
    }

    /// Classic all-ones setup: every switch `σ⁺`, every lamp off.
    pub fn classic<I>(n: usize, edges: I) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, edges, vec![SwitchType::SigmaPlus; n], BitVector::zeros(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn switches(&self) -> &[SwitchType] {
        &self.switches
    }

    pub fn initially_on(&self) -> &BitVector {
        &self.initially_on
    }

    pub fn with_switches(mut self, switches: Vec<SwitchType>) -> Result<Self, InstanceError> {
        if switches.len() != self.n {
            return Err(InstanceError::LengthMismatch { what: "switch list", expected: self.n, found: switches.len() });
        }
        self.switches = switches;
        Ok(self)
    }

    pub fn with_all_switches(mut self, kind: SwitchType) -> Self {
        self.switches = vec![kind; self.n];
        self
    }

    pub fn with_initially_on(mut self, on: BitVector) -> Result<Self, InstanceError> {
        if on.len() != self.n {
            return Err(InstanceError::LengthMismatch { what: "initial lamp state", expected: self.n, found: on.len() });
        }
        self.initially_on = on;
        Ok(self)
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }
}

/// The modified adjacency matrix `A` and the target vector `b` of lamps that
/// must change state.
///
/// `a_ij = 1` for every edge, `a_ii = 1` exactly for `σ⁺` switches, and
/// `b_i = 1` exactly when lamp `i` starts off.
pub fn build_system(inst: &Instance) -> (BitMatrix, BitVector) {
    let n = inst.n();
    let mut a = BitMatrix::zeros(n, n);
    for &(i, j) in inst.edges() {
        a.set(i, j, true);
        a.set(j, i, true);
    }
    for (i, s) in inst.switches().iter().enumerate() {
        if *s == SwitchType::SigmaPlus {
            a.set(i, i, true);
        }
    }
    (a, inst.initially_on().complement())
}

/// Final lamp states after pressing every button selected by `press`.
///
/// Works directly on the graph, without going through [`build_system`].
pub fn simulate_presses(inst: &Instance, press: &BitVector) -> BitVector {
    assert_eq!(press.len(), inst.n(), "press vector has the wrong length");
    let mut state = inst.initially_on().clone();
    let adj = inst.neighbors();
    for v in press.ones_iter() {
        if inst.switches()[v] == SwitchType::SigmaPlus {
            state.flip(v);
        }
        for &w in &adj[v] {
            state.flip(w);
        }
    }
    state
}

pub fn is_all_on(state: &BitVector) -> bool {
    state.is_all_ones()
}

/// Quantities that bound the weight of a solution produced by the
/// echelon-greedy solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// Rank of `A`.
    pub r: usize,
    /// Corank of `A`.
    pub m: usize,
    /// Forced non-presses (zeros of the particular solution on part 0).
    pub g0: usize,
    /// Forced presses (ones of the particular solution on part 0).
    pub g1: usize,
    pub opt_exact: Option<usize>,
}

impl Certificate {
    pub fn n(&self) -> usize {
        self.r + self.m
    }

    /// `(n + g1 - g0) / 2`, in lowest terms.
    pub fn mixed_bound(&self) -> Ratio<u64> {
        Ratio::new((self.n() + self.g1 - self.g0) as u64, 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub press: BitVector,
    pub weight: usize,
    pub certificate: Certificate,
}

impl Solution {
    pub fn new(press: BitVector, certificate: Certificate) -> Self {
        let weight = press.weight();
        Self { press, weight, certificate }
    }

    pub fn pressed(&self) -> Vec<usize> {
        self.press.ones_iter().collect()
    }

    /// `weight <= r`.
    pub fn meets_rank_bound(&self) -> bool {
        self.weight <= self.certificate.r
    }

    /// `2·weight <= n + g1 - g0`.
    pub fn meets_mixed_bound(&self) -> bool {
        let c = &self.certificate;
        2 * self.weight + c.g0 <= c.n() + c.g1
    }

    /// `g1 <= opt <= weight` and `2·weight <= n + opt`; `None` without an exact optimum.
    pub fn meets_opt_sandwich(&self) -> Option<bool> {
        let c = &self.certificate;
        c.opt_exact.map(|opt| c.g1 <= opt && opt <= self.weight && 2 * self.weight <= c.n() + opt)
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sol={} press={:?}", self.weight, self.pressed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Instance {
        Instance::classic(2, [(0, 1)]).unwrap()
    }

    #[test]
    fn k2_system() {
        let (a, b) = build_system(&k2());
        assert_eq!(a, BitMatrix::from_bits(&[[1u8, 1], [1, 1]]));
        assert_eq!(b, BitVector::from_bits(&[1, 1]));
    }

    #[test]
    fn single_sigma_vertex() {
        let inst = Instance::new(1, [], vec![SwitchType::Sigma], BitVector::zeros(1)).unwrap();
        let (a, b) = build_system(&inst);
        assert_eq!(a, BitMatrix::from_bits(&[[0u8]]));
        assert_eq!(b, BitVector::from_bits(&[1]));
    }

    #[test]
    fn path_with_middle_lamp_on() {
        let inst = Instance::classic(3, [(0, 1), (1, 2)])
            .unwrap()
            .with_initially_on(BitVector::from_bits(&[0, 1, 0]))
            .unwrap();
        let (a, b) = build_system(&inst);
        assert_eq!(a, BitMatrix::from_bits(&[[1u8, 1, 0], [1, 1, 1], [0, 1, 1]]));
        assert_eq!(b, BitVector::from_bits(&[1, 0, 1]));
        assert!(a.is_symmetric());
    }

    #[test]
    fn simulate_k2() {
        let inst = k2();
        assert_eq!(simulate_presses(&inst, &BitVector::from_bits(&[1, 0])), BitVector::ones(2));
        assert_eq!(simulate_presses(&inst, &BitVector::zeros(2)), *inst.initially_on());
    }

    #[test]
    fn sigma_press_leaves_own_lamp() {
        let inst = Instance::new(2, [(0, 1)], vec![SwitchType::Sigma, SwitchType::SigmaPlus], BitVector::zeros(2))
            .unwrap();
        assert_eq!(simulate_presses(&inst, &BitVector::from_bits(&[1, 0])), BitVector::from_bits(&[0, 1]));
    }

    #[test]
    fn all_on_predicate() {
        assert!(is_all_on(&BitVector::ones(5)));
        assert!(!is_all_on(&BitVector::zeros(3)));
        assert!(is_all_on(&BitVector::zeros(0)));
    }

    #[test]
    fn invalid_instances() {
        assert_eq!(Instance::classic(3, [(1, 1)]).unwrap_err(), InstanceError::SelfLoop(1));
        assert_eq!(Instance::classic(3, [(0, 1), (1, 0)]).unwrap_err(), InstanceError::DuplicateEdge(1, 0));
        assert_eq!(Instance::classic(3, [(0, 3)]).unwrap_err(), InstanceError::OutOfRange { index: 3, n: 3 });
        assert!(matches!(
            Instance::new(2, [], vec![SwitchType::Sigma], BitVector::zeros(2)),
            Err(InstanceError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn edges_are_normalized() {
        let inst = Instance::classic(4, [(3, 1), (2, 0)]).unwrap();
        assert_eq!(inst.edges(), &[(0, 2), (1, 3)]);
    }

    #[test]
    fn mixed_bound_is_exact() {
        let c = Certificate { r: 4, m: 1, g0: 2, g1: 1, opt_exact: None };
        assert_eq!(c.mixed_bound(), Ratio::new(2, 1));
        let c = Certificate { r: 5, m: 2, g0: 0, g1: 0, opt_exact: None };
        assert_eq!(c.mixed_bound(), Ratio::new(7, 2));
    }
}
