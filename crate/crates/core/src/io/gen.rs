//! Deterministic instance generators.
//!
//! Every generator returns the classic setup (all `σ⁺`, all lamps off);
//! [`randomize_labels`] re-draws switch types and lamp states.
//!
//! Randomness comes from SplitMix64 with explicitly specified sampling, so a
//! seed pins the output independently of any `rand` distribution code:
//! a Bernoulli(p) draw is `next_u64() < floor(p · 2^64)` (always true when
//! `p >= 1`), and a uniform index below `k` is `(next_u64() · k) >> 64`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::gf2::BitVector;
use crate::lamp::{Instance, SwitchType};

#[derive(Clone, Debug)]
pub struct Sampler(SplitMix64);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        if p >= 1.0 {
            // Still consume a draw so streams stay aligned across p.
            self.next_u64();
            return true;
        }
        let threshold = (p.max(0.0) * 18_446_744_073_709_551_616.0) as u64;
        self.next_u64() < threshold
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((u128::from(self.next_u64()) * u128::from(bound)) >> 64) as u64
    }
}

fn classic(n: usize, edges: Vec<(usize, usize)>) -> Instance {
    Instance::classic(n, edges).expect("generator produced a simple graph")
}

pub fn path(n: usize) -> Instance {
    classic(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Simple cycle for `n >= 3`; below that the path on `n` vertices.
pub fn cycle(n: usize) -> Instance {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    classic(n, edges)
}

pub fn complete(n: usize) -> Instance {
    classic(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
}

/// `w × h` grid with 4-neighbourhood; vertex `(x, y)` is `y·w + x`.
pub fn grid(w: usize, h: usize) -> Instance {
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            let v = y * w + x;
            if x + 1 < w {
                edges.push((v, v + 1));
            }
            if y + 1 < h {
                edges.push((v, v + w));
            }
        }
    }
    classic(w * h, edges)
}

/// Erdős–Rényi `G(n, p)`: pairs `(i, j)`, `i < j`, drawn in row-major order.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Instance {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = Sampler::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.bernoulli(p) {
                edges.push((i, j));
            }
        }
    }
    classic(n, edges)
}

/// Random recursive tree: vertex `i > 0` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Instance {
    let mut rng = Sampler::new(seed);
    classic(n, (1..n).map(|i| (rng.below(i as u64) as usize, i)).collect())
}

/// Redraws every switch (`σ` with probability `sigma_p`) and lamp (on with
/// probability `on_p`), switches first.
pub fn randomize_labels(inst: Instance, sigma_p: f64, on_p: f64, seed: u64) -> Instance {
    let mut rng = Sampler::new(seed);
    let n = inst.n();
    let switches = (0..n)
        .map(|_| if rng.bernoulli(sigma_p) { SwitchType::Sigma } else { SwitchType::SigmaPlus })
        .collect();
    let on: BitVector = (0..n).map(|_| rng.bernoulli(on_p)).collect();
    inst.with_switches(switches).and_then(|i| i.with_initially_on(on)).expect("labels sized to the instance")
}

/// `G(n, p)` with fair-coin switch types and lamp states.
pub fn random_mixed(n: usize, p: f64, seed: u64) -> Instance {
    let graph = random_gnp(n, p, seed);
    randomize_labels(graph, 0.5, 0.5, seed ^ 0x9e37_79b9_7f4a_7c15)
}
