//! Timing on a 1000-vertex random graph, and rerunning the greedy pass on a
//! cached decomposition.
//!
//! ```bash
//! cargo run --release -p allones --example large_instance
//! ```

use std::time::Instant;

use allones::approx::analyze;
use allones::io::gen;
use allones::simulate_presses;

fn main() {
    let n = 1000;
    let inst = gen::random_gnp(n, 0.01, 2024);
    println!("n = {n}, edges = {}", inst.edges().len());

    let t = Instant::now();
    let an = analyze(&inst).expect("σ⁺ always feasible");
    let elim = t.elapsed();
    let sol = an.solution();
    println!("elimination + echelon: {elim:.2?}; r = {}, m = {}", an.general.rank, an.general.corank());

    let reps = 1000;
    let t = Instant::now();
    for _ in 0..reps {
        std::hint::black_box(an.solution());
    }
    println!("greedy on cached decomposition: {:.2?} per run", t.elapsed() / reps);
    println!("sol = {} (bounded by r = {})", sol.weight, sol.certificate.r);
    assert!(simulate_presses(&inst, &sol.press).is_all_ones());
}
