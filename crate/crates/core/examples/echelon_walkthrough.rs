//! Step-by-step view of the echelon-greedy pass on a small graph: kernel
//! basis, grouped column echelon form, and the majority vote per part.
//!
//! ```bash
//! cargo run -p allones --example echelon_walkthrough
//! ```

use allones::approx::{analyze, compute_bounds, greedy_assign, unpermute};
use allones::io::gen;

fn main() {
    // K4 with a pendant vertex: corank 2, small enough to print.
    let inst = gen::complete(4);
    let inst = allones::Instance::classic(5, inst.edges().iter().copied().chain([(3, 4)])).unwrap();
    let an = analyze(&inst).expect("σ⁺ always feasible");
    let g = &an.general;
    println!("A =\n{}\n", an.a);
    println!("rank r = {}, corank m = {}", g.rank, g.corank());
    println!("particular solution gamma = {}", g.particular);
    println!("kernel basis (columns) =\n{}\n", g.null_basis);

    let dec = &an.decomposition;
    println!("row order after grouping: {:?}", dec.perm().inverse_map());
    println!("epsilon (grouped rows) =\n{}", dec.epsilon());
    println!("part ends k = {:?}", dec.parts());
    println!("gamma (grouped) = {}\n", dec.gamma_permuted());

    let greedy = greedy_assign(dec);
    for i in 1..=dec.m() {
        let r = dec.part_range(i);
        println!("part {i}: rows {r:?}, z_{i} = {}", u8::from(greedy.z.get(i - 1)));
    }
    let press = unpermute(dec, &greedy.u_permuted);
    let bounds = compute_bounds(dec, inst.n(), g.rank);
    println!("\npress = {press} (weight {})", press.weight());
    println!("g0 = {}, g1 = {}, bounds: r = {}, (n + g1 - g0)/2 = {}", bounds.g0, bounds.g1, bounds.rank_bound, bounds.mixed_bound);
}
