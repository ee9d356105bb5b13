//! Compares the approximate solution with the exact optimum on random
//! instances and prints the certified bounds.
//!
//! ```bash
//! cargo run -p allones --example oracle_sandwich
//! ```

use allones::exact::{exact_by_press_enumeration, PRESS_LIMIT};
use allones::io::gen;
use allones::solve_approx;

fn main() {
    println!("{:>4} {:>3} {:>3} {:>3} {:>3} {:>4} {:>4} {:>9}", "seed", "n", "r", "m", "g1", "opt", "sol", "(n+opt)/2");
    let mut gaps = 0;
    for seed in 0..40u64 {
        let inst = gen::random_mixed(16, 0.25, seed);
        let Some(sol) = solve_approx(&inst).into_solution() else {
            println!("{seed:>4}  infeasible");
            continue;
        };
        let opt = exact_by_press_enumeration(&inst, PRESS_LIMIT).unwrap().expect("oracle agrees on feasibility").opt;
        let c = &sol.certificate;
        if sol.weight > opt {
            gaps += 1;
        }
        println!(
            "{seed:>4} {:>3} {:>3} {:>3} {:>3} {opt:>4} {:>4} {:>9.1}",
            inst.n(),
            c.r,
            c.m,
            c.g1,
            sol.weight,
            (inst.n() + opt) as f64 / 2.0
        );
        assert!(c.g1 <= opt && opt <= sol.weight && sol.weight <= c.r && 2 * sol.weight <= inst.n() + opt);
    }
    println!("{gaps} instances where sol > opt");
}
