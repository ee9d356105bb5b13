//! Classic 5×5 Lights Out: every button toggles itself and its four
//! neighbours, every lamp starts off.
//!
//! ```bash
//! cargo run -p allones --example lights_out_5x5
//! ```

use allones::exact::{exact_by_null_space, NULL_SPACE_LIMIT};
use allones::io::gen;
use allones::{build_system, simulate_presses, solve_approx};

fn main() {
    let (w, h) = (5, 5);
    let inst = gen::grid(w, h);
    let sol = solve_approx(&inst).into_solution().expect("σ⁺ instances are always solvable");

    println!("press pattern (x = press):");
    for y in 0..h {
        let row: String = (0..w).map(|x| if sol.press.get(y * w + x) { 'x' } else { '.' }).collect();
        println!("  {row}");
    }

    let c = &sol.certificate;
    println!("sol = {}, rank = {}, corank = {}", sol.weight, c.r, c.m);

    let (a, b) = build_system(&inst);
    let opt = exact_by_null_space(&a, &b, NULL_SPACE_LIMIT).unwrap().unwrap().opt;
    println!("opt = {opt} (checked over all 2^{} solutions)", c.m);
    println!("bounds: sol <= r = {}, 2·sol = {} <= n + opt = {}", c.r, 2 * sol.weight, w * h + opt);
    assert!(simulate_presses(&inst, &sol.press).is_all_ones());
}
