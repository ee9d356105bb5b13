//! Mixed σ / σ⁺ buttons and arbitrary starting lamps, where a solution may
//! not exist.
//!
//! ```bash
//! cargo run -p allones --example mixed_switches
//! ```

use allones::io::parse;
use allones::{simulate_presses, solve_approx, Outcome};

const SOLVABLE: &str = "\
# a 5-cycle with two neighbour-only buttons
allones 5
switches +-+-+
on 10010
e 0 1
e 1 2
e 2 3
e 3 4
e 4 0
";

// Vertex 3 is isolated with a σ button and its lamp off: nothing can reach it.
const STUCK: &str = "\
allones 4
switches +++-
on 0000
e 0 1
e 1 2
";

fn main() {
    for (name, text) in [("solvable", SOLVABLE), ("stuck", STUCK)] {
        let inst = parse(text).expect("valid instance file");
        match solve_approx(&inst) {
            Outcome::Feasible(sol) => {
                println!("{name}: press {:?} (sol = {})", sol.pressed(), sol.weight);
                println!("  final lamps {}", simulate_presses(&inst, &sol.press));
            }
            Outcome::Infeasible(w) => {
                println!("{name}: infeasible");
                println!("  equations {:?} sum to 0 = 1", w.rows());
            }
        }
    }
}
