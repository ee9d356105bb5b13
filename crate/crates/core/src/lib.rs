//! Solvers for the minimum generalized all-ones problem.
//!
//! Every vertex of a graph carries a lamp and a button. A `σ⁺` button toggles
//! its own lamp and its neighbours'; a `σ` button toggles only the
//! neighbours'. Given arbitrary initial lamp states, [`approx::solve_approx`]
//! decides whether all lamps can be lit and returns a press set of weight at
//! most `min(r, (n + opt) / 2)`, where `r` is the rank of the modified
//! adjacency matrix. [`exact`] holds brute-force optima to check against.

pub mod approx;
pub mod bench;
pub mod check;
pub mod exact;
pub mod gf2;
pub mod io;
pub mod lamp;
pub mod report;

pub use approx::{solve_approx, Outcome};
pub use gf2::{BitMatrix, BitVector};
pub use lamp::{build_system, simulate_presses, Certificate, Instance, Solution, SwitchType};
