//! The seeded random corpus through the library API, with the report as JSON.
//!
//! ```bash
//! ALLONES_THREADS=2 cargo run --release -p allones --example bench_corpus
//! ```

use allones::bench::{run, BenchConfig};

fn main() {
    let config = BenchConfig { sizes: vec![8, 12, 16], trials: 100, seed: 42, ..Default::default() };
    let report = run(&config);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    assert_eq!(report.total_violations, 0, "{:?}", report.violation_samples);
}
