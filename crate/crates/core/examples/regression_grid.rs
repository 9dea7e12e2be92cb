//! Scan the full regression grid under a truncation cap.
//!
//! cargo run --release --example regression_grid -- [cap]

use std::time::Instant;

use regulus::congruence::catalog::regression_grid;
use regulus::congruence::{Outcome, Verifier, DEFAULT_MAX_TRUNCATION};

fn main() {
    let cap = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_TRUNCATION);
    let claims = regression_grid();
    let start = Instant::now();
    let results = Verifier::new(cap).verify_all(&claims, 200, true).expect("clipped scans fit");
    let failed: Vec<_> = results.iter().filter(|r| r.is_counterexample()).collect();
    let skipped = results.iter().filter(|r| r.outcome == Outcome::Skipped).count();
    let clipped = results.iter().filter(|r| r.clipped()).count() - skipped;
    println!(
        "{} claims in {:.1?}: {} counterexamples, {} clipped, {} skipped (cap {cap})",
        claims.len(),
        start.elapsed(),
        failed.len(),
        clipped,
        skipped
    );
    for r in failed {
        println!("  {} {:?}", r.claim, r.outcome);
    }
}
