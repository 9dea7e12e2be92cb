//! Search for progressions on which a partition function vanishes mod m.
//!
//! cargo run --example discovery_search -- [function] [m] [a_max] [n_count]

use regulus::congruence::Verifier;
use regulus::partitions::PartitionFunction;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let function: PartitionFunction = args.first().map_or("b5", String::as_str).parse().expect("p, b<l> or bd<p>");
    let arg = |i: usize, default: u64| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(default);
    let (m, a_max, n_count) = (arg(1, 2), arg(2, 20), arg(3, 500));

    let hits = Verifier::default().search(function, m, a_max, a_max, n_count).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(3);
    });
    println!("{function} mod {m}, A <= {a_max}, checked {n_count} terms each:");
    for h in hits {
        println!("  {}  ({})", h.claim, h.label.unwrap_or_default());
    }
}
