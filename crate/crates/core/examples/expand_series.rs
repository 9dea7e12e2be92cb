//! Expand partition generating functions exactly and modulo m.
//!
//! cargo run --example expand_series -- [N]

use regulus::congruence::tables::TableCache;
use regulus::partitions::PartitionFunction;
use regulus::theta::EtaQuotientSpec;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);

    for f in [PartitionFunction::Unrestricted, PartitionFunction::Regular(5), PartitionFunction::DistinctRegular(7)] {
        let s = f.series(n, 0).expect("valid truncation");
        let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
        println!("{f}({}) = {}", f.eta_quotient(), coeffs.join(" "));
    }

    // Any eta quotient, reduced mod 3.
    let spec: EtaQuotientSpec = "13^1,1^-1".parse().expect("grammar is d^e,...");
    let mod3 = spec.expand(n, 3).expect("constant term is 1");
    println!("{spec} mod 3 = {mod3}");

    // Long modular expansions go through dense residue tables.
    let big = 1_000_000;
    let table = TableCache::new().table(&spec, 3, big);
    let zeros = (0..=big).filter(|&i| table.is_zero(i)).count();
    println!("b13 mod 3 vanishes at {zeros} of {} indices up to {big}", big + 1);
}
