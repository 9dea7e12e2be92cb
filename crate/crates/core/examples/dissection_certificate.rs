//! Print and replay the p-dissection certificate of psi(q) or f(-q).
//!
//! cargo run --example dissection_certificate -- [psi|f] [p]

use regulus::dissection::{disjointness_check, replay, ThetaKind};

fn main() {
    let mut args = std::env::args().skip(1);
    let kind: ThetaKind = args.next().unwrap_or_else(|| "f".into()).parse().expect("psi or f");
    let p: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let n = kind.minimum_truncation(p).max(600);

    let report = match replay(kind, p, n) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("{kind}(q) dissected mod {p}:");
    for c in &report.components {
        let mark = if c.special { "  <- special" } else { "" };
        println!("  class {:>3}  k = {:>3}  {}{mark}", c.class, c.k, c.description);
    }
    let absent: Vec<u64> = (0..p).filter(|r| !report.support.contains(r)).collect();
    println!("support {:?}, absent {absent:?}", report.support);
    println!("replayed to q^{n}: {}", if report.passed() { "exact match" } else { "FAILED" });
    println!("classes separated: {}", disjointness_check(kind, p).unwrap().passed);
}
