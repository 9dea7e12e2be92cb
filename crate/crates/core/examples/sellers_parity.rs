//! Parity of partitions into distinct parts not divisible by p.

use regulus::congruence::catalog::{admissible_j, family_claims, FamilyParams};
use regulus::congruence::Verifier;
use regulus::partitions::check_bp_prime_relation;

fn main() {
    let verifier = Verifier::default();
    for p in [5, 7, 11, 13] {
        let relation = check_bp_prime_relation(p, 1000).unwrap();
        println!("p = {p}: mod 2 relation to q^1000 {}", if relation.is_match() { "holds" } else { "FAILS" });
        println!("  residues r with (24r+1 / p) = -1: {:?}", admissible_j("sellers-parity", p).unwrap());
        let claims = family_claims(&FamilyParams::new("sellers-parity").p(p)).unwrap();
        for r in verifier.verify_all(&claims, 500, false).unwrap() {
            println!("  {}: {}", r.claim, if r.verified() { "even for n < 500" } else { "FAILED" });
        }
    }
}
