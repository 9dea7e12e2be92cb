//! Instantiate catalog families and scan their claims.
//!
//! cargo run --example congruence_families -- [catalog-id]

use regulus::congruence::catalog::{entry, family_claims, ids, FamilyParams};
use regulus::congruence::Verifier;

fn main() {
    if let Some(id) = std::env::args().nth(1) {
        let e = entry(&id).unwrap_or_else(|err| {
            eprintln!("{err}; known ids: {}", ids().join(", "));
            std::process::exit(2);
        });
        println!("{} ({:?}): {}", e.id, e.shape, e.formulas.join("; "));
        return;
    }

    let requests = [
        FamilyParams::new("b2-even-i").p(5).alpha(1),
        FamilyParams::new("b2-even-j").p(7).alpha(0),
        FamilyParams::new("b2-multiprime-i").primes(&[7, 5]).index(1),
        FamilyParams::new("ped-3").alpha(1),
        FamilyParams::new("b13-mod3").alpha(3),
        FamilyParams::new("b5-even-i").p(17).alpha(1).index(3),
        FamilyParams::new("b8-even-i").p(5).alpha(1),
        FamilyParams::new("b16-even-i").p(3),
        FamilyParams::new("ramanujan-lift").k(2),
        FamilyParams::new("fp-mod3").alpha(0),
    ];
    let verifier = Verifier::default();
    for params in requests {
        let claims = family_claims(&params).expect("parameters meet the hypotheses");
        let results = verifier.verify_all(&claims, 100, true).expect("within the cap");
        for r in results {
            let status = if r.verified() { "verified" } else { "FAILED" };
            println!("{:<16} {:<40} {status} for n < {}", params.catalog_id, r.claim.to_string(), r.n_checked);
        }
    }

    // Hypotheses are enforced rather than skipped.
    let err = family_claims(&FamilyParams::new("b8-even-i").p(7)).unwrap_err();
    println!("rejected: {err}");
}
