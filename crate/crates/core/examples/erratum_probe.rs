//! The first two mod 10 members of the combined family fail at alpha = 0.
//!
//! The catalog ships them from alpha = 1; probing the stated range
//! reproduces the failure with exact and enumerated values.

use regulus::congruence::catalog::{family_claims, FamilyParams};
use regulus::congruence::{Outcome, Verifier};

fn main() {
    let verifier = Verifier::default();
    for member in [1, 2] {
        for alpha in [0, 1] {
            let params = FamilyParams::new("combined-4").member(member).alpha(alpha).probe();
            let claim = &family_claims(&params).unwrap()[0];
            let result = verifier.verify(claim, 50).unwrap();
            match result.outcome {
                Outcome::Counterexample { n, index, residue, exact_value, oracle_value } => println!(
                    "{claim}: fails at n = {n}; b5({index}) = {} (enumeration {}), residue {residue}",
                    exact_value.unwrap_or_default(),
                    oracle_value.map_or("n/a".into(), |v| v.to_string()),
                ),
                _ => println!("{claim}: holds for n < {}", result.n_checked),
            }
        }
    }
    let strict = family_claims(&FamilyParams::new("combined-4").member(1).alpha(0));
    println!("without probing: {}", strict.unwrap_err());
}
