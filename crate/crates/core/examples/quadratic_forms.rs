//! Exhaustive checks on the quadratic forms behind the b5, b8 and b16 families.

use regulus::arith::primes_between;
use regulus::congruence::forms::{coverage, uniqueness_check, Form};

fn main() {
    for form in [Form::B5, Form::B8, Form::B16] {
        for p in primes_between(3, 50) {
            if form.hypothesis(p).is_err() {
                continue;
            }
            let cover = coverage(form, p).unwrap();
            let unique = uniqueness_check(form, p).unwrap();
            println!(
                "{form:<3} p = {p:<2} covers all residues: {:<5}  target {:<2} hit only by {:?}: {}",
                cover.passed(),
                unique.target,
                unique.expected,
                unique.passed()
            );
        }
    }
}
