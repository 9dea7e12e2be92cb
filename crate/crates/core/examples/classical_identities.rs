//! Check the classical product identities as truncated series.

use regulus::theta::{ramanujan5_check, verify_euler_product, verify_jacobi_cube, verify_jtp, verify_quintuple, Sign};

fn main() {
    let n = 500;
    let mut reports = vec![verify_euler_product(n).unwrap(), verify_jacobi_cube(n).unwrap()];
    for t in 1..=3 {
        for sign in [Sign::Plus, Sign::Minus] {
            reports.push(verify_jtp(t, sign, n).unwrap());
        }
    }
    for (u, v) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
        reports.push(verify_quintuple(u, v, n).unwrap());
    }
    let quintic = ramanujan5_check(n).unwrap();
    reports.push(quintic.identity);
    reports.extend(quintic.classes);

    for r in &reports {
        let status = if r.is_match() { "ok" } else { "MISMATCH" };
        println!("{:<22} to q^{:<4} {status}", r.identity, r.truncation);
        if let Some(m) = &r.mismatch {
            println!("    first difference at q^{}: {} vs {}", m.index, m.left, m.right);
        }
    }
}
