//! Library results against independent brute-force oracles and frozen values.

use std::collections::BTreeSet;

use regulus::arith::legendre;
use regulus::congruence::admissible_j;
use regulus::dissection::{disjointness_check, support_classes, ThetaKind};
use regulus::partitions::{check_bp_prime_relation, PartitionFunction};
use regulus::series::Series;
use regulus::theta::{euler_series, psi_series, EtaQuotientSpec, ThetaSpec};

/// Partitions of `n` into parts `≤ max` accepted by `allowed`, optionally distinct.
fn count(n: u64, max: u64, distinct: bool, allowed: &dyn Fn(u64) -> bool) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n))
        .filter(|&k| allowed(k))
        .map(|k| count(n - k, if distinct { k - 1 } else { k }, distinct, allowed))
        .sum()
}

fn regular(ell: u64, n: u64) -> u64 {
    count(n, n, false, &|k| k % ell != 0)
}

fn distinct_avoiding(p: u64, n: u64) -> u64 {
    count(n, n, true, &|k| k % p != 0)
}

/// `∏_{k ≥ 1} (1 - q^{d k})` by repeated binomial multiplication.
fn product(d: usize, n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n + 1];
    c[0] = 1;
    for k in (d..=n).step_by(d) {
        for i in (k..=n).rev() {
            c[i] -= c[i - k];
        }
    }
    c
}

fn coeffs(s: &Series) -> Vec<i64> {
    s.to_i64s().expect("small coefficients")
}

#[test]
fn frozen_partition_values() {
    let p: Vec<u64> = (0..=10).map(|n| regular(u64::MAX, n)).collect();
    assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    let b2: Vec<u64> = (0..10).map(|n| regular(2, n)).collect();
    assert_eq!(b2, [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]);
    let b5: Vec<u64> = (0..=5).map(|n| regular(5, n)).collect();
    assert_eq!(b5, [1, 1, 2, 3, 5, 6]);
    assert_eq!(regular(4, 2), 2);
    assert_eq!(regular(13, 7), 15);
    assert_eq!(count(9, 9, true, &|_| true), 8);
    let bd5: Vec<u64> = (0..=5).map(|n| distinct_avoiding(5, n)).collect();
    assert_eq!(bd5, [1, 1, 1, 2, 2, 2]);
}

#[test]
fn library_matches_enumeration() {
    for ell in [2u64, 4, 5, 8, 13, 16] {
        let f = PartitionFunction::Regular(ell);
        let s = f.series(40, 0).unwrap();
        for n in 0..=40u64 {
            let want = regular(ell, n);
            assert_eq!(s.coeff(n as usize), want.into(), "b{ell}({n})");
            assert_eq!(f.enumerate(n).unwrap(), want, "enumerate b{ell}({n})");
        }
    }
    let p = PartitionFunction::Unrestricted.series(40, 0).unwrap();
    for p_prime in [5u64, 7, 11] {
        let f = PartitionFunction::DistinctRegular(p_prime);
        let s = f.series(40, 0).unwrap();
        for n in 0..=40u64 {
            assert_eq!(s.coeff(n as usize), distinct_avoiding(p_prime, n).into(), "bd{p_prime}({n})");
        }
    }
    assert_eq!(p.coeff(40), regular(u64::MAX, 40).into());
}

#[test]
fn euler_series_frozen_and_against_product() {
    assert_eq!(coeffs(&euler_series(12, 0).unwrap()), [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    assert_eq!(coeffs(&euler_series(200, 0).unwrap()), product(1, 200));
    let sq = euler_series(5, 0).unwrap().pow(2);
    assert_eq!(sq.coeff(2), (-1).into());
}

#[test]
fn psi_against_product_quotient() {
    // ψ(q) = (q²;q²)∞ / (q;q²)∞ and (q;q²)∞ = (q;q)∞ / (q²;q²)∞.
    let n = 200;
    let e1 = Series::from_i64s(&product(1, n), 0).unwrap();
    let e2 = Series::from_i64s(&product(2, n), 0).unwrap();
    let psi = e2.mul(&e2).unwrap().div(&e1).unwrap();
    assert_eq!(psi, psi_series(n, 0).unwrap());
    let support: Vec<usize> = psi.support().into_iter().take(5).collect();
    assert_eq!(support, [0, 1, 3, 6, 10]);
}

#[test]
fn theta_specializations() {
    use regulus::theta::Sign::{Minus, Plus};
    let f = ThetaSpec::general(Minus, 1, Minus, 2).unwrap().expand(500, 0).unwrap();
    assert_eq!(f, euler_series(500, 0).unwrap());
    let psi = ThetaSpec::general(Plus, 1, Plus, 3).unwrap().expand(500, 0).unwrap();
    assert_eq!(psi, psi_series(500, 0).unwrap());
}

#[test]
fn eta_quotients_frozen() {
    let p: EtaQuotientSpec = "1^-1".parse().unwrap();
    assert_eq!(coeffs(&p.expand(5, 0).unwrap()), [1, 1, 2, 3, 5, 7]);
    let b5: EtaQuotientSpec = "5^1,1^-1".parse().unwrap();
    assert_eq!(coeffs(&b5.expand(5, 0).unwrap()), [1, 1, 2, 3, 5, 6]);
    let inv = euler_series(5, 0).unwrap().invert().unwrap();
    assert_eq!(coeffs(&inv), [1, 1, 2, 3, 5, 7]);
    assert!(PartitionFunction::Unrestricted.series(4, 5).unwrap().is_zero_at(4));
}

#[test]
fn dissection_examples() {
    let s = Series::from_terms(&[(0, 1), (1, 1), (3, 1), (6, 1), (10, 1)], 10, 0).unwrap();
    let d = s.dissect(5).unwrap();
    assert_eq!(d.part(0).support(), [0, 2]);
    assert_eq!(d.part(1).support(), [0, 1]);
    assert_eq!(d.part(3).support(), [0]);
    assert!(d.part(2).is_zero() && d.part(4).is_zero());
    let e = euler_series(500, 0).unwrap().dissect(5).unwrap();
    assert!(e.part(3).is_zero() && e.part(4).is_zero());
    let quad = psi_series(100, 0).unwrap().substitute_power(4).unwrap();
    assert_eq!(&quad.support()[..5], [0, 4, 12, 24, 40]);
}

fn set(v: &[u64]) -> BTreeSet<u64> {
    v.iter().copied().collect()
}

#[test]
fn support_classes_frozen() {
    assert_eq!(support_classes(ThetaKind::FNeg, 5).unwrap(), set(&[0, 1, 2]));
    assert_eq!(support_classes(ThetaKind::FNeg, 7).unwrap(), set(&[0, 1, 2, 5]));
    assert_eq!(support_classes(ThetaKind::Psi, 3).unwrap(), set(&[0, 1]));
    assert_eq!(support_classes(ThetaKind::Psi, 5).unwrap(), set(&[0, 1, 3]));
    assert_eq!(support_classes(ThetaKind::Psi, 7).unwrap(), set(&[0, 1, 3, 6]));
    assert!(disjointness_check(ThetaKind::Psi, 5).unwrap().passed);
    assert!(disjointness_check(ThetaKind::FNeg, 7).unwrap().passed);
}

/// Brute-force class sets of the pentagonal and triangular exponents.
fn exponent_classes(kind: ThetaKind, p: u64) -> BTreeSet<u64> {
    let gen = match kind {
        ThetaKind::FNeg => euler_series(40 * p as usize * p as usize, 0).unwrap(),
        ThetaKind::Psi => psi_series(40 * p as usize * p as usize, 0).unwrap(),
    };
    gen.support().into_iter().map(|e| e as u64 % p).collect()
}

#[test]
fn admissible_indices_complement_support() {
    for p in [5u64, 7, 11, 13] {
        for (id, kind) in [("b2-even-j", ThetaKind::FNeg), ("b4-even-j", ThetaKind::Psi), ("b13-even-j", ThetaKind::Psi)] {
            let support = support_classes(kind, p).unwrap();
            assert_eq!(support, exponent_classes(kind, p), "{kind} {p}");
            let complement: Vec<u64> = (0..p).filter(|r| !support.contains(r)).collect();
            assert_eq!(admissible_j(id, p).unwrap(), complement, "{id} {p}");
        }
    }
    assert_eq!(admissible_j("b2-even-j", 5).unwrap(), [3, 4]);
    assert_eq!(admissible_j("b4-even-j", 3).unwrap(), [2]);
    assert_eq!(admissible_j("b2-even-j", 7).unwrap(), [3, 4, 6]);
}

#[test]
fn legendre_frozen() {
    assert_eq!(legendre(2, 5).unwrap(), -1);
    assert_eq!(legendre(-10, 17).unwrap(), -1);
    assert_eq!(legendre(-10, 29).unwrap(), -1);
    let squares: BTreeSet<u64> = (1..17u64).map(|x| x * x % 17).collect();
    assert_eq!(squares, set(&[1, 2, 4, 8, 9, 13, 15, 16]));
}

#[test]
fn distinct_regular_relation() {
    for (p, n) in [(5u64, 1000usize), (7, 1000), (13, 500)] {
        assert!(check_bp_prime_relation(p, n).unwrap().is_match(), "p = {p}");
    }
    // Mod 2 the distinct-part series is (q;q)∞ / (q^p;q^p)∞.
    let bd = PartitionFunction::DistinctRegular(5).series(500, 2).unwrap();
    let quotient = euler_series(500, 2).unwrap().div(&regulus::theta::euler_at(5, 500, 2).unwrap()).unwrap();
    assert_eq!(bd, quotient);
}
