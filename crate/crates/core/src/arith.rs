//! Small number-theory helpers on machine integers.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n != 2 && is_prime(n)
}

/// `base^exp mod m` with 128-bit intermediates.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(a/p)` by Euler's criterion `a^((p-1)/2) mod p`.
pub fn legendre(a: i64, p: u64) -> Result<i8, ArithError> {
    if !is_odd_prime(p) {
        return Err(ArithError::NotOddPrime(p));
    }
    let r = (a as i128).rem_euclid(p as i128) as u64;
    Ok(match mod_pow(r, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        x if x == p - 1 => -1,
        x => unreachable!("Euler's criterion gave {x} mod {p}"),
    })
}

/// Primes in `lo..=hi`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// Generalized pentagonal number `k(3k+1)/2` for any integer `k`.
pub fn pentagonal(k: i64) -> i64 {
    k * (3 * k + 1) / 2
}

/// Triangular number `k(k+1)/2`.
pub fn triangular(k: i64) -> i64 {
    k * (k + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(!is_odd_prime(2));
        assert!(is_prime(7919));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(5, 5), Ok(0));
        assert_eq!(legendre(2, 5), Ok(-1));
        assert_eq!(legendre(-10, 17), Ok(-1));
        assert_eq!(legendre(4, 7), Ok(1));
        assert_eq!(legendre(1, 2), Err(ArithError::NotOddPrime(2)));
        assert_eq!(legendre(1, 15), Err(ArithError::NotOddPrime(15)));
    }

    #[test]
    fn legendre_matches_squares() {
        for p in primes_between(3, 60) {
            let squares: std::collections::BTreeSet<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 1..p {
                let expected = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(legendre(a as i64, p).unwrap(), expected, "a={a} p={p}");
            }
        }
    }
}
