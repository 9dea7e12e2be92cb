//! Partition counts: unrestricted `p(n)`, ℓ-regular `b_ℓ(n)` and
//! distinct-part p-regular `b′_p(n)`.
//!
//! Each count has a fast series path and, for small `n`, an enumeration path
//! that shares no code with it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::is_prime;
use crate::series::{Series, SeriesError};
use crate::theta::{euler_at, pentagonal_terms, EtaQuotientSpec, MatchReport, ThetaError};

/// Largest argument accepted by the enumeration oracles.
pub const ENUMERATION_LIMIT: u64 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("regular partitions need l >= 2, got {0}")]
    BadRegularity(u64),
    #[error("distinct regular partitions need a prime p >= 5, got {0}")]
    BadDistinctPrime(u64),
    #[error("enumeration is limited to n <= {ENUMERATION_LIMIT}, got {0}")]
    BeyondOracle(u64),
    #[error("unknown partition function {0:?}")]
    UnknownTag(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Theta(#[from] ThetaError),
}

pub type Result<T> = std::result::Result<T, PartitionError>;

/// Which partition function a series or claim refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum PartitionFunction {
    Unrestricted,
    Regular(u64),
    DistinctRegular(u64),
}

impl PartitionFunction {
    pub fn regular(ell: u64) -> Result<Self> {
        if ell < 2 {
            return Err(PartitionError::BadRegularity(ell));
        }
        Ok(PartitionFunction::Regular(ell))
    }

    pub fn distinct_regular(p: u64) -> Result<Self> {
        if p < 5 || !is_prime(p) {
            return Err(PartitionError::BadDistinctPrime(p));
        }
        Ok(PartitionFunction::DistinctRegular(p))
    }

    /// The generating product as an eta quotient.
    pub fn eta_quotient(&self) -> EtaQuotientSpec {
        match *self {
            PartitionFunction::Unrestricted => EtaQuotientSpec::partitions(),
            PartitionFunction::Regular(ell) => EtaQuotientSpec::regular(ell).expect("ell >= 2"),
            PartitionFunction::DistinctRegular(p) => EtaQuotientSpec::distinct_regular(p).expect("p >= 5"),
        }
    }

    pub fn series(&self, truncation: usize, modulus: u64) -> Result<Series> {
        match *self {
            PartitionFunction::Unrestricted => partition_numbers(truncation, modulus),
            PartitionFunction::Regular(ell) => b_ell_series(ell, truncation, modulus),
            PartitionFunction::DistinctRegular(p) => b_p_prime_series(p, truncation, modulus),
        }
    }

    /// Exact count by enumeration, for `n <= ENUMERATION_LIMIT`.
    pub fn enumerate(&self, n: u64) -> Result<u64> {
        match *self {
            PartitionFunction::Unrestricted => b_ell_enumerate(u64::MAX, n),
            PartitionFunction::Regular(ell) => b_ell_enumerate(ell, n),
            PartitionFunction::DistinctRegular(p) => distinct_regular_enumerate(p, n),
        }
    }
}

impl fmt::Display for PartitionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionFunction::Unrestricted => write!(f, "p"),
            PartitionFunction::Regular(ell) => write!(f, "b{ell}"),
            PartitionFunction::DistinctRegular(p) => write!(f, "bd{p}"),
        }
    }
}

/// Accepts `p`, `b<l>` and `bd<p>` (distinct parts, no part divisible by `p`).
impl FromStr for PartitionFunction {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || PartitionError::UnknownTag(s.to_string());
        if s == "p" {
            return Ok(PartitionFunction::Unrestricted);
        }
        if let Some(rest) = s.strip_prefix("bd") {
            return PartitionFunction::distinct_regular(rest.parse().map_err(|_| unknown())?);
        }
        if let Some(rest) = s.strip_prefix('b') {
            return PartitionFunction::regular(rest.parse().map_err(|_| unknown())?);
        }
        Err(unknown())
    }
}

impl From<PartitionFunction> for String {
    fn from(f: PartitionFunction) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for PartitionFunction {
    type Error = PartitionError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// `p(0..=N)` by the pentagonal recurrence.
pub fn partition_numbers(truncation: usize, modulus: u64) -> Result<Series> {
    let pent = pentagonal_terms(truncation);
    if modulus == 0 {
        let mut p: Vec<BigInt> = Vec::with_capacity(truncation + 1);
        for n in 0..=truncation {
            if n == 0 {
                p.push(BigInt::from(1));
                continue;
            }
            let mut acc = BigInt::from(0);
            for &(e, c) in pent.iter().skip(1).take_while(|&&(e, _)| e <= n) {
                // p(n) = -Σ_{e>0} c_e p(n - e)
                if c < 0 {
                    acc += &p[n - e];
                } else {
                    acc -= &p[n - e];
                }
            }
            p.push(acc);
        }
        Ok(Series::new(p, 0)?)
    } else {
        let m = modulus as u128;
        let mut p: Vec<u64> = Vec::with_capacity(truncation + 1);
        for n in 0..=truncation {
            if n == 0 {
                p.push(1 % modulus);
                continue;
            }
            let mut plus = 0u128;
            let mut minus = 0u128;
            for &(e, c) in pent.iter().skip(1).take_while(|&&(e, _)| e <= n) {
                if c < 0 {
                    plus += p[n - e] as u128;
                } else {
                    minus += p[n - e] as u128;
                }
            }
            p.push(((plus % m + m - minus % m) % m) as u64);
        }
        Ok(Series::new(p, modulus)?)
    }
}

/// `b_ℓ(0..=N)` as the partition series times `(q^ℓ;q^ℓ)_∞`.
pub fn b_ell_series(ell: u64, truncation: usize, modulus: u64) -> Result<Series> {
    PartitionFunction::regular(ell)?;
    let p = partition_numbers(truncation, modulus)?;
    Ok(p.mul(&euler_at(ell as usize, truncation, modulus)?)?)
}

/// `b′_p(0..=N)` from `(q²;q²)(q^p;q^p) / ((q;q)(q^{2p};q^{2p}))`.
pub fn b_p_prime_series(p: u64, truncation: usize, modulus: u64) -> Result<Series> {
    PartitionFunction::distinct_regular(p)?;
    let n = truncation;
    let p = p as usize;
    // Every factor but 1/(q;q) is sparse, so apply them one at a time.
    let series = partition_numbers(n, modulus)?
        .mul(&euler_at(2, n, modulus)?)?
        .mul(&euler_at(p, n, modulus)?)?
        .div(&euler_at(2 * p, n, modulus)?)?;
    Ok(series)
}

/// Counts partitions of `n` with no part divisible by `ell` by recursion on
/// the largest part. `ell = u64::MAX` counts all partitions.
pub fn b_ell_enumerate(ell: u64, n: u64) -> Result<u64> {
    if ell < 2 {
        return Err(PartitionError::BadRegularity(ell));
    }
    if n > ENUMERATION_LIMIT {
        return Err(PartitionError::BeyondOracle(n));
    }
    fn count(n: u64, max_part: u64, allowed: &dyn Fn(u64) -> bool, memo: &mut HashMap<(u64, u64), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&(n, max_part)) {
            return v;
        }
        let mut total = 0;
        for part in (1..=max_part.min(n)).filter(|&k| allowed(k)) {
            total += count(n - part, part, allowed, memo);
        }
        memo.insert((n, max_part), total);
        total
    }
    let allowed = move |k: u64| k % ell != 0;
    Ok(count(n, n, &allowed, &mut HashMap::new()))
}

/// Counts partitions of `n` into distinct parts none divisible by `p`.
pub fn distinct_regular_enumerate(p: u64, n: u64) -> Result<u64> {
    PartitionFunction::distinct_regular(p)?;
    if n > ENUMERATION_LIMIT {
        return Err(PartitionError::BeyondOracle(n));
    }
    // Parts are chosen strictly decreasing, below `bound`.
    fn count(n: u64, bound: u64, p: u64, memo: &mut HashMap<(u64, u64), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&(n, bound)) {
            return v;
        }
        let mut total = 0;
        for part in (1..bound.min(n + 1)).filter(|k| k % p != 0) {
            total += count(n - part, part, p, memo);
        }
        memo.insert((n, bound), total);
        total
    }
    Ok(count(n, n + 1, p, &mut HashMap::new()))
}

/// Checks `b′_p(pn + (p²-1)/24) ≡ b_p(n) (mod 2)` for `n = 0..=N`.
pub fn check_bp_prime_relation(p: u64, truncation: usize) -> Result<MatchReport> {
    PartitionFunction::distinct_regular(p)?;
    let offset = ((p * p - 1) / 24) as usize;
    let p_us = p as usize;
    let distinct = b_p_prime_series(p, p_us * truncation + offset, 2)?;
    let lhs = Series::new((0..=truncation).map(|n| distinct.coeff(p_us * n + offset)), 2)?;
    let rhs = b_ell_series(p, truncation, 2)?;
    Ok(MatchReport::compare(format!("bp-prime:{p}"), &lhs, &rhs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(s: &Series) -> Vec<i64> {
        s.to_i64s().unwrap()
    }

    #[test]
    fn partition_numbers_pinned() {
        let p = partition_numbers(10, 0).unwrap();
        assert_eq!(small(&p), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert!(partition_numbers(4, 5).unwrap().is_zero_at(4));
        assert_eq!(partition_numbers(200, 0).unwrap().coeff(200).to_string(), "3972999029388");
    }

    #[test]
    fn modular_recurrence_agrees_with_exact() {
        for m in [2, 3, 10, 49, 1 << 40] {
            let exact = partition_numbers(400, 0).unwrap().reduce_mod(m).unwrap();
            assert_eq!(partition_numbers(400, m).unwrap(), exact, "m={m}");
        }
    }

    #[test]
    fn regular_pinned() {
        assert_eq!(small(&b_ell_series(2, 9, 0).unwrap()), vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8]);
        assert_eq!(b_ell_series(4, 2, 0).unwrap().coeff(2), 2.into());
        assert_eq!(b_ell_series(13, 7, 0).unwrap().coeff(7), 15.into());
        assert_eq!(b_ell_series(5, 5, 0).unwrap().coeff(5), 6.into());
    }

    #[test]
    fn enumeration_pinned() {
        assert_eq!(b_ell_enumerate(5, 5).unwrap(), 6);
        assert_eq!(b_ell_enumerate(7, 0).unwrap(), 1);
        assert_eq!(b_ell_enumerate(2, 9).unwrap(), 8);
        assert_eq!(b_ell_enumerate(u64::MAX, 60).unwrap(), 966467);
        assert_eq!(b_ell_enumerate(2, 61), Err(PartitionError::BeyondOracle(61)));
        assert_eq!(b_ell_enumerate(1, 3), Err(PartitionError::BadRegularity(1)));
    }

    #[test]
    fn series_matches_enumeration() {
        for ell in [2, 3, 4, 5, 8, 13, 16] {
            let s = b_ell_series(ell, 40, 0).unwrap();
            for n in 0..=40 {
                assert_eq!(s.coeff(n as usize), b_ell_enumerate(ell, n).unwrap().into(), "ell={ell} n={n}");
            }
        }
    }

    #[test]
    fn distinct_regular_pinned() {
        assert_eq!(small(&b_p_prime_series(5, 5, 0).unwrap()), vec![1, 1, 1, 2, 2, 2]);
        for p in [5, 7, 11, 13] {
            let s = b_p_prime_series(p, 60, 0).unwrap();
            for n in 0..=60 {
                assert_eq!(s.coeff(n as usize), distinct_regular_enumerate(p, n).unwrap().into(), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn distinct_regular_parity() {
        for p in [5, 7] {
            let lhs = b_p_prime_series(p, 500, 2).unwrap();
            let rhs = euler_at(1, 500, 2).unwrap().div(&euler_at(p as usize, 500, 2).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bp_prime_relation() {
        for p in [5, 7, 13] {
            assert!(check_bp_prime_relation(p, 300).unwrap().is_match(), "p={p}");
        }
        assert!(check_bp_prime_relation(9, 10).is_err());
    }

    #[test]
    fn below_ell_matches_p() {
        let p = partition_numbers(30, 0).unwrap();
        for ell in 2..30u64 {
            let b = b_ell_series(ell, 30, 0).unwrap();
            for n in 0..ell as usize {
                assert_eq!(b.coeff(n), p.coeff(n));
            }
            for n in 0..=30 {
                assert!(b.coeff(n) <= p.coeff(n));
            }
        }
    }

    #[test]
    fn tags() {
        for s in ["p", "b5", "b13", "bd7"] {
            assert_eq!(s.parse::<PartitionFunction>().unwrap().to_string(), s);
        }
        assert!("b1".parse::<PartitionFunction>().is_err());
        assert!("bd4".parse::<PartitionFunction>().is_err());
        assert!("x".parse::<PartitionFunction>().is_err());
        let eta = PartitionFunction::Regular(5).eta_quotient();
        assert_eq!(eta.to_string(), "1^-1,5^1");
        let via_eta = eta.expand(100, 0).unwrap();
        assert_eq!(via_eta, b_ell_series(5, 100, 0).unwrap());
    }
}
