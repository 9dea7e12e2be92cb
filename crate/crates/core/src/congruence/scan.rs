//! Coefficient scans: verifying claims and searching for new progressions.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::catalog::CongruenceClaim;
use super::tables::{prime_power_factors, ResidueTable, TableCache};
use crate::partitions::{PartitionError, PartitionFunction, ENUMERATION_LIMIT};
use crate::theta::EtaQuotientSpec;

/// Default ceiling on the largest coefficient index a scan may touch.
pub const DEFAULT_MAX_TRUNCATION: u64 = 16_000_000;

/// Counterexamples at or below this index are recomputed exactly.
pub const EXACT_LIMIT: u64 = 20_000;

/// Label attached to every search hit.
pub const EMPIRICAL: &str = "empirical, unproven";

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("scan needs coefficients up to index {needed}, above the cap {cap}")]
    BudgetExceeded { needed: u64, cap: u64 },
    #[error("progression index overflows 64 bits")]
    Overflow,
    #[error("n_count must be at least 1")]
    EmptyScan,
    #[error("{0}")]
    Partition(#[from] PartitionError),
    #[error("residue table disagrees with {source_name} at index {index}: table {table}, {source_name} {other}")]
    Inconsistent { index: u64, table: u64, source_name: &'static str, other: String },
}

pub type Result<T> = std::result::Result<T, ScanError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Verified,
    /// First `n` with a nonzero residue.
    Counterexample {
        n: u64,
        index: u64,
        residue: u64,
        /// Exact coefficient as a decimal string, when `index ≤ EXACT_LIMIT`.
        #[serde(skip_serializing_if = "Option::is_none")]
        exact_value: Option<String>,
        /// Enumeration count, when `index ≤ ENUMERATION_LIMIT`.
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle_value: Option<u64>,
    },
    /// The cap left no term to check.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub claim: CongruenceClaim,
    pub n_requested: u64,
    pub n_checked: u64,
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<&'static str>,
}

impl ScanResult {
    pub fn verified(&self) -> bool {
        self.outcome == Outcome::Verified
    }

    pub fn is_counterexample(&self) -> bool {
        matches!(self.outcome, Outcome::Counterexample { .. })
    }

    /// Fewer terms were checked than requested.
    pub fn clipped(&self) -> bool {
        self.n_checked < self.n_requested
    }
}

/// Scans claims against cached residue tables.
pub struct Verifier {
    cap: u64,
    jobs: usize,
    cache: TableCache,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new(DEFAULT_MAX_TRUNCATION)
    }
}

impl Verifier {
    pub fn new(cap: u64) -> Self {
        Verifier {
            cap,
            jobs: 0,
            cache: TableCache::new(),
        }
    }

    /// Worker threads; 0 lets the pool decide.
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Checks `n = 0 .. n_count-1`; fails if that needs more than the cap.
    pub fn verify(&self, claim: &CongruenceClaim, n_count: u64) -> Result<ScanResult> {
        Ok(self.verify_all(std::slice::from_ref(claim), n_count, false)?.remove(0))
    }

    /// Checks every claim. With `clip`, each claim scans as many terms as fit
    /// under the cap instead of failing; claims with none are `Skipped`.
    pub fn verify_all(&self, claims: &[CongruenceClaim], n_count: u64, clip: bool) -> Result<Vec<ScanResult>> {
        if n_count == 0 {
            return Err(ScanError::EmptyScan);
        }
        let mut counts = Vec::with_capacity(claims.len());
        for c in claims {
            let count = if clip {
                c.affordable_count(n_count, self.cap)
            } else {
                let needed = c.truncation_for(n_count).ok_or(ScanError::Overflow)?;
                if needed > self.cap {
                    return Err(ScanError::BudgetExceeded { needed, cap: self.cap });
                }
                n_count
            };
            counts.push(count);
        }
        let tables = self.tables_for(claims, &counts);
        let check = |(c, &count): (&CongruenceClaim, &u64)| -> Result<ScanResult> {
            let table = tables.get(&(c.function, c.modulus));
            scan_one(c, n_count, count, table)
        };
        self.install(|| claims.par_iter().zip(&counts).map(check).collect())
    }

    fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }

    /// One table per (function, modulus), each built once at the largest
    /// truncation its claims need. Shared partition bases are built first at
    /// their own maximum so no base is built twice.
    fn tables_for(&self, claims: &[CongruenceClaim], counts: &[u64]) -> HashMap<(PartitionFunction, u64), ResidueTable> {
        let mut needed: BTreeMap<(PartitionFunction, u64), u64> = BTreeMap::new();
        for (c, &count) in claims.iter().zip(counts) {
            if let Some(t) = c.truncation_for(count) {
                let e = needed.entry((c.function, c.modulus)).or_default();
                *e = (*e).max(t);
            }
        }
        let mut base: BTreeMap<u64, u64> = BTreeMap::new();
        for (&(_, m), &t) in &needed {
            for q in prime_power_factors(m) {
                let e = base.entry(q).or_default();
                *e = (*e).max(t);
            }
        }
        let partitions = EtaQuotientSpec::partitions();
        self.install(|| {
            base.par_iter().for_each(|(&q, &t)| {
                self.cache.table(&partitions, q, t as usize);
            });
            needed
                .par_iter()
                .map(|(&(f, m), &t)| ((f, m), self.cache.table(&f.eta_quotient(), m, t as usize)))
                .collect()
        })
    }

    /// Progressions `A·n + B` with `A ≤ a_max` and `B < min(b_max, A)` on
    /// which `function` vanishes mod `modulus` for `n < n_count`. A hit
    /// implied by an earlier one (`A | A'`, `B' ≡ B mod A`) is dropped.
    pub fn search(
        &self,
        function: PartitionFunction,
        modulus: u64,
        a_max: u64,
        b_max: u64,
        n_count: u64,
    ) -> Result<Vec<ScanResult>> {
        if n_count == 0 {
            return Err(ScanError::EmptyScan);
        }
        let needed = a_max
            .checked_mul(n_count)
            .and_then(|v| v.checked_sub(1))
            .ok_or(ScanError::Overflow)?;
        if modulus < 2 || a_max == 0 {
            return Ok(Vec::new());
        }
        if needed > self.cap {
            return Err(ScanError::BudgetExceeded { needed, cap: self.cap });
        }
        let table = self.cache.table(&function.eta_quotient(), modulus, needed as usize);
        let mut found: Vec<(u64, u64)> = Vec::new();
        let mut out = Vec::new();
        for a in 1..=a_max {
            for b in 0..a.min(b_max) {
                if found.iter().any(|&(a0, b0)| a % a0 == 0 && b % a0 == b0) {
                    continue;
                }
                if !(0..n_count).all(|n| table.is_zero((a * n + b) as usize)) {
                    continue;
                }
                if b <= ENUMERATION_LIMIT {
                    let oracle = function.enumerate(b)?;
                    if oracle % modulus != 0 {
                        return Err(ScanError::Inconsistent {
                            index: b,
                            table: 0,
                            source_name: "enumeration",
                            other: oracle.to_string(),
                        });
                    }
                }
                found.push((a, b));
                let mut claim = CongruenceClaim::new(function, a, b, modulus).expect("a >= 1, modulus >= 2");
                claim.provenance.catalog_id = "search".to_string();
                out.push(ScanResult {
                    claim,
                    n_requested: n_count,
                    n_checked: n_count,
                    outcome: Outcome::Verified,
                    label: Some(EMPIRICAL),
                });
            }
        }
        Ok(out)
    }
}

fn scan_one(claim: &CongruenceClaim, n_requested: u64, count: u64, table: Option<&ResidueTable>) -> Result<ScanResult> {
    let result = |n_checked, outcome| ScanResult {
        claim: claim.clone(),
        n_requested,
        n_checked,
        outcome,
        label: None,
    };
    let Some(table) = table.filter(|_| count > 0) else {
        return Ok(result(0, Outcome::Skipped));
    };
    for n in 0..count {
        let index = claim.index(n).ok_or(ScanError::Overflow)?;
        let residue = table.residue(index as usize);
        if residue != 0 {
            let outcome = confirm(claim.function, claim.modulus, index, residue)?;
            let outcome = match outcome {
                Outcome::Counterexample {
                    index,
                    residue,
                    exact_value,
                    oracle_value,
                    ..
                } => Outcome::Counterexample {
                    n,
                    index,
                    residue,
                    exact_value,
                    oracle_value,
                },
                other => other,
            };
            return Ok(result(n + 1, outcome));
        }
    }
    Ok(result(count, Outcome::Verified))
}

/// Recomputes a nonzero residue exactly and by enumeration where feasible.
fn confirm(function: PartitionFunction, modulus: u64, index: u64, residue: u64) -> Result<Outcome> {
    let mut exact_value = None;
    if index <= EXACT_LIMIT {
        let exact = exact_coefficient(function, index)?;
        let m = BigInt::from(modulus);
        let r = ((&exact % &m) + &m) % &m;
        if r.to_u64() != Some(residue) {
            return Err(ScanError::Inconsistent {
                index,
                table: residue,
                source_name: "exact series",
                other: exact.to_string(),
            });
        }
        exact_value = Some(exact.to_string());
    }
    let mut oracle_value = None;
    if index <= ENUMERATION_LIMIT {
        let v = function.enumerate(index)?;
        if v % modulus != residue {
            return Err(ScanError::Inconsistent {
                index,
                table: residue,
                source_name: "enumeration",
                other: v.to_string(),
            });
        }
        oracle_value = Some(v);
    }
    Ok(Outcome::Counterexample {
        n: 0,
        index,
        residue,
        exact_value,
        oracle_value,
    })
}

/// The coefficient at `index`, computed without reduction.
pub fn exact_coefficient(function: PartitionFunction, index: u64) -> Result<BigInt> {
    let s = function.series(index as usize, 0)?;
    Ok(s.coeff(index as usize))
}

/// Reference check through the generic series arithmetic, independent of
/// the residue tables.
pub fn verify_with_series(claim: &CongruenceClaim, n_count: u64) -> Result<ScanResult> {
    let needed = claim.truncation_for(n_count).ok_or(ScanError::Overflow)?;
    let series = claim.function.series(needed as usize, claim.modulus)?;
    let first = (0..n_count).find(|&n| !series.is_zero_at(claim.index(n).expect("within needed") as usize));
    let outcome = match first {
        None => Outcome::Verified,
        Some(n) => {
            let index = claim.index(n).expect("within needed");
            let c = series.coeff(index as usize);
            let residue = c.to_u64().unwrap_or_default();
            Outcome::Counterexample {
                n,
                index,
                residue,
                exact_value: None,
                oracle_value: None,
            }
        }
    };
    Ok(ScanResult {
        claim: claim.clone(),
        n_requested: n_count,
        n_checked: first.map_or(n_count, |n| n + 1),
        outcome,
        label: None,
    })
}
