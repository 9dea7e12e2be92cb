//! p-dissections of `ψ(q)` and `f(-q)` as auditable certificates.
//!
//! A certificate lists each component symbolically (a signed monomial times a
//! theta function in `q^p`-powers) together with the residue class it lives
//! in. Replaying a certificate expands every component and compares the sum
//! against the generator itself.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{is_odd_prime, is_prime};
use crate::series::Series;
use crate::theta::{euler_at, euler_series, psi_series, MatchReport, Sign, ThetaError, ThetaSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DissectionError {
    #[error("the psi dissection needs an odd prime, got {0}")]
    PsiPrime(u64),
    #[error("the f(-q) dissection needs a prime p >= 5, got {0}")]
    FPrime(u64),
    #[error("truncation {truncation} is below the minimum {minimum} for p = {p}")]
    TruncationTooSmall { p: u64, truncation: usize, minimum: usize },
    #[error("unknown theta function {0:?}; expected psi or f")]
    UnknownFunction(String),
    #[error(transparent)]
    Theta(#[from] ThetaError),
}

pub type Result<T> = std::result::Result<T, DissectionError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaKind {
    Psi,
    FNeg,
}

impl ThetaKind {
    pub fn validate(self, p: u64) -> Result<()> {
        match self {
            ThetaKind::Psi if !is_odd_prime(p) => Err(DissectionError::PsiPrime(p)),
            ThetaKind::FNeg if p < 5 || !is_prime(p) => Err(DissectionError::FPrime(p)),
            _ => Ok(()),
        }
    }

    /// Smallest truncation at which every component has a nonzero term.
    pub fn minimum_truncation(self, p: u64) -> usize {
        let p2 = (p * p) as usize;
        match self {
            ThetaKind::Psi => p2,
            ThetaKind::FNeg => 3 * p2,
        }
    }

    pub fn generator(self, truncation: usize) -> Series {
        match self {
            ThetaKind::Psi => psi_series(truncation, 0),
            ThetaKind::FNeg => euler_series(truncation, 0),
        }
        .expect("exact series")
    }
}

impl fmt::Display for ThetaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThetaKind::Psi => "psi",
            ThetaKind::FNeg => "f",
        })
    }
}

impl FromStr for ThetaKind {
    type Err = DissectionError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psi" => Ok(ThetaKind::Psi),
            "f" | "f_neg" | "f-neg" => Ok(ThetaKind::FNeg),
            other => Err(DissectionError::UnknownFunction(other.to_string())),
        }
    }
}

/// The theta factor of one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentBody {
    /// `f(a_sign·q^r, b_sign·q^s)`.
    Theta { a_sign: Sign, r: u64, b_sign: Sign, s: u64 },
    /// `ψ(q^scale)`.
    PsiAt { scale: u64 },
    /// `f(-q^scale) = (q^scale; q^scale)_∞`.
    EulerAt { scale: u64 },
}

/// `sign · q^shift · body`, supported on exponents `≡ class (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub k: i64,
    pub sign: i64,
    pub shift: u64,
    pub class: u64,
    pub special: bool,
    pub body: ComponentBody,
    pub description: String,
}

impl Component {
    fn new(k: i64, sign: i64, shift: u64, p: u64, special: bool, body: ComponentBody) -> Self {
        let factor = match body {
            ComponentBody::Theta { a_sign, r, b_sign, s } => ThetaSpec::General { a_sign, r, b_sign, s }.to_string(),
            ComponentBody::PsiAt { scale } => format!("psi(q^{scale})"),
            ComponentBody::EulerAt { scale } => format!("f(-q^{scale})"),
        };
        let lead = if sign < 0 { "-" } else { "" };
        let description = match shift {
            0 => format!("{lead}{factor}"),
            1 => format!("{lead}q*{factor}"),
            _ => format!("{lead}q^{shift}*{factor}"),
        };
        Component {
            k,
            sign,
            shift,
            class: shift % p,
            special,
            body,
            description,
        }
    }

    pub fn expand(&self, truncation: usize) -> Series {
        let body = match self.body {
            ComponentBody::Theta { a_sign, r, b_sign, s } => {
                ThetaSpec::General { a_sign, r, b_sign, s }.expand(truncation, 0).expect("r + s > 0")
            }
            ComponentBody::PsiAt { scale } => {
                psi_series(truncation, 0).and_then(|s| Ok(s.substitute_power(scale as usize)?)).expect("scale > 0")
            }
            ComponentBody::EulerAt { scale } => euler_at(scale as usize, truncation, 0).expect("exact"),
        };
        body.shift(self.shift as usize).scale(self.sign)
    }
}

/// A p-dissection certificate, optionally replayed to a truncation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DissectionReport {
    pub function: ThetaKind,
    pub prime: u64,
    pub components: Vec<Component>,
    pub support: BTreeSet<u64>,
    pub special_class: u64,
    /// The excluded index of the `f(-q)` dissection.
    pub special_k: Option<i64>,
    /// Sum of expanded components against the generator.
    pub check: Option<MatchReport>,
    /// Every expanded component is supported on its declared class.
    pub classes_consistent: Option<bool>,
}

impl DissectionReport {
    pub fn passed(&self) -> bool {
        self.check.as_ref().is_some_and(MatchReport::is_match) && self.classes_consistent == Some(true)
    }
}

fn triangular(k: i64) -> i64 {
    k * (k + 1) / 2
}

fn pentagonal(k: i64) -> i64 {
    k * (3 * k + 1) / 2
}

/// `k* = (±p - 1)/6`, whichever is integral.
pub fn excluded_index(p: u64) -> i64 {
    let p = p as i64;
    if p % 6 == 1 {
        (p - 1) / 6
    } else {
        (-p - 1) / 6
    }
}

/// The symbolic dissection with no replay.
pub fn certificate(kind: ThetaKind, p: u64) -> Result<DissectionReport> {
    kind.validate(p)?;
    let pi = p as i64;
    let p2 = p * p;
    let mut components = Vec::new();
    let (special_class, special_k) = match kind {
        ThetaKind::Psi => {
            for k in 0..=(pi - 3) / 2 {
                let w = (2 * k + 1) as u64 * p;
                let body = ComponentBody::Theta {
                    a_sign: Sign::Plus,
                    r: (p2 + w) / 2,
                    b_sign: Sign::Plus,
                    s: (p2 - w) / 2,
                };
                components.push(Component::new(k, 1, triangular(k) as u64, p, false, body));
            }
            let shift = (p2 - 1) / 8;
            components.push(Component::new((pi - 1) / 2, 1, shift, p, true, ComponentBody::PsiAt { scale: p2 }));
            (shift % p, None)
        }
        ThetaKind::FNeg => {
            let k_star = excluded_index(p);
            let half = (pi - 1) / 2;
            for k in (-half..=half).filter(|&k| k != k_star) {
                let w = (6 * k + 1) * pi;
                let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                let body = ComponentBody::Theta {
                    a_sign: Sign::Minus,
                    r: ((3 * p2 as i64 + w) / 2) as u64,
                    b_sign: Sign::Minus,
                    s: ((3 * p2 as i64 - w) / 2) as u64,
                };
                components.push(Component::new(k, sign, pentagonal(k) as u64, p, false, body));
            }
            let shift = (p2 - 1) / 24;
            let sign = if k_star.rem_euclid(2) == 0 { 1 } else { -1 };
            components.push(Component::new(k_star, sign, shift, p, true, ComponentBody::EulerAt { scale: p2 }));
            (shift % p, Some(k_star))
        }
    };
    let support = components.iter().map(|c| c.class).collect();
    Ok(DissectionReport {
        function: kind,
        prime: p,
        components,
        support,
        special_class,
        special_k,
        check: None,
        classes_consistent: None,
    })
}

/// Builds the certificate and replays it to `truncation`.
pub fn replay(kind: ThetaKind, p: u64, truncation: usize) -> Result<DissectionReport> {
    let mut report = certificate(kind, p)?;
    let minimum = kind.minimum_truncation(p);
    if truncation < minimum {
        return Err(DissectionError::TruncationTooSmall { p, truncation, minimum });
    }
    let mut sum = Series::zero(truncation, 0).expect("exact");
    let mut consistent = true;
    for c in &report.components {
        let part = c.expand(truncation);
        consistent &= part.support().iter().all(|&e| e as u64 % p == c.class);
        sum = sum.add(&part).expect("same ring");
    }
    report.check = Some(MatchReport::compare(
        format!("{kind}-dissect:{p}"),
        &kind.generator(truncation),
        &sum,
    )?);
    report.classes_consistent = Some(consistent);
    Ok(report)
}

pub fn psi_dissection(p: u64, truncation: usize) -> Result<DissectionReport> {
    replay(ThetaKind::Psi, p, truncation)
}

pub fn f_dissection(p: u64, truncation: usize) -> Result<DissectionReport> {
    replay(ThetaKind::FNeg, p, truncation)
}

/// Outcome of the exhaustive residue-class separation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disjointness {
    pub function: ThetaKind,
    pub prime: u64,
    pub passed: bool,
    /// Two indices that collide (ψ), or one index that hits the special class (f).
    pub witness: Option<(i64, i64)>,
}

/// For ψ: `T(k)` pairwise distinct mod p over `0 ≤ k ≤ (p-1)/2`.
/// For f: `P(k) ≢ (p²-1)/24 (mod p)` for every `|k| ≤ (p-1)/2` other than `k*`.
pub fn disjointness_check(kind: ThetaKind, p: u64) -> Result<Disjointness> {
    kind.validate(p)?;
    let pi = p as i64;
    let half = (pi - 1) / 2;
    let mut witness = None;
    match kind {
        ThetaKind::Psi => {
            'outer: for k in 0..=half {
                for m in 0..k {
                    if (triangular(k) - triangular(m)).rem_euclid(pi) == 0 {
                        witness = Some((m, k));
                        break 'outer;
                    }
                }
            }
        }
        ThetaKind::FNeg => {
            let target = ((p * p - 1) / 24) as i64 % pi;
            let k_star = excluded_index(p);
            witness = (-half..=half)
                .filter(|&k| k != k_star)
                .find(|&k| pentagonal(k).rem_euclid(pi) == target)
                .map(|k| (k, k_star));
        }
    }
    Ok(Disjointness {
        function: kind,
        prime: p,
        passed: witness.is_none(),
        witness,
    })
}

/// Residue classes mod p where the dissection has a nonzero component.
pub fn support_classes(kind: ThetaKind, p: u64) -> Result<BTreeSet<u64>> {
    Ok(certificate(kind, p)?.support)
}
