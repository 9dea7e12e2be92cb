//! The congruence catalog: every family of Ramanujan-type congruences the
//! engine knows, and the instantiation of a family into concrete claims.
//!
//! A claim `f(A·n + B) ≡ 0 (mod m)` is emitted only when the parameters meet
//! the family's hypotheses. Violations are errors and are never skipped.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{is_odd_prime, is_prime, legendre};
use crate::partitions::PartitionFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("{entry}: missing parameter {name}")]
    MissingParameter { entry: String, name: &'static str },
    #[error("{entry}: parameter {name} does not apply")]
    UnexpectedParameter { entry: String, name: &'static str },
    #[error("{entry}: hypothesis violated: {hypothesis}")]
    Hypothesis { entry: String, hypothesis: String },
    #[error("{entry}: alpha = {alpha} is below the minimum {minimum}")]
    AlphaBelowMinimum { entry: String, alpha: u64, minimum: u64 },
    #[error("{entry}: {name} = {value} is outside {lo}..={hi}")]
    IndexOutOfRange { entry: String, name: &'static str, value: u64, lo: u64, hi: u64 },
    #[error("{entry}: {name} = {value} is not admissible for p = {p}")]
    NotAdmissible { entry: String, name: &'static str, value: u64, p: u64 },
    #[error("{entry}: no member {member}; members are 1..={count}")]
    NoSuchMember { entry: String, member: u32, count: u32 },
    #[error("{entry}: progression does not fit in 64 bits")]
    Overflow { entry: String },
    #[error("internal error in {entry}: offset {numerator}/{denominator} is not an integer")]
    NonIntegralOffset { entry: String, numerator: i128, denominator: i128 },
}

pub type Result<T> = std::result::Result<T, CatalogError>;

/// Where a claim came from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Provenance {
    pub catalog_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub member: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub primes: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    /// Instantiated outside the shipped range to reproduce a known failure.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub erratum_probe: bool,
}

/// `function(a·n + b) ≡ 0 (mod modulus)` for every `n ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CongruenceClaim {
    pub function: PartitionFunction,
    pub a: u64,
    pub b: u64,
    pub modulus: u64,
    pub provenance: Provenance,
}

impl CongruenceClaim {
    /// A claim with empty provenance. `a ≥ 1` and `modulus ≥ 2`.
    pub fn new(function: PartitionFunction, a: u64, b: u64, modulus: u64) -> Option<Self> {
        (a >= 1 && modulus >= 2).then(|| CongruenceClaim {
            function,
            a,
            b,
            modulus,
            provenance: Provenance::default(),
        })
    }

    /// `a·n + b`, if it fits.
    pub fn index(&self, n: u64) -> Option<u64> {
        self.a.checked_mul(n)?.checked_add(self.b)
    }

    /// Largest index touched by the first `n_count` terms.
    pub fn truncation_for(&self, n_count: u64) -> Option<u64> {
        self.index(n_count.checked_sub(1)?)
    }

    /// How many terms fit under `cap`; zero when even `n = 0` does not.
    pub fn affordable_count(&self, n_count: u64, cap: u64) -> u64 {
        if self.b > cap {
            0
        } else {
            n_count.min((cap - self.b) / self.a + 1)
        }
    }
}

impl fmt::Display for CongruenceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}n+{}) = 0 (mod {})", self.function, self.a, self.b, self.modulus)
    }
}

/// Parameters for instantiating one catalog entry.
///
/// `index` is `i`, `j` or `r` depending on the entry; `None` emits every valid
/// value. `member` selects one congruence of a multi-member entry (1-based).
/// Members without an `alpha` parameter are emitted when `alpha` is `None` or
/// equals the entry's smallest stated `alpha`, so sweeping `alpha` upward
/// emits them exactly once.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub catalog_id: String,
    pub p: Option<u64>,
    pub alpha: Option<u64>,
    pub index: Option<u64>,
    pub primes: Vec<u64>,
    pub k: Option<u64>,
    pub member: Option<u32>,
    /// Accept `alpha` down to the stated minimum instead of the shipped one;
    /// rows outside the shipped range are marked as erratum probes.
    pub probe_stated_range: bool,
}

impl FamilyParams {
    pub fn new(id: &str) -> Self {
        FamilyParams {
            catalog_id: id.to_string(),
            ..Default::default()
        }
    }

    pub fn p(mut self, p: u64) -> Self {
        self.p = Some(p);
        self
    }

    pub fn alpha(mut self, alpha: u64) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn index(mut self, index: u64) -> Self {
        self.index = Some(index);
        self
    }

    pub fn primes(mut self, primes: &[u64]) -> Self {
        self.primes = primes.to_vec();
        self
    }

    pub fn k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn member(mut self, member: u32) -> Self {
        self.member = Some(member);
        self
    }

    pub fn probe(mut self) -> Self {
        self.probe_stated_range = true;
        self
    }
}

/// How an entry is parameterized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// One prime `p`, an exponent `alpha` and a residue index.
    Prime,
    /// A list of primes `p_1 .. p_r` and a residue index for `p_r`.
    MultiPrime,
    /// A fixed list of members, some with an `alpha` parameter.
    Members,
    /// Members indexed by a multiplier `k ≥ 1`.
    Multiplier,
}

/// Public description of one entry, serialized by the `catalog` command.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub shape: Shape,
    pub function: &'static str,
    pub modulus: &'static str,
    pub parameters: &'static [&'static str],
    pub hypotheses: &'static [&'static str],
    pub formulas: Vec<&'static str>,
    /// Smallest `alpha` the catalog instantiates, if `alpha` applies.
    pub alpha_min: Option<u64>,
    /// Smallest `alpha` in the original statement, when it differs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stated_alpha_min: Option<u64>,
    #[serde(skip_serializing_if = "str::is_empty")]
    pub notes: &'static str,
}

/// One progression before the offset division: `A·n + num/den`.
struct Raw {
    function: PartitionFunction,
    a: u128,
    num: i128,
    den: i128,
    modulus: u64,
}

type MemberFn = fn(u64, u64) -> Option<Raw>;

/// One congruence of a fixed-member entry. The builder takes `(alpha, k)`.
struct Member {
    formula: &'static str,
    alpha_min: Option<u64>,
    stated_alpha_min: Option<u64>,
    build: MemberFn,
}

const fn member(formula: &'static str, alpha_min: Option<u64>, build: MemberFn) -> Member {
    Member {
        formula,
        alpha_min,
        stated_alpha_min: alpha_min,
        build,
    }
}

fn pw(base: u64, exp: u64) -> Option<u128> {
    (base as u128).checked_pow(u32::try_from(exp).ok()?)
}

fn raw(ell: u64, a: u128, num: i128, den: i128, modulus: u64) -> Option<Raw> {
    Some(Raw {
        function: PartitionFunction::Regular(ell),
        a,
        num,
        den,
        modulus,
    })
}

fn signed(v: u128) -> Option<i128> {
    i128::try_from(v).ok()
}

const PED3: [Member; 3] = [
    member("b4(3^(2a+1) n + (17*3^(2a)-1)/8) = 0 mod 2", Some(0), |a, _| {
        raw(4, pw(3, 2 * a + 1)?, 17 * signed(pw(3, 2 * a)?)? - 1, 8, 2)
    }),
    member("b4(3^(2a+2) n + (11*3^(2a+1)-1)/8) = 0 mod 2", Some(0), |a, _| {
        raw(4, pw(3, 2 * a + 2)?, 11 * signed(pw(3, 2 * a + 1)?)? - 1, 8, 2)
    }),
    member("b4(3^(2a+2) n + (19*3^(2a+1)-1)/8) = 0 mod 2", Some(0), |a, _| {
        raw(4, pw(3, 2 * a + 2)?, 19 * signed(pw(3, 2 * a + 1)?)? - 1, 8, 2)
    }),
];

/// The `alpha` slot holds the exponent `l ≥ 2`.
const B13_MOD3: [Member; 1] = [member("b13(3^l n + (5*3^(l-1)-1)/2) = 0 mod 3, alpha = l", Some(2), |l, _| {
    raw(13, pw(3, l)?, 5 * signed(pw(3, l - 1)?)? - 1, 2, 3)
})];

const B13_MOD6: [Member; 2] = [
    member("b13(4*3^(2a+1) n + (17*3^(2a)-1)/2) = 0 mod 6", Some(1), |a, _| {
        raw(13, 4 * pw(3, 2 * a + 1)?, 17 * signed(pw(3, 2 * a)?)? - 1, 2, 6)
    }),
    member("b13(4*3^(2a) n + (11*3^(2a-1)-1)/2) = 0 mod 6", Some(1), |a, _| {
        raw(13, 4 * pw(3, 2 * a)?, 11 * signed(pw(3, 2 * a - 1)?)? - 1, 2, 6)
    }),
];

const B5_CALKIN: [Member; 2] = [
    member("b5(20n + 5) = 0 mod 2", None, |_, _| raw(5, 20, 5, 1, 2)),
    member("b5(20n + 13) = 0 mod 2", None, |_, _| raw(5, 20, 13, 1, 2)),
];

const B5_POWER: [Member; 4] = [
    member("b5(4*5^(2a+1) n + (31*5^(2a)-1)/6) = 0 mod 2", Some(0), |a, _| {
        raw(5, 4 * pw(5, 2 * a + 1)?, 31 * signed(pw(5, 2 * a)?)? - 1, 6, 2)
    }),
    member("b5(4*5^(2a+1) n + (79*5^(2a)-1)/6) = 0 mod 2", Some(0), |a, _| {
        raw(5, 4 * pw(5, 2 * a + 1)?, 79 * signed(pw(5, 2 * a)?)? - 1, 6, 2)
    }),
    member("b5(4*5^(2a+2) n + (83*5^(2a+1)-1)/6) = 0 mod 2", Some(0), |a, _| {
        raw(5, 4 * pw(5, 2 * a + 2)?, 83 * signed(pw(5, 2 * a + 1)?)? - 1, 6, 2)
    }),
    member("b5(4*5^(2a+2) n + (107*5^(2a+1)-1)/6) = 0 mod 2", Some(0), |a, _| {
        raw(5, 4 * pw(5, 2 * a + 2)?, 107 * signed(pw(5, 2 * a + 1)?)? - 1, 6, 2)
    }),
];

const RAMANUJAN_LIFT: [Member; 5] = [
    member("b_(5k)(5n + 4) = 0 mod 5", None, |_, k| raw(5 * k, 5, 4, 1, 5)),
    member("b_(7k)(7n + 5) = 0 mod 7", None, |_, k| raw(7 * k, 7, 5, 1, 7)),
    member("b_(11k)(11n + 6) = 0 mod 11", None, |_, k| raw(11 * k, 11, 6, 1, 11)),
    member("b_(25k)(25n + 24) = 0 mod 25", None, |_, k| raw(25 * k, 25, 24, 1, 25)),
    member("b_(49k)(49n + 47) = 0 mod 49", None, |_, k| raw(49 * k, 49, 47, 1, 49)),
];

const COMBINED: [Member; 13] = [
    Member {
        formula: "b5(4*5^(2a+2) n + (31*5^(2a)-1)/6) = 0 mod 10",
        alpha_min: Some(1),
        stated_alpha_min: Some(0),
        build: |a, _| raw(5, 4 * pw(5, 2 * a + 2)?, 31 * signed(pw(5, 2 * a)?)? - 1, 6, 10),
    },
    Member {
        formula: "b5(4*5^(2a+2) n + (79*5^(2a)-1)/6) = 0 mod 10",
        alpha_min: Some(1),
        stated_alpha_min: Some(0),
        build: |a, _| raw(5, 4 * pw(5, 2 * a + 2)?, 79 * signed(pw(5, 2 * a)?)? - 1, 6, 10),
    },
    member("b5(4*5^(2a+3) n + (83*5^(2a+1)-1)/6) = 0 mod 10", Some(0), |a, _| {
        raw(5, 4 * pw(5, 2 * a + 3)?, 83 * signed(pw(5, 2 * a + 1)?)? - 1, 6, 10)
    }),
    member("b5(4*5^(2a+3) n + (107*5^(2a+1)-1)/6) = 0 mod 10", Some(0), |a, _| {
        raw(5, 4 * pw(5, 2 * a + 3)?, 107 * signed(pw(5, 2 * a + 1)?)? - 1, 6, 10)
    }),
    member("b7(7*3^(2a+2) n + (35*3^(2a+1)-1)/4) = 0 mod 21", Some(0), |a, _| {
        raw(7, 7 * pw(3, 2 * a + 2)?, 35 * signed(pw(3, 2 * a + 1)?)? - 1, 4, 21)
    }),
    member("b7(7*3^(2a+3) n + (77*3^(2a+2)-1)/4) = 0 mod 21", Some(0), |a, _| {
        raw(7, 7 * pw(3, 2 * a + 3)?, 77 * signed(pw(3, 2 * a + 2)?)? - 1, 4, 21)
    }),
    member("b25(5*3^(2a+3) n + 5*3^(2a+2) - 1) = 0 mod 15", Some(0), |a, _| {
        raw(25, 5 * pw(3, 2 * a + 3)?, 5 * signed(pw(3, 2 * a + 2)?)? - 1, 1, 15)
    }),
    member("b25(25*3^(2a+3) n + 50*3^(2a+2) - 1) = 0 mod 75", Some(0), |a, _| {
        raw(25, 25 * pw(3, 2 * a + 3)?, 50 * signed(pw(3, 2 * a + 2)?)? - 1, 1, 75)
    }),
    member("b49(7*3^(3a+3) n + 14*3^(3a+2) - 2) = 0 mod 21", Some(0), |a, _| {
        raw(49, 7 * pw(3, 3 * a + 3)?, 14 * signed(pw(3, 3 * a + 2)?)? - 2, 1, 21)
    }),
    member("b49(49*3^(3a+3) n + 98*3^(3a+2) - 2) = 0 mod 147", Some(0), |a, _| {
        raw(49, 49 * pw(3, 3 * a + 3)?, 98 * signed(pw(3, 3 * a + 2)?)? - 2, 1, 147)
    }),
    member("b10(45n + 39) = 0 mod 15", None, |_, _| raw(10, 45, 39, 1, 15)),
    member("b22(297n + 259) = 0 mod 33", None, |_, _| raw(22, 297, 259, 1, 33)),
    member("b28(189n + 117) = 0 mod 21", None, |_, _| raw(28, 189, 117, 1, 21)),
];

const MOD3: [Member; 14] = [
    member("b7(3^(2a+2) n + (11*3^(2a+1)-1)/4) = 0 mod 3", Some(0), |a, _| {
        raw(7, pw(3, 2 * a + 2)?, 11 * signed(pw(3, 2 * a + 1)?)? - 1, 4, 3)
    }),
    member("b7(3^(2a+3) n + (5*3^(2a+2)-1)/4) = 0 mod 3", Some(0), |a, _| {
        raw(7, pw(3, 2 * a + 3)?, 5 * signed(pw(3, 2 * a + 2)?)? - 1, 4, 3)
    }),
    member("b19(3^(2a+4) n + (5*3^(2a+3)-3)/4) = 0 mod 3", Some(0), |a, _| {
        raw(19, pw(3, 2 * a + 4)?, 5 * signed(pw(3, 2 * a + 3)?)? - 3, 4, 3)
    }),
    member("b19(3^(2a+5) n + (11*3^(2a+4)-3)/4) = 0 mod 3", Some(0), |a, _| {
        raw(19, pw(3, 2 * a + 5)?, 11 * signed(pw(3, 2 * a + 4)?)? - 3, 4, 3)
    }),
    member("b25(3^(2a+3) n + 2*3^(2a+2) - 1) = 0 mod 3", Some(0), |a, _| {
        raw(25, pw(3, 2 * a + 3)?, 2 * signed(pw(3, 2 * a + 2)?)? - 1, 1, 3)
    }),
    member("b34(3^(4a+3) n + (19*3^(4a+2)-11)/8) = 0 mod 3", Some(0), |a, _| {
        raw(34, pw(3, 4 * a + 3)?, 19 * signed(pw(3, 4 * a + 2)?)? - 11, 8, 3)
    }),
    member("b34(3^(4a+5) n + (11*3^(4a+4)-11)/8) = 0 mod 3", Some(0), |a, _| {
        raw(34, pw(3, 4 * a + 5)?, 11 * signed(pw(3, 4 * a + 4)?)? - 11, 8, 3)
    }),
    member("b37(3^(3a+3) n + (3^(3a+2)-3)/2) = 0 mod 3", Some(0), |a, _| {
        raw(37, pw(3, 3 * a + 3)?, signed(pw(3, 3 * a + 2)?)? - 3, 2, 3)
    }),
    member("b43(3^(2a+4) n + (5*3^(2a+3)-7)/4) = 0 mod 3", Some(0), |a, _| {
        raw(43, pw(3, 2 * a + 4)?, 5 * signed(pw(3, 2 * a + 3)?)? - 7, 4, 3)
    }),
    member("b43(3^(2a+5) n + (11*3^(2a+4)-7)/4) = 0 mod 3", Some(0), |a, _| {
        raw(43, pw(3, 2 * a + 5)?, 11 * signed(pw(3, 2 * a + 4)?)? - 7, 4, 3)
    }),
    member("b49(3^(3a+3) n + 2*3^(3a+2) - 2) = 0 mod 3", Some(0), |a, _| {
        raw(49, pw(3, 3 * a + 3)?, 2 * signed(pw(3, 3 * a + 2)?)? - 2, 1, 3)
    }),
    member("b10(9n + 3) = 0 mod 3", None, |_, _| raw(10, 9, 3, 1, 3)),
    member("b22(27n + 16) = 0 mod 3", None, |_, _| raw(22, 27, 16, 1, 3)),
    member("b28(27n + 9) = 0 mod 3", None, |_, _| raw(28, 27, 9, 1, 3)),
];

/// Prime-indexed entries: `A(p, α)`, the offset numerator `N(p, α, index)` and
/// its denominator.
struct PrimeFamily {
    ell: u64,
    modulus: u64,
    index_name: &'static str,
    /// Legendre condition on the index, `(c·index + d / p) = -1`, if any.
    residue_condition: Option<(i64, i64)>,
    index_lo: u64,
    alpha_min: u64,
    den: i128,
    build: fn(u128, u64, i128) -> Option<(u128, i128)>,
}

#[allow(clippy::too_many_arguments)]
fn pf(
    ell: u64,
    modulus: u64,
    index_name: &'static str,
    residue_condition: Option<(i64, i64)>,
    index_lo: u64,
    alpha_min: u64,
    den: i128,
    build: fn(u128, u64, i128) -> Option<(u128, i128)>,
) -> PrimeFamily {
    PrimeFamily {
        ell,
        modulus,
        index_name,
        residue_condition,
        index_lo,
        alpha_min,
        den,
        build,
    }
}

fn prime_family(id: &str) -> Option<PrimeFamily> {
    // Each builder takes (p, alpha, index) and returns (A, numerator).
    Some(match id {
        "b2-even-i" => pf(2, 2, "i", None, 1, 1, 24, |p, a, i| {
            Some((p.checked_pow(2 * a as u32)?, (24 * i + p as i128) * signed(p.checked_pow(2 * a as u32 - 1)?)? - 1))
        }),
        "b2-even-j" => pf(2, 2, "j", Some((24, 1)), 0, 0, 24, |p, a, j| {
            Some((p.checked_pow(2 * a as u32 + 1)?, (24 * j + 1) * signed(p.checked_pow(2 * a as u32)?)? - 1))
        }),
        "b4-even-i" => pf(4, 2, "i", None, 1, 1, 8, |p, a, i| {
            Some((p.checked_pow(2 * a as u32)?, (8 * i + p as i128) * signed(p.checked_pow(2 * a as u32 - 1)?)? - 1))
        }),
        "b4-even-j" => pf(4, 2, "j", Some((8, 1)), 0, 0, 8, |p, a, j| {
            Some((p.checked_pow(2 * a as u32 + 1)?, (8 * j + 1) * signed(p.checked_pow(2 * a as u32)?)? - 1))
        }),
        "b13-even-i" => pf(13, 2, "i", None, 1, 0, 2, |p, a, i| {
            Some((
                4 * p.checked_pow(2 * a as u32 + 2)?,
                (8 * i + p as i128) * signed(p.checked_pow(2 * a as u32 + 1)?)? - 1,
            ))
        }),
        "b13-even-j" => pf(13, 2, "j", Some((8, 1)), 0, 0, 2, |p, a, j| {
            Some((4 * p.checked_pow(2 * a as u32 + 1)?, (8 * j + 1) * signed(p.checked_pow(2 * a as u32)?)? - 1))
        }),
        "b5-even-i" => pf(5, 2, "i", None, 1, 1, 6, |p, a, i| {
            Some((
                4 * p.checked_pow(2 * a as u32)?,
                (24 * i + 7 * p as i128) * signed(p.checked_pow(2 * a as u32 - 1)?)? - 1,
            ))
        }),
        "b8-even-i" => pf(8, 2, "i", None, 1, 1, 24, |p, a, i| {
            Some((p.checked_pow(2 * a as u32)?, (24 * i + 7 * p as i128) * signed(p.checked_pow(2 * a as u32 - 1)?)? - 7))
        }),
        "b16-even-i" => pf(16, 2, "i", None, 1, 0, 8, |p, a, i| {
            Some((
                p.checked_pow(2 * a as u32 + 2)?,
                (8 * i + 5 * p as i128) * signed(p.checked_pow(2 * a as u32 + 1)?)? - 5,
            ))
        }),
        "sellers-parity" => pf(0, 2, "r", Some((24, 1)), 1, 0, 1, |p, _, r| Some((p, r))),
        _ => return None,
    })
}

/// Hypothesis on `p` for a prime-indexed or multi-prime entry.
fn prime_hypothesis(id: &str, p: u64) -> std::result::Result<(), &'static str> {
    let ok = match id {
        "b2-even-i" | "b2-even-j" | "b2-multiprime-i" | "b2-multiprime-j" => p >= 5 && is_prime(p),
        "b4-even-i" | "b4-even-j" | "b4-multiprime-i" | "b4-multiprime-j" | "b13-even-i" | "b13-even-j" => {
            is_odd_prime(p)
        }
        "b5-even-i" | "b5-even-HS" => p >= 5 && is_prime(p) && legendre(-10, p) == Ok(-1),
        "b8-even-i" => is_prime(p) && p % 6 == 5,
        "b16-even-i" => is_prime(p) && p % 4 == 3,
        "sellers-parity" => p >= 5 && is_prime(p),
        _ => true,
    };
    if ok {
        return Ok(());
    }
    Err(match id {
        "b2-even-i" | "b2-even-j" | "b2-multiprime-i" | "b2-multiprime-j" | "sellers-parity" => "p must be a prime >= 5",
        "b5-even-i" | "b5-even-HS" => "p must be a prime >= 5 with (-10/p) = -1",
        "b8-even-i" => "p must be a prime with p = -1 (mod 6)",
        "b16-even-i" => "p must be a prime with p = -1 (mod 4)",
        _ => "p must be an odd prime",
    })
}

const IDS: [&str; 23] = [
    "b2-even-i",
    "b2-even-j",
    "b2-multiprime-i",
    "b2-multiprime-j",
    "b4-even-i",
    "b4-even-j",
    "b4-multiprime-i",
    "b4-multiprime-j",
    "ped-3",
    "b13-even-i",
    "b13-even-j",
    "b13-mod3",
    "b13-mod6",
    "b5-even-calkin",
    "b5-even-HS",
    "b5-even-i",
    "b5-even-5power",
    "b8-even-i",
    "b16-even-i",
    "ramanujan-lift",
    "combined-4",
    "fp-mod3",
    "sellers-parity",
];

fn members(id: &str) -> Option<&'static [Member]> {
    Some(match id {
        "ped-3" => &PED3,
        "b13-mod3" => &B13_MOD3,
        "b13-mod6" => &B13_MOD6,
        "b5-even-calkin" => &B5_CALKIN,
        "b5-even-5power" => &B5_POWER,
        "ramanujan-lift" => &RAMANUJAN_LIFT,
        "combined-4" => &COMBINED,
        "fp-mod3" => &MOD3,
        _ => return None,
    })
}

/// Every entry id, in catalog order.
pub fn ids() -> &'static [&'static str] {
    &IDS
}

/// Describes one entry.
pub fn entry(id: &str) -> Result<CatalogEntry> {
    let unknown = || CatalogError::UnknownEntry(id.to_string());
    if !IDS.contains(&id) {
        return Err(unknown());
    }
    if let Some(ms) = members(id) {
        let alpha_min = ms.iter().filter_map(|m| m.alpha_min).min();
        let stated = ms.iter().filter_map(|m| m.stated_alpha_min).min();
        let (function, modulus, parameters, hypotheses, notes): (_, _, &[&str], &[&str], _) = match id {
            "ped-3" => ("b4", "2", &["alpha", "member"], &["alpha >= 0"], ""),
            "b13-mod3" => ("b13", "3", &["alpha", "member"], &["alpha is the exponent l >= 2"], ""),
            "b13-mod6" => ("b13", "6", &["alpha", "member"], &["alpha >= 1"], ""),
            "b5-even-calkin" => ("b5", "2", &["member"], &[], ""),
            "b5-even-5power" => ("b5", "2", &["alpha", "member"], &["alpha >= 0"], ""),
            "ramanujan-lift" => ("b_(5k), b_(7k), b_(11k), b_(25k), b_(49k)", "5, 7, 11, 25, 49", &["k", "member"], &["k >= 1"], ""),
            "combined-4" => (
                "b5, b7, b25, b49, b10, b22, b28",
                "10, 15, 21, 33, 75, 147",
                &["alpha", "member"],
                &["alpha >= 0 (members 1 and 2: alpha >= 1)"],
                "Members 1 and 2 were stated for alpha >= 0, but at alpha = 0 member 1 \
                 requires b5(5) = 6 to vanish mod 10. They ship with alpha >= 1; the mod 2 \
                 part holds for alpha >= 0 through b5-even-5power.",
            ),
            _ => ("b7, b19, b25, b34, b37, b43, b49, b10, b22, b28", "3", &["alpha", "member"], &["alpha >= 0"], ""),
        };
        return Ok(CatalogEntry {
            id: *IDS.iter().find(|&&x| x == id).expect("listed"),
            shape: if id == "ramanujan-lift" { Shape::Multiplier } else { Shape::Members },
            function,
            modulus,
            parameters,
            hypotheses,
            formulas: ms.iter().map(|m| m.formula).collect(),
            alpha_min,
            stated_alpha_min: (stated != alpha_min).then_some(stated).flatten(),
            notes,
        });
    }
    let id_static = *IDS.iter().find(|&&x| x == id).expect("listed");
    let (shape, function, parameters, hypotheses, formula, alpha_min): (_, _, &[&str], &[&str], _, _) = match id {
        "b2-even-i" => (Shape::Prime, "b2", &["p", "alpha", "i"], &["p prime >= 5", "alpha >= 1", "1 <= i <= p-1"],
            "b2(p^(2a) n + ((24i+p) p^(2a-1) - 1)/24) = 0 mod 2", Some(1)),
        "b2-even-j" => (Shape::Prime, "b2", &["p", "alpha", "j"], &["p prime >= 5", "alpha >= 0", "0 <= j <= p-1", "(24j+1 / p) = -1"],
            "b2(p^(2a+1) n + ((24j+1) p^(2a) - 1)/24) = 0 mod 2", Some(0)),
        "b2-multiprime-i" => (Shape::MultiPrime, "b2", &["primes", "i"], &["every p_s prime >= 5", "1 <= i <= p_r - 1"],
            "b2(P^2 p_r^2 n + ((24i+p_r) P^2 p_r - 1)/24) = 0 mod 2, P = p_1 ... p_(r-1)", None),
        "b2-multiprime-j" => (Shape::MultiPrime, "b2", &["primes", "j"], &["every p_s prime >= 5", "(24j+1 / p_r) = -1"],
            "b2(P^2 p_r n + ((24j+1) P^2 - 1)/24) = 0 mod 2, P = p_1 ... p_(r-1)", None),
        "b4-even-i" => (Shape::Prime, "b4", &["p", "alpha", "i"], &["p odd prime", "alpha >= 1", "1 <= i <= p-1"],
            "b4(p^(2a) n + ((8i+p) p^(2a-1) - 1)/8) = 0 mod 2", Some(1)),
        "b4-even-j" => (Shape::Prime, "b4", &["p", "alpha", "j"], &["p odd prime", "alpha >= 0", "(8j+1 / p) = -1"],
            "b4(p^(2a+1) n + ((8j+1) p^(2a) - 1)/8) = 0 mod 2", Some(0)),
        "b4-multiprime-i" => (Shape::MultiPrime, "b4", &["primes", "i"], &["every p_s odd prime", "1 <= i <= p_r - 1"],
            "b4(P^2 p_r^2 n + ((8i+p_r) P^2 p_r - 1)/8) = 0 mod 2, P = p_1 ... p_(r-1)", None),
        "b4-multiprime-j" => (Shape::MultiPrime, "b4", &["primes", "j"], &["every p_s odd prime", "(8j+1 / p_r) = -1"],
            "b4(P^2 p_r n + ((8j+1) P^2 - 1)/8) = 0 mod 2, P = p_1 ... p_(r-1)", None),
        "b13-even-i" => (Shape::Prime, "b13", &["p", "alpha", "i"], &["p odd prime", "alpha >= 0", "1 <= i <= p-1"],
            "b13(4 p^(2a+2) n + ((8i+p) p^(2a+1) - 1)/2) = 0 mod 2", Some(0)),
        "b13-even-j" => (Shape::Prime, "b13", &["p", "alpha", "j"], &["p odd prime", "alpha >= 0", "(8j+1 / p) = -1"],
            "b13(4 p^(2a+1) n + ((8j+1) p^(2a) - 1)/2) = 0 mod 2", Some(0)),
        "b5-even-HS" => (Shape::Prime, "b5", &["p", "i"], &["p prime >= 5", "(-10 / p) = -1", "1 <= i <= p-1"],
            "b5(4 p^2 n + (24i+7p - 1)/6) = 0 mod 2 (b5-even-i at alpha = 1)", Some(1)),
        "b5-even-i" => (Shape::Prime, "b5", &["p", "alpha", "i"], &["p prime >= 5", "(-10 / p) = -1", "alpha >= 1", "1 <= i <= p-1"],
            "b5(4 p^(2a) n + ((24i+7p) p^(2a-1) - 1)/6) = 0 mod 2", Some(1)),
        "b8-even-i" => (Shape::Prime, "b8", &["p", "alpha", "i"], &["p prime, p = -1 mod 6", "alpha >= 1", "1 <= i <= p-1"],
            "b8(p^(2a) n + ((24i+7p) p^(2a-1) - 7)/24) = 0 mod 2", Some(1)),
        "b16-even-i" => (Shape::Prime, "b16", &["p", "alpha", "i"], &["p prime, p = -1 mod 4", "alpha >= 0", "1 <= i <= p-1"],
            "b16(p^(2a+2) n + ((8i+5p) p^(2a+1) - 5)/8) = 0 mod 2", Some(0)),
        _ => (Shape::Prime, "bd_p", &["p", "r"], &["p prime >= 5", "1 <= r <= p-1", "(24r+1 / p) = -1"],
            "bd_p(p n + r) = 0 mod 2 (distinct parts, none divisible by p)", None),
    };
    Ok(CatalogEntry {
        id: id_static,
        shape,
        function,
        modulus: "2",
        parameters,
        hypotheses,
        formulas: vec![formula],
        alpha_min,
        stated_alpha_min: None,
        notes: "",
    })
}

/// All entries in catalog order.
pub fn entries() -> Vec<CatalogEntry> {
    IDS.iter().map(|id| entry(id).expect("listed")).collect()
}

/// The residue indices `j` in `0..p` with `(c·j + d / p) = -1` for an entry
/// that has a Legendre condition.
pub fn admissible_j(id: &str, p: u64) -> Result<Vec<u64>> {
    let entry_err = |h: &str| CatalogError::Hypothesis {
        entry: id.to_string(),
        hypothesis: h.to_string(),
    };
    let (c, d) = match id {
        "b2-even-j" | "b2-multiprime-j" | "sellers-parity" => (24, 1),
        "b4-even-j" | "b4-multiprime-j" | "b13-even-j" => (8, 1),
        _ if IDS.contains(&id) => return Err(entry_err("entry has no residue condition")),
        _ => return Err(CatalogError::UnknownEntry(id.to_string())),
    };
    prime_hypothesis(id, p).map_err(entry_err)?;
    let lo = if id == "sellers-parity" { 1 } else { 0 };
    Ok((lo..p).filter(|&j| legendre(c * j as i64 + d, p) == Ok(-1)).collect())
}

fn finish(id: &str, r: Raw, provenance: Provenance) -> Result<CongruenceClaim> {
    let overflow = || CatalogError::Overflow { entry: id.to_string() };
    if r.num < 0 || r.num % r.den != 0 {
        return Err(CatalogError::NonIntegralOffset {
            entry: id.to_string(),
            numerator: r.num,
            denominator: r.den,
        });
    }
    Ok(CongruenceClaim {
        function: r.function,
        a: u64::try_from(r.a).map_err(|_| overflow())?,
        b: u64::try_from(r.num / r.den).map_err(|_| overflow())?,
        modulus: r.modulus,
        provenance,
    })
}

/// Instantiates an entry into concrete claims.
pub fn family_claims(params: &FamilyParams) -> Result<Vec<CongruenceClaim>> {
    let id = params.catalog_id.as_str();
    if !IDS.contains(&id) {
        return Err(CatalogError::UnknownEntry(id.to_string()));
    }
    let unexpected = |name| CatalogError::UnexpectedParameter { entry: id.to_string(), name };
    if let Some(ms) = members(id) {
        if params.p.is_some() {
            return Err(unexpected("p"));
        }
        if params.index.is_some() {
            return Err(unexpected("index"));
        }
        if !params.primes.is_empty() {
            return Err(unexpected("primes"));
        }
        if id != "ramanujan-lift" && params.k.is_some() {
            return Err(unexpected("k"));
        }
        if id == "ramanujan-lift" && params.alpha.is_some() {
            return Err(unexpected("alpha"));
        }
        return member_claims(id, ms, params);
    }
    if params.k.is_some() {
        return Err(unexpected("k"));
    }
    if params.member.is_some() {
        return Err(unexpected("member"));
    }
    match id {
        "b2-multiprime-i" | "b2-multiprime-j" | "b4-multiprime-i" | "b4-multiprime-j" => {
            if params.p.is_some() {
                return Err(unexpected("p"));
            }
            if params.alpha.is_some() {
                return Err(unexpected("alpha"));
            }
            multiprime_claims(id, params)
        }
        "b5-even-HS" => {
            if params.alpha.is_some_and(|a| a != 1) {
                return Err(unexpected("alpha"));
            }
            let mut inner = params.clone();
            inner.catalog_id = "b5-even-i".to_string();
            inner.alpha = Some(1);
            let mut claims = family_claims(&inner)?;
            for c in &mut claims {
                c.provenance.catalog_id = id.to_string();
            }
            Ok(claims)
        }
        _ => {
            if !params.primes.is_empty() {
                return Err(unexpected("primes"));
            }
            prime_claims(id, params)
        }
    }
}

fn member_claims(id: &str, ms: &[Member], params: &FamilyParams) -> Result<Vec<CongruenceClaim>> {
    let count = ms.len() as u32;
    let selected: Vec<u32> = match params.member {
        Some(m) if m == 0 || m > count => {
            return Err(CatalogError::NoSuchMember {
                entry: id.to_string(),
                member: m,
                count,
            })
        }
        Some(m) => vec![m],
        None => (1..=count).collect(),
    };
    let k = if id == "ramanujan-lift" {
        let k = params.k.unwrap_or(1);
        if k == 0 {
            return Err(CatalogError::Hypothesis {
                entry: id.to_string(),
                hypothesis: "k >= 1".to_string(),
            });
        }
        Some(k)
    } else {
        None
    };
    let floor = ms.iter().filter_map(|m| m.stated_alpha_min).min();
    let mut out = Vec::new();
    for number in selected {
        let m = &ms[number as usize - 1];
        let (alpha, probe) = match (m.alpha_min, params.alpha) {
            (None, Some(a)) if params.member.is_none() && Some(a) != floor => continue,
            (None, _) => (None, false),
            (Some(shipped), None) => (Some(shipped), false),
            (Some(shipped), Some(a)) => {
                let stated = m.stated_alpha_min.unwrap_or(shipped);
                if a >= shipped {
                    (Some(a), false)
                } else if params.probe_stated_range && a >= stated {
                    (Some(a), true)
                } else {
                    return Err(CatalogError::AlphaBelowMinimum {
                        entry: format!("{id} member {number}"),
                        alpha: a,
                        minimum: shipped,
                    });
                }
            }
        };
        let r = (m.build)(alpha.unwrap_or(0), k.unwrap_or(1)).ok_or(CatalogError::Overflow { entry: id.to_string() })?;
        let provenance = Provenance {
            catalog_id: id.to_string(),
            member: Some(number),
            alpha,
            k,
            erratum_probe: probe,
            ..Default::default()
        };
        out.push(finish(id, r, provenance)?);
    }
    Ok(out)
}

fn check_index(id: &str, name: &'static str, value: u64, lo: u64, p: u64) -> Result<()> {
    if value < lo || value >= p {
        return Err(CatalogError::IndexOutOfRange {
            entry: id.to_string(),
            name,
            value,
            lo,
            hi: p - 1,
        });
    }
    Ok(())
}

/// Indices to emit: the requested one after validation, or every valid one.
fn indices(
    id: &str,
    name: &'static str,
    requested: Option<u64>,
    lo: u64,
    p: u64,
    condition: Option<(i64, i64)>,
) -> Result<Vec<u64>> {
    let admissible = |j: u64| condition.is_none_or(|(c, d)| legendre(c * j as i64 + d, p) == Ok(-1));
    match requested {
        Some(j) => {
            check_index(id, name, j, lo, p)?;
            if !admissible(j) {
                return Err(CatalogError::NotAdmissible {
                    entry: id.to_string(),
                    name,
                    value: j,
                    p,
                });
            }
            Ok(vec![j])
        }
        None => Ok((lo..p).filter(|&j| admissible(j)).collect()),
    }
}

fn prime_claims(id: &str, params: &FamilyParams) -> Result<Vec<CongruenceClaim>> {
    let fam = prime_family(id).expect("prime-indexed entry");
    let p = params.p.ok_or(CatalogError::MissingParameter { entry: id.to_string(), name: "p" })?;
    prime_hypothesis(id, p).map_err(|h| CatalogError::Hypothesis {
        entry: id.to_string(),
        hypothesis: format!("{h} (got p = {p})"),
    })?;
    let alpha = if id == "sellers-parity" {
        if params.alpha.is_some() {
            return Err(CatalogError::UnexpectedParameter { entry: id.to_string(), name: "alpha" });
        }
        None
    } else {
        let a = params.alpha.unwrap_or(fam.alpha_min);
        if a < fam.alpha_min {
            return Err(CatalogError::AlphaBelowMinimum {
                entry: id.to_string(),
                alpha: a,
                minimum: fam.alpha_min,
            });
        }
        Some(a)
    };
    let function = if id == "sellers-parity" {
        PartitionFunction::DistinctRegular(p)
    } else {
        PartitionFunction::Regular(fam.ell)
    };
    let mut out = Vec::new();
    for j in indices(id, fam.index_name, params.index, fam.index_lo, p, fam.residue_condition)? {
        let (a, num) = (fam.build)(p as u128, alpha.unwrap_or(0), j as i128)
            .ok_or(CatalogError::Overflow { entry: id.to_string() })?;
        let raw = Raw {
            function,
            a,
            num,
            den: fam.den,
            modulus: fam.modulus,
        };
        let provenance = Provenance {
            catalog_id: id.to_string(),
            p: Some(p),
            alpha,
            index: Some(j),
            ..Default::default()
        };
        out.push(finish(id, raw, provenance)?);
    }
    Ok(out)
}

fn multiprime_claims(id: &str, params: &FamilyParams) -> Result<Vec<CongruenceClaim>> {
    let missing = CatalogError::MissingParameter { entry: id.to_string(), name: "primes" };
    let (&last, head) = params.primes.split_last().ok_or(missing)?;
    for &p in &params.primes {
        prime_hypothesis(id, p).map_err(|h| CatalogError::Hypothesis {
            entry: id.to_string(),
            hypothesis: format!("{h} (got {p})"),
        })?;
    }
    let (ell, den): (u64, i128) = if id.starts_with("b2") { (2, 24) } else { (4, 8) };
    let is_i = id.ends_with("-i");
    let overflow = || CatalogError::Overflow { entry: id.to_string() };
    let head_sq = head
        .iter()
        .try_fold(1u128, |acc, &p| acc.checked_mul((p as u128).checked_mul(p as u128)?))
        .ok_or_else(overflow)?;
    let head_sq_i = signed(head_sq).ok_or_else(overflow)?;
    let pr = last as u128;
    let (name, lo, condition) = if is_i { ("i", 1, None) } else { ("j", 0, Some((den as i64, 1))) };
    let mut out = Vec::new();
    for j in indices(id, name, params.index, lo, last, condition)? {
        let ji = j as i128;
        let (a, num) = if is_i {
            let a = head_sq.checked_mul(pr * pr).ok_or_else(overflow)?;
            let num = (den * ji + pr as i128)
                .checked_mul(head_sq_i)
                .and_then(|v| v.checked_mul(pr as i128))
                .ok_or_else(overflow)?
                - 1;
            (a, num)
        } else {
            let a = head_sq.checked_mul(pr).ok_or_else(overflow)?;
            let num = (den * ji + 1).checked_mul(head_sq_i).ok_or_else(overflow)? - 1;
            (a, num)
        };
        let raw = Raw {
            function: PartitionFunction::Regular(ell),
            a,
            num,
            den,
            modulus: 2,
        };
        let provenance = Provenance {
            catalog_id: id.to_string(),
            index: Some(j),
            primes: params.primes.clone(),
            ..Default::default()
        };
        out.push(finish(id, raw, provenance)?);
    }
    Ok(out)
}

/// Alpha values `lo..=hi` clipped to the entry's shipped minimum.
fn alpha_sweep(shipped: u64, hi: u64) -> impl Iterator<Item = u64> {
    shipped..=hi
}

/// The regression grid: primes up to 13, `alpha ≤ 2` (at most 1 for the
/// combined moduli), `l ≤ 4` for the mod 3 `b13` family, `k ≤ 3`, all
/// indices, and ordered pairs of distinct primes from {5, 7, 11, 13} for the
/// multi-prime entries. Sellers parity uses p in {5, 7, 11, 13}. Entries
/// requiring `(-10/p) = -1` use p = 17, the smallest such prime.
pub fn regression_grid() -> Vec<CongruenceClaim> {
    let mut out = Vec::new();
    let mut push = |params: FamilyParams| out.extend(family_claims(&params).expect("grid parameters are valid"));
    let primes_13 = [3u64, 5, 7, 11, 13];
    for id in IDS {
        match id {
            "b2-multiprime-i" | "b2-multiprime-j" | "b4-multiprime-i" | "b4-multiprime-j" => {
                for &p1 in &[5u64, 7, 11, 13] {
                    for &p2 in &[5u64, 7, 11, 13] {
                        if p1 != p2 {
                            push(FamilyParams::new(id).primes(&[p1, p2]));
                        }
                    }
                }
            }
            "b5-even-i" => {
                for a in alpha_sweep(1, 2) {
                    push(FamilyParams::new(id).p(17).alpha(a));
                }
            }
            "b5-even-HS" => push(FamilyParams::new(id).p(17)),
            "sellers-parity" => {
                for p in [5, 7, 11, 13] {
                    push(FamilyParams::new(id).p(p));
                }
            }
            "ramanujan-lift" => {
                for k in 1..=3 {
                    push(FamilyParams::new(id).k(k));
                }
            }
            "b13-mod3" => {
                for l in 2..=4 {
                    push(FamilyParams::new(id).alpha(l));
                }
            }
            "b5-even-calkin" => push(FamilyParams::new(id)),
            _ if members(id).is_some() => {
                let ms = members(id).expect("member entry");
                let hi = if id == "combined-4" { 1 } else { 2 };
                for (idx, m) in ms.iter().enumerate() {
                    let base = FamilyParams::new(id).member(idx as u32 + 1);
                    match m.alpha_min {
                        None => push(base),
                        Some(lo) => {
                            for a in alpha_sweep(lo, hi) {
                                push(base.clone().alpha(a));
                            }
                        }
                    }
                }
            }
            _ => {
                let fam = prime_family(id).expect("prime-indexed entry");
                for &p in &primes_13 {
                    if prime_hypothesis(id, p).is_err() {
                        continue;
                    }
                    for a in alpha_sweep(fam.alpha_min, 2) {
                        push(FamilyParams::new(id).p(p).alpha(a));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(params: FamilyParams) -> (u64, u64, u64) {
        let c = family_claims(&params).unwrap();
        assert_eq!(c.len(), 1, "{params:?}");
        (c[0].a, c[0].b, c[0].modulus)
    }

    #[test]
    fn pinned_progressions() {
        assert_eq!(one(FamilyParams::new("b2-even-i").p(5).alpha(1).index(1)), (25, 6, 2));
        assert_eq!(one(FamilyParams::new("b2-even-j").p(5).alpha(0).index(3)), (5, 3, 2));
        assert_eq!(one(FamilyParams::new("b2-multiprime-i").primes(&[7, 5]).index(1)), (1225, 296, 2));
        let j: Vec<(u64, u64)> = family_claims(&FamilyParams::new("b2-multiprime-j").primes(&[7, 5]))
            .unwrap()
            .iter()
            .map(|c| (c.a, c.b))
            .collect();
        assert_eq!(j, vec![(245, 149), (245, 198)]);
        assert_eq!(one(FamilyParams::new("b5-even-i").p(17).alpha(1).index(3)), (1156, 541, 2));
        assert_eq!(one(FamilyParams::new("b13-mod3").alpha(2)), (9, 7, 3));
        assert_eq!(one(FamilyParams::new("b8-even-i").p(5).alpha(1).index(1)), (25, 12, 2));
        assert_eq!(one(FamilyParams::new("b16-even-i").p(3).alpha(0).index(1)), (9, 8, 2));
        assert_eq!(one(FamilyParams::new("ped-3").member(1).alpha(0)), (3, 2, 2));
        assert_eq!(one(FamilyParams::new("combined-4").member(1).alpha(1)), (2500, 129, 10));
        assert_eq!(one(FamilyParams::new("combined-4").member(11)), (45, 39, 15));
        assert_eq!(one(FamilyParams::new("ramanujan-lift").member(5).k(2)), (49, 47, 49));
    }

    #[test]
    fn worked_examples_for_small_primes() {
        // b2 with p = 5: offsets (29, 53, 77, 101)·5^(2a+1), and 73, 97 for j.
        let b: Vec<u64> = family_claims(&FamilyParams::new("b2-even-i").p(5).alpha(2))
            .unwrap()
            .iter()
            .map(|c| c.b)
            .collect();
        let expect: Vec<u64> = [29u64, 53, 77, 101].iter().map(|c| (c * 125 - 1) / 24).collect();
        assert_eq!(b, expect);
        let j: Vec<u64> = family_claims(&FamilyParams::new("b2-even-j").p(5).alpha(1))
            .unwrap()
            .iter()
            .map(|c| c.b)
            .collect();
        assert_eq!(j, vec![(73 * 25 - 1) / 24, (97 * 25 - 1) / 24]);
        // b8 with p = 5: 59, 83, 107, 131.
        let b8: Vec<u64> = family_claims(&FamilyParams::new("b8-even-i").p(5).alpha(1))
            .unwrap()
            .iter()
            .map(|c| c.b)
            .collect();
        assert_eq!(b8, [59u64, 83, 107, 131].iter().map(|c| (c * 5 - 7) / 24).collect::<Vec<_>>());
        // b16 with p = 3, alpha = 1 in the shifted form: 23 and 31.
        let b16: Vec<u64> = family_claims(&FamilyParams::new("b16-even-i").p(3).alpha(0))
            .unwrap()
            .iter()
            .map(|c| c.b)
            .collect();
        assert_eq!(b16, vec![(23 * 3 - 5) / 8, (31 * 3 - 5) / 8]);
    }

    #[test]
    fn admissible_sets() {
        assert_eq!(admissible_j("b2-even-j", 5).unwrap(), vec![3, 4]);
        assert_eq!(admissible_j("b4-even-j", 3).unwrap(), vec![2]);
        assert_eq!(admissible_j("b2-even-j", 7).unwrap(), vec![3, 4, 6]);
        assert!(admissible_j("b2-even-i", 5).is_err());
        assert!(admissible_j("nope", 5).is_err());
    }

    #[test]
    fn hypothesis_violations() {
        let err = |p: FamilyParams| family_claims(&p).unwrap_err();
        assert!(matches!(err(FamilyParams::new("b2-even-i").p(5).alpha(0)), CatalogError::AlphaBelowMinimum { .. }));
        assert!(matches!(err(FamilyParams::new("b2-even-i").p(9)), CatalogError::Hypothesis { .. }));
        assert!(matches!(err(FamilyParams::new("b5-even-i").p(5)), CatalogError::Hypothesis { .. }));
        assert!(matches!(err(FamilyParams::new("b8-even-i").p(7)), CatalogError::Hypothesis { .. }));
        assert!(matches!(err(FamilyParams::new("b16-even-i").p(5)), CatalogError::Hypothesis { .. }));
        assert!(matches!(err(FamilyParams::new("b2-even-j").p(5).index(1)), CatalogError::NotAdmissible { .. }));
        assert!(matches!(err(FamilyParams::new("b2-even-i").p(5).index(5)), CatalogError::IndexOutOfRange { .. }));
        assert!(matches!(err(FamilyParams::new("b2-even-i")), CatalogError::MissingParameter { .. }));
        assert!(matches!(err(FamilyParams::new("ped-3").member(4)), CatalogError::NoSuchMember { .. }));
        assert!(matches!(err(FamilyParams::new("ped-3").p(3)), CatalogError::UnexpectedParameter { .. }));
        assert!(matches!(err(FamilyParams::new("zzz")), CatalogError::UnknownEntry(_)));
        assert!(matches!(err(FamilyParams::new("combined-4").member(1).alpha(0)), CatalogError::AlphaBelowMinimum { .. }));
    }

    #[test]
    fn erratum_probe_uses_stated_range() {
        let c = family_claims(&FamilyParams::new("combined-4").member(1).alpha(0).probe()).unwrap();
        assert_eq!((c[0].a, c[0].b, c[0].modulus), (100, 5, 10));
        assert!(c[0].provenance.erratum_probe);
        let c = family_claims(&FamilyParams::new("combined-4").member(3).alpha(0).probe()).unwrap();
        assert!(!c[0].provenance.erratum_probe);
        // Probing never reaches below the stated minimum.
        assert!(family_claims(&FamilyParams::new("b2-even-i").p(5).alpha(0).probe()).is_err());
    }

    #[test]
    fn alpha_free_members_once_per_sweep() {
        let at = |a| family_claims(&FamilyParams::new("fp-mod3").alpha(a)).unwrap().len();
        assert_eq!(at(0), 14);
        assert_eq!(at(1), 11);
        assert_eq!(family_claims(&FamilyParams::new("fp-mod3")).unwrap().len(), 14);
    }

    #[test]
    fn hs_alias_is_alpha_one() {
        let hs = family_claims(&FamilyParams::new("b5-even-HS").p(17)).unwrap();
        let i = family_claims(&FamilyParams::new("b5-even-i").p(17).alpha(1)).unwrap();
        assert_eq!(hs.len(), 16);
        for (x, y) in hs.iter().zip(&i) {
            assert_eq!((x.a, x.b), (y.a, y.b));
            assert_eq!(x.provenance.catalog_id, "b5-even-HS");
        }
    }

    #[test]
    fn every_entry_described() {
        let all = entries();
        assert_eq!(all.len(), ids().len());
        let combined = entry("combined-4").unwrap();
        assert_eq!(combined.alpha_min, Some(0));
        assert_eq!(combined.formulas.len(), 13);
    }

    #[test]
    fn grid_is_valid_and_ordered() {
        let grid = regression_grid();
        assert!(grid.len() > 300);
        assert!(grid.iter().all(|c| c.a >= 1 && c.modulus >= 2));
        assert!(grid.iter().all(|c| !c.provenance.erratum_probe));
    }

    #[test]
    fn overflow_is_an_error() {
        let e = family_claims(&FamilyParams::new("b2-even-i").p(13).alpha(40)).unwrap_err();
        assert!(matches!(e, CatalogError::Overflow { .. }));
    }
}
