//! Theta-type series and the classical product identities they satisfy.
//!
//! Every generator here is built from its exponent formula (pentagonal,
//! triangular, or the general `f(a, b)` quadratic exponent), which costs
//! `O(√N)` terms. Infinite products are only multiplied out on the oracle side
//! of an identity check.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    #[error("invalid theta parameters: {0}")]
    InvalidTheta(String),
    #[error("invalid eta quotient: {0}")]
    InvalidEta(String),
    #[error("cannot parse eta quotient {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type Result<T> = std::result::Result<T, ThetaError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `sign^e`.
    pub fn pow(self, e: u64) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus if e % 2 == 0 => 1,
            Sign::Minus => -1,
        }
    }
}

/// A theta-type generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ThetaSpec {
    /// Ramanujan's `f(a, b)` with `a = a_sign·q^r` and `b = b_sign·q^s`.
    General { a_sign: Sign, r: u64, b_sign: Sign, s: u64 },
    /// `ψ(q) = Σ q^{n(n+1)/2}`.
    Psi,
    /// `f(-q) = f(-q, -q^2)`.
    FNeg,
    /// `(q;q)_∞`.
    Euler,
    /// `(q;q)_∞^3`.
    JacobiCube,
}

impl ThetaSpec {
    pub fn general(a_sign: Sign, r: u64, b_sign: Sign, s: u64) -> Result<ThetaSpec> {
        if r + s == 0 {
            return Err(ThetaError::InvalidTheta("f(a, b) needs r + s > 0".into()));
        }
        Ok(ThetaSpec::General { a_sign, r, b_sign, s })
    }

    /// Nonzero terms `(exponent, coefficient)` up to `limit`, ascending.
    pub fn terms(&self, limit: usize) -> Vec<(usize, i64)> {
        match *self {
            ThetaSpec::General { a_sign, r, b_sign, s } => general_terms(a_sign, r, b_sign, s, limit),
            ThetaSpec::Psi => triangular_terms(limit),
            ThetaSpec::FNeg | ThetaSpec::Euler => pentagonal_terms(limit),
            ThetaSpec::JacobiCube => jacobi_cube_terms(limit),
        }
    }

    pub fn expand(&self, truncation: usize, modulus: u64) -> Result<Series> {
        if let ThetaSpec::General { r: 0, s: 0, .. } = self {
            return Err(ThetaError::InvalidTheta("f(a, b) needs r + s > 0".into()));
        }
        Ok(Series::from_terms(&self.terms(truncation), truncation, modulus)?)
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn arg(sign: Sign, e: u64) -> String {
            let s = if sign == Sign::Minus { "-" } else { "" };
            match e {
                0 => format!("{s}1"),
                1 => format!("{s}q"),
                _ => format!("{s}q^{e}"),
            }
        }
        match *self {
            ThetaSpec::General { a_sign, r, b_sign, s } => write!(f, "f({}, {})", arg(a_sign, r), arg(b_sign, s)),
            ThetaSpec::Psi => write!(f, "psi(q)"),
            ThetaSpec::FNeg => write!(f, "f(-q)"),
            ThetaSpec::Euler => write!(f, "(q;q)_inf"),
            ThetaSpec::JacobiCube => write!(f, "(q;q)_inf^3"),
        }
    }
}

/// Generalized pentagonal terms of `(q;q)_∞`: `(-1)^k q^{k(3k∓1)/2}`.
pub fn pentagonal_terms(limit: usize) -> Vec<(usize, i64)> {
    let mut out = vec![(0, 1)];
    for k in 1usize.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let lo = k * (3 * k - 1) / 2;
        if lo > limit {
            break;
        }
        out.push((lo, sign));
        let hi = k * (3 * k + 1) / 2;
        if hi <= limit {
            out.push((hi, sign));
        }
    }
    out
}

/// Triangular terms of `ψ(q)`.
pub fn triangular_terms(limit: usize) -> Vec<(usize, i64)> {
    (0usize..).map(|n| n * (n + 1) / 2).take_while(|&e| e <= limit).map(|e| (e, 1)).collect()
}

/// Terms of `Σ (-1)^n (2n+1) q^{n(n+1)/2}`.
pub fn jacobi_cube_terms(limit: usize) -> Vec<(usize, i64)> {
    (0usize..)
        .map(|n| (n * (n + 1) / 2, if n % 2 == 0 { 1 } else { -1 } * (2 * n as i64 + 1)))
        .take_while(|&(e, _)| e <= limit)
        .collect()
}

/// Terms of `f(a_sign·q^r, b_sign·q^s) = Σ_n a^{n(n+1)/2} b^{n(n-1)/2}` over all
/// integers `n`. Both tails have eventually increasing exponents when
/// `r + s > 0`, so each stops at the first exponent past `limit` once it is
/// past the vertex at `n = 0, ±1`.
pub fn general_terms(a_sign: Sign, r: u64, b_sign: Sign, s: u64, limit: usize) -> Vec<(usize, i64)> {
    assert!(r + s > 0, "f(a, b) needs r + s > 0");
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    let limit = limit as u64;
    let mut push = |n: i64| -> bool {
        let up = (n * (n + 1) / 2) as u64;
        let down = (n * (n - 1) / 2) as u64;
        let e = r * up + s * down;
        if e > limit {
            return false;
        }
        *acc.entry(e as usize).or_insert(0) += a_sign.pow(up) * b_sign.pow(down);
        true
    };
    // Exponents at n = 0 and n = ±1 are 0, r and s; beyond those both tails
    // strictly increase.
    let mut n = 0;
    while push(n) || n < 1 {
        n += 1;
    }
    let mut n = -1;
    while push(n) {
        n -= 1;
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// Scales every exponent by `d`, dropping terms past `limit`.
pub fn scale_terms(terms: &[(usize, i64)], d: usize, limit: usize) -> Vec<(usize, i64)> {
    terms.iter().map(|&(e, c)| (e * d, c)).filter(|&(e, _)| e <= limit).collect()
}

pub fn euler_series(truncation: usize, modulus: u64) -> Result<Series> {
    ThetaSpec::Euler.expand(truncation, modulus)
}

pub fn psi_series(truncation: usize, modulus: u64) -> Result<Series> {
    ThetaSpec::Psi.expand(truncation, modulus)
}

pub fn jacobi_cube_series(truncation: usize, modulus: u64) -> Result<Series> {
    ThetaSpec::JacobiCube.expand(truncation, modulus)
}

/// `f(a_sign·q^r, b_sign·q^s)` expanded to `truncation`.
pub fn theta_f(spec: ThetaSpec, truncation: usize, modulus: u64) -> Result<Series> {
    match spec {
        ThetaSpec::General { .. } => spec.expand(truncation, modulus),
        other => Err(ThetaError::InvalidTheta(format!("{other} is not a general f(a, b)"))),
    }
}

/// `(q^d;q^d)_∞` to the given truncation.
pub fn euler_at(d: usize, truncation: usize, modulus: u64) -> Result<Series> {
    let terms = scale_terms(&pentagonal_terms(truncation / d.max(1)), d, truncation);
    Ok(Series::from_terms(&terms, truncation, modulus)?)
}

/// `(q^offset; q^step)_∞ = ∏_{k≥0} (1 - q^{offset + k·step})`, multiplied out
/// factor by factor.
pub fn pochhammer(offset: usize, step: usize, truncation: usize, modulus: u64) -> Result<Series> {
    if step == 0 {
        return Err(ThetaError::InvalidTheta("Pochhammer step must be positive".into()));
    }
    let mut acc = Series::one(truncation, modulus)?;
    let mut e = offset;
    while e <= truncation {
        acc = acc.mul_binomial(-1, e);
        e += step;
    }
    Ok(acc)
}

/// One factor `(q^scale; q^scale)_∞^exponent` of an eta quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EtaFactor {
    pub scale: u64,
    pub exponent: i64,
}

/// `∏ (q^d;q^d)_∞^e`, kept sorted by scale.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EtaQuotientSpec {
    factors: Vec<EtaFactor>,
}

impl EtaQuotientSpec {
    /// Scales must be distinct and positive; exponents nonzero.
    pub fn new(factors: impl IntoIterator<Item = (u64, i64)>) -> Result<Self> {
        let mut factors: Vec<EtaFactor> =
            factors.into_iter().map(|(scale, exponent)| EtaFactor { scale, exponent }).collect();
        if factors.is_empty() {
            return Err(ThetaError::InvalidEta("no factors".into()));
        }
        factors.sort();
        for f in &factors {
            if f.scale == 0 {
                return Err(ThetaError::InvalidEta("scale must be positive".into()));
            }
            if f.exponent == 0 {
                return Err(ThetaError::InvalidEta(format!("zero exponent on scale {}", f.scale)));
            }
        }
        if factors.windows(2).any(|w| w[0].scale == w[1].scale) {
            return Err(ThetaError::InvalidEta("repeated scale".into()));
        }
        Ok(EtaQuotientSpec { factors })
    }

    pub fn factors(&self) -> &[EtaFactor] {
        &self.factors
    }

    /// `1/(q;q)_∞`.
    pub fn partitions() -> Self {
        Self::new([(1, -1)]).expect("valid")
    }

    /// `(q^ℓ;q^ℓ)_∞/(q;q)_∞`.
    pub fn regular(ell: u64) -> Result<Self> {
        Self::new([(1, -1), (ell, 1)])
    }

    /// `(-q;q)_∞/(-q^p;q^p)_∞ = (q^2;q^2)(q^p;q^p) / ((q;q)(q^{2p};q^{2p}))`.
    pub fn distinct_regular(p: u64) -> Result<Self> {
        Self::new([(1, -1), (2, 1), (p, 1), (2 * p, -1)])
    }

    /// Expands the product, dividing by the sparse Euler factors for negative
    /// exponents.
    pub fn expand(&self, truncation: usize, modulus: u64) -> Result<Series> {
        let mut acc = Series::one(truncation, modulus)?;
        for f in &self.factors {
            let base = euler_at(f.scale as usize, truncation, modulus)?;
            for _ in 0..f.exponent.unsigned_abs() {
                acc = if f.exponent > 0 { acc.mul(&base)? } else { acc.div(&base)? };
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| format!("{}^{}", x.scale, x.exponent)).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses comma-separated `d^e` factors, e.g. `5^1,1^-1` for `b_5`.
impl FromStr for EtaQuotientSpec {
    type Err = ThetaError;

    fn from_str(input: &str) -> Result<Self> {
        let bad = |reason: &str| ThetaError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut factors = Vec::new();
        for item in input.split(',') {
            let item = item.trim();
            let (d, e) = item.split_once('^').ok_or_else(|| bad("each factor must look like d^e"))?;
            let d: u64 = d.trim().parse().map_err(|_| bad("scale is not a positive integer"))?;
            let e: i64 = e.trim().parse().map_err(|_| bad("exponent is not an integer"))?;
            factors.push((d, e));
        }
        EtaQuotientSpec::new(factors).map_err(|e| bad(&e.to_string()))
    }
}

/// First disagreement between the two sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub index: usize,
    pub left: String,
    pub right: String,
}

/// Result of checking an identity as truncated series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub identity: String,
    pub truncation: usize,
    pub mismatch: Option<Mismatch>,
}

impl MatchReport {
    pub fn compare(identity: impl Into<String>, left: &Series, right: &Series) -> Result<MatchReport> {
        let cmp = left.compare(right)?;
        Ok(MatchReport {
            identity: identity.into(),
            truncation: cmp.truncation,
            mismatch: cmp.first_mismatch.map(|i| Mismatch {
                index: i,
                left: left.coeff(i).to_string(),
                right: right.coeff(i).to_string(),
            }),
        })
    }

    pub fn is_match(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Pentagonal-number series against the brute product `∏ (1 - q^k)`.
pub fn verify_euler_product(truncation: usize) -> Result<MatchReport> {
    let series = euler_series(truncation, 0)?;
    let product = pochhammer(1, 1, truncation, 0)?;
    MatchReport::compare("euler-product", &series, &product)
}

/// Jacobi's triple product at the monomial specialization `z = sign·q^t`:
/// `Σ z^n q^{n²} = (-zq, -q/z, q²; q²)_∞`.
///
/// For `t ≥ 2` both sides have negative powers of `q`. Each factor
/// `1 + σq^{-g}` of the product is rewritten as `σq^{-g}(1 + σq^g)`, and both
/// sides are multiplied by the collected `q^D` so the comparison happens
/// between ordinary power series.
pub fn verify_jtp(t: u64, sign: Sign, truncation: usize) -> Result<MatchReport> {
    if t == 0 {
        return Err(ThetaError::InvalidTheta("jtp needs t ≥ 1".into()));
    }
    let sigma = sign.value();
    let t = t as i64;
    let n_max = truncation as i64;

    // (-q/z; q²)_∞ factors are 1 + σ q^{1 - t + 2k}.
    let mut shift: i64 = 0;
    let mut prefactor: i64 = 1;
    let mut right = Series::one(truncation, 0)?;
    let mut k = 0i64;
    loop {
        let g = 1 - t + 2 * k;
        if g > n_max {
            break;
        }
        match g.cmp(&0) {
            std::cmp::Ordering::Less => {
                shift += -g;
                prefactor *= sigma;
                right = right.mul_binomial(sigma, (-g) as usize);
            }
            std::cmp::Ordering::Equal => {
                right = right.scale(1 + sigma);
            }
            std::cmp::Ordering::Greater => {
                right = right.mul_binomial(sigma, g as usize);
            }
        }
        k += 1;
    }
    // (-zq; q²)_∞ factors are 1 + σ q^{t + 1 + 2k}.
    let mut e = t + 1;
    while e <= n_max {
        right = right.mul_binomial(sigma, e as usize);
        e += 2;
    }
    right = right.mul(&pochhammer(2, 2, truncation, 0)?)?.scale(prefactor);

    let mut terms = Vec::new();
    let bound = t + (n_max as f64).sqrt() as i64 + 2;
    for n in -bound..=bound {
        let e = n * n + t * n + shift;
        assert!(e >= 0, "triple product shift too small");
        if e <= n_max {
            let c = if n.rem_euclid(2) == 1 { sigma } else { 1 };
            terms.push((e as usize, c));
        }
    }
    let left = Series::from_terms(&terms, truncation, 0)?;
    let sign_str = if sigma > 0 { "+" } else { "-" };
    MatchReport::compare(format!("jtp:{t}:{sign_str}"), &left, &right)
}

/// `Σ (-1)^n (2n+1) q^{n(n+1)/2} = (q;q)_∞^3`.
pub fn verify_jacobi_cube(truncation: usize) -> Result<MatchReport> {
    let sum = jacobi_cube_series(truncation, 0)?;
    let cube = euler_series(truncation, 0)?.pow(3);
    MatchReport::compare("jacobi-cube", &sum, &cube)
}

fn neg_f(r: u64, s: u64, truncation: usize) -> Result<Series> {
    ThetaSpec::general(Sign::Minus, r, Sign::Minus, s)?.expand(truncation, 0)
}

/// Quintuple product at `x = q^u`, `λ = q^v`:
/// `f(-x², -λx) f(-λx³) / f(-x, -λx²) = f(-λ²x³, -λx⁶) + x f(-λ, -λ²x⁹)`.
pub fn verify_quintuple(u: u64, v: u64, truncation: usize) -> Result<MatchReport> {
    if u == 0 || v == 0 {
        return Err(ThetaError::InvalidTheta("quintuple needs u, v ≥ 1".into()));
    }
    let n = truncation;
    let numerator = neg_f(2 * u, v + u, n)?.mul(&euler_at((v + 3 * u) as usize, n, 0)?)?;
    let left = numerator.div(&neg_f(u, v + 2 * u, n)?)?;
    let right = neg_f(2 * v + 3 * u, v + 6 * u, n)?.add(&neg_f(v, 2 * v + 9 * u, n)?.shift(u as usize))?;
    MatchReport::compare(format!("quintuple:{u}:{v}"), &left, &right)
}

/// The quotients in Ramanujan's 5-dissection of `(q;q)_∞`.
#[derive(Debug, Clone)]
pub struct QuinticDissection {
    /// `a(q) = (q^10, q^15; q^25)_∞ / (q^5, q^20; q^25)_∞`.
    pub a: Series,
    /// `b(q) = 1/a(q)`.
    pub b: Series,
    /// `(q;q)_∞ = (q^25;q^25)_∞ (a(q) - q - q² b(q))`.
    pub identity: MatchReport,
    /// Each residue class of `(q;q)_∞` mod 5 against its term on the right.
    pub classes: Vec<MatchReport>,
}

pub fn ramanujan5_check(truncation: usize) -> Result<QuinticDissection> {
    let n = truncation;
    let top = pochhammer(10, 25, n, 0)?.mul(&pochhammer(15, 25, n, 0)?)?;
    let bottom = pochhammer(5, 25, n, 0)?.mul(&pochhammer(20, 25, n, 0)?)?;
    let a = top.div(&bottom)?;
    let b = a.invert()?;
    let e25 = euler_at(25, n, 0)?;
    let euler = euler_series(n, 0)?;

    let class0 = e25.mul(&a)?;
    let class1 = e25.shift(1).neg();
    let class2 = e25.mul(&b)?.shift(2).neg();
    let rhs = class0.add(&class1)?.add(&class2)?;
    let identity = MatchReport::compare("ramanujan5", &euler, &rhs)?;

    let mut classes = Vec::new();
    if n >= 4 {
        let lhs_parts = euler.dissect(5)?;
        for (r, term) in [&class0, &class1, &class2].into_iter().enumerate() {
            let part = term.dissect(5)?;
            classes.push(MatchReport::compare(format!("ramanujan5:class{r}"), lhs_parts.part(r), part.part(r))?);
        }
        for r in 3..5 {
            let zero = Series::zero(lhs_parts.part(r).truncation(), 0)?;
            classes.push(MatchReport::compare(format!("ramanujan5:class{r}"), lhs_parts.part(r), &zero)?);
        }
    }
    Ok(QuinticDissection { a, b, identity, classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: multiply out ∏_{k≥1} (1 - q^k) with machine integers.
    fn brute_euler(n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n + 1];
        c[0] = 1;
        for k in 1..=n {
            for i in (k..=n).rev() {
                c[i] -= c[i - k];
            }
        }
        c
    }

    #[test]
    fn euler_small() {
        let e = euler_series(12, 0).unwrap();
        assert_eq!(e.to_i64s().unwrap(), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        assert!(e.is_zero_at(3));
    }

    #[test]
    fn euler_matches_brute_product() {
        assert_eq!(euler_series(200, 0).unwrap().to_i64s().unwrap(), brute_euler(200));
        assert!(verify_euler_product(200).unwrap().is_match());
    }

    #[test]
    fn psi_support_is_triangular() {
        assert_eq!(psi_series(10, 0).unwrap().support(), vec![0, 1, 3, 6, 10]);
    }

    #[test]
    fn psi_equals_product_quotient() {
        // ψ(q) = (q²;q²)_∞ / (q;q²)_∞
        let n = 200;
        let quotient = pochhammer(2, 2, n, 0).unwrap().div(&pochhammer(1, 2, n, 0).unwrap()).unwrap();
        assert_eq!(psi_series(n, 0).unwrap(), quotient);
    }

    #[test]
    fn psi_is_jacobi_cube_mod_2() {
        assert_eq!(psi_series(500, 2).unwrap(), jacobi_cube_series(500, 2).unwrap());
        assert_eq!(psi_series(500, 2).unwrap(), euler_series(500, 2).unwrap().pow(3));
    }

    #[test]
    fn general_theta_specializations() {
        let f_neg = ThetaSpec::general(Sign::Minus, 1, Sign::Minus, 2).unwrap();
        assert_eq!(theta_f(f_neg, 500, 0).unwrap(), euler_series(500, 0).unwrap());
        let psi = ThetaSpec::general(Sign::Plus, 1, Sign::Plus, 3).unwrap();
        assert_eq!(theta_f(psi, 500, 0).unwrap(), psi_series(500, 0).unwrap());
        assert!(ThetaSpec::general(Sign::Plus, 0, Sign::Plus, 0).is_err());
        let flipped = ThetaSpec::general(Sign::Plus, 0, Sign::Plus, 1).unwrap().expand(100, 0).unwrap();
        let straight = ThetaSpec::general(Sign::Plus, 1, Sign::Plus, 0).unwrap().expand(100, 0).unwrap();
        assert_eq!(flipped, straight);
        assert!(theta_f(ThetaSpec::Psi, 10, 0).is_err());
    }

    #[test]
    fn psi_three_dissection_replay() {
        // ψ(q) = f(q^6, q^3) + q ψ(q^9)
        let n = 300;
        let f63 = ThetaSpec::general(Sign::Plus, 6, Sign::Plus, 3).unwrap().expand(n, 0).unwrap();
        let psi9 = psi_series(n, 0).unwrap().substitute_power(9).unwrap().shift(1);
        assert_eq!(f63.add(&psi9).unwrap(), psi_series(n, 0).unwrap());
    }

    #[test]
    fn substituted_psi_support() {
        let s = psi_series(40, 0).unwrap().substitute_power(4).unwrap();
        assert_eq!(s.support(), vec![0, 4, 12, 24, 40]);
    }

    #[test]
    fn eta_quotients() {
        let p = EtaQuotientSpec::partitions().expand(5, 0).unwrap();
        assert_eq!(p.to_i64s().unwrap(), vec![1, 1, 2, 3, 5, 7]);
        let b5: EtaQuotientSpec = "5^1,1^-1".parse().unwrap();
        assert_eq!(b5.expand(5, 0).unwrap().to_i64s().unwrap(), vec![1, 1, 2, 3, 5, 6]);
        let e: EtaQuotientSpec = "1^1".parse().unwrap();
        assert_eq!(e.expand(50, 0).unwrap(), euler_series(50, 0).unwrap());
    }

    #[test]
    fn eta_parse_errors() {
        assert!("5".parse::<EtaQuotientSpec>().is_err());
        assert!("5^x".parse::<EtaQuotientSpec>().is_err());
        assert!("5^1,5^2".parse::<EtaQuotientSpec>().is_err());
        assert!("0^1".parse::<EtaQuotientSpec>().is_err());
        assert!("3^0".parse::<EtaQuotientSpec>().is_err());
        assert_eq!("5^1, 1^-1".parse::<EtaQuotientSpec>().unwrap().to_string(), "1^-1,5^1");
    }

    #[test]
    fn triple_product_specializations() {
        for t in 1..=4 {
            for sign in [Sign::Plus, Sign::Minus] {
                let r = verify_jtp(t, sign, 300).unwrap();
                assert!(r.is_match(), "{r:?}");
            }
        }
    }

    #[test]
    fn jacobi_cube_identity() {
        assert!(verify_jacobi_cube(500).unwrap().is_match());
        assert_eq!(jacobi_cube_series(1, 0).unwrap().coeff(1), (-3).into());
    }

    #[test]
    fn quintuple_specializations() {
        for (u, v) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let r = verify_quintuple(u, v, 300).unwrap();
            assert!(r.is_match(), "{r:?}");
        }
    }

    #[test]
    fn ramanujan_quintic() {
        let q = ramanujan5_check(500).unwrap();
        assert!(q.identity.is_match());
        assert!(q.classes.iter().all(MatchReport::is_match));
        assert_eq!(q.classes.len(), 5);
        assert!(q.a.mul(&q.b).unwrap() == Series::one(500, 0).unwrap());
    }

    #[test]
    fn display_general() {
        let f = ThetaSpec::general(Sign::Minus, 6, Sign::Minus, 3).unwrap();
        assert_eq!(f.to_string(), "f(-q^6, -q^3)");
    }
}
