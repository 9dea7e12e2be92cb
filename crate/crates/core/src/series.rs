//! Truncated formal power series over the integers or over `Z/m`.
//!
//! A [`Series`] stores the coefficients of `q^0 ..= q^N` where `N` is its
//! truncation. Exact series (modulus 0) carry arbitrary-precision integers so
//! that partition counts never wrap; modular series keep canonical residues in
//! `[0, m)`.
//!
//! Binary operations return a series truncated at the smaller of the two input
//! truncations. Nothing is ever extrapolated past known data.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("modulus 1 gives the zero ring")]
    DegenerateModulus,
    #[error("incompatible moduli {0} and {1}")]
    IncompatibleModuli(u64, u64),
    #[error("constant term {0} is not invertible")]
    NonUnitConstant(String),
    #[error("cannot reduce modulo {target}: it does not divide the current modulus {current}")]
    ModulusNotDivisor { current: u64, target: u64 },
    #[error("cannot split a series truncated at q^{truncation} into {classes} residue classes")]
    DissectTooFine { classes: usize, truncation: usize },
    #[error("substitution power and dissection step must be positive")]
    ZeroStep,
}

pub type Result<T> = std::result::Result<T, SeriesError>;

#[derive(Clone, Debug)]
enum Repr {
    Exact(Vec<BigInt>),
    Residues { modulus: u64, values: Vec<u64> },
}

/// A power series in `q`, known up to and including `q^truncation`.
#[derive(Clone, Debug)]
pub struct Series {
    repr: Repr,
}

/// Outcome of comparing two series coefficientwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    /// Largest exponent that was compared.
    pub truncation: usize,
    /// First exponent where the coefficients differ, if any.
    pub first_mismatch: Option<usize>,
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn check_modulus(modulus: u64) -> Result<()> {
    if modulus == 1 {
        Err(SeriesError::DegenerateModulus)
    } else {
        Ok(())
    }
}

fn residue_of(value: &BigInt, modulus: u64) -> u64 {
    value
        .mod_floor(&BigInt::from(modulus))
        .to_u64()
        .expect("residue fits the modulus")
}

fn residue_of_i64(value: i64, modulus: u64) -> u64 {
    (value as i128).rem_euclid(modulus as i128) as u64
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

impl Series {
    /// Builds a series from its coefficients. `modulus` 0 means exact integer
    /// arithmetic; otherwise every coefficient is reduced into `[0, modulus)`.
    pub fn new<I, T>(coeffs: I, modulus: u64) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        check_modulus(modulus)?;
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Self::from_exact(coeffs).reduce_unchecked(modulus))
    }

    /// Builds a series from small integer coefficients.
    pub fn from_i64s(coeffs: &[i64], modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        let repr = if modulus == 0 {
            Repr::Exact(coeffs.iter().map(|&c| BigInt::from(c)).collect())
        } else {
            Repr::Residues {
                modulus,
                values: coeffs.iter().map(|&c| residue_of_i64(c, modulus)).collect(),
            }
        };
        Ok(Series { repr })
    }

    /// Builds a series with the given nonzero terms `(exponent, coefficient)`;
    /// terms beyond the truncation are dropped and repeated exponents add up.
    pub fn from_terms(terms: &[(usize, i64)], truncation: usize, modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        let mut dense = vec![0i64; truncation + 1];
        for &(e, c) in terms {
            if e <= truncation {
                dense[e] += c;
            }
        }
        Self::from_i64s(&dense, modulus)
    }

    fn from_exact(coeffs: Vec<BigInt>) -> Self {
        Series {
            repr: Repr::Exact(coeffs),
        }
    }

    fn from_residues(modulus: u64, values: Vec<u64>) -> Self {
        Series {
            repr: Repr::Residues { modulus, values },
        }
    }

    pub fn zero(truncation: usize, modulus: u64) -> Result<Self> {
        Self::from_terms(&[], truncation, modulus)
    }

    pub fn one(truncation: usize, modulus: u64) -> Result<Self> {
        Self::from_terms(&[(0, 1)], truncation, modulus)
    }

    /// `coeff * q^exponent`, truncated.
    pub fn monomial(coeff: i64, exponent: usize, truncation: usize, modulus: u64) -> Result<Self> {
        Self::from_terms(&[(exponent, coeff)], truncation, modulus)
    }

    /// 0 for exact series, otherwise the modulus `m ≥ 2`.
    pub fn modulus(&self) -> u64 {
        match &self.repr {
            Repr::Exact(_) => 0,
            Repr::Residues { modulus, .. } => *modulus,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.modulus() == 0
    }

    /// Largest stored exponent.
    pub fn truncation(&self) -> usize {
        self.len() - 1
    }

    /// Number of stored coefficients, always `truncation + 1`.
    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Exact(c) => c.len(),
            Repr::Residues { values, .. } => values.len(),
        }
    }

    /// Never true; a series always stores its constant term.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coefficient of `q^n`, or zero past the truncation.
    pub fn coeff(&self, n: usize) -> BigInt {
        match &self.repr {
            Repr::Exact(c) => c.get(n).cloned().unwrap_or_default(),
            Repr::Residues { values, .. } => values.get(n).map(|&v| BigInt::from(v)).unwrap_or_default(),
        }
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        (0..self.len()).map(|n| self.coeff(n)).collect()
    }

    /// Coefficients as `i64`, or `None` if any of them does not fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        match &self.repr {
            Repr::Exact(c) => c.iter().map(|v| v.to_i64()).collect(),
            Repr::Residues { values, .. } => values.iter().map(|&v| i64::try_from(v).ok()).collect(),
        }
    }

    pub fn is_zero_at(&self, n: usize) -> bool {
        match &self.repr {
            Repr::Exact(c) => c.get(n).map_or(true, Zero::is_zero),
            Repr::Residues { values, .. } => values.get(n).map_or(true, |&v| v == 0),
        }
    }

    pub fn is_zero(&self) -> bool {
        (0..self.len()).all(|n| self.is_zero_at(n))
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&n| !self.is_zero_at(n)).collect()
    }

    /// Drops every coefficient above `q^truncation`.
    pub fn truncate(&self, truncation: usize) -> Series {
        let keep = truncation.min(self.truncation()) + 1;
        match &self.repr {
            Repr::Exact(c) => Series::from_exact(c[..keep].to_vec()),
            Repr::Residues { modulus, values } => Series::from_residues(*modulus, values[..keep].to_vec()),
        }
    }

    fn reduce_unchecked(self, modulus: u64) -> Series {
        if modulus == 0 {
            return self;
        }
        match self.repr {
            Repr::Exact(c) => Series::from_residues(modulus, c.iter().map(|v| residue_of(v, modulus)).collect()),
            Repr::Residues { values, .. } => {
                Series::from_residues(modulus, values.into_iter().map(|v| v % modulus).collect())
            }
        }
    }

    /// Reduces the coefficients modulo `m`. An exact series can be reduced by
    /// any `m ≥ 2`; a modular one only by a divisor of its modulus.
    pub fn reduce_mod(&self, m: u64) -> Result<Series> {
        if m < 2 {
            return Err(SeriesError::DegenerateModulus);
        }
        let current = self.modulus();
        if current != 0 && current % m != 0 {
            return Err(SeriesError::ModulusNotDivisor { current, target: m });
        }
        Ok(self.clone().reduce_unchecked(m))
    }

    /// Brings both operands into a common ring, reducing an exact operand when
    /// the other one is modular.
    fn unify(a: &Series, b: &Series) -> Result<(Series, Series)> {
        let (ma, mb) = (a.modulus(), b.modulus());
        let n = a.truncation().min(b.truncation());
        match (ma, mb) {
            (x, y) if x == y => Ok((a.truncate(n), b.truncate(n))),
            (0, y) => Ok((a.truncate(n).reduce_unchecked(y), b.truncate(n))),
            (x, 0) => Ok((a.truncate(n), b.truncate(n).reduce_unchecked(x))),
            (x, y) => Err(SeriesError::IncompatibleModuli(x, y)),
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        let (a, b) = Self::unify(self, other)?;
        Ok(match (a.repr, b.repr) {
            (Repr::Exact(x), Repr::Exact(y)) => Series::from_exact(x.into_iter().zip(y).map(|(p, q)| p + q).collect()),
            (Repr::Residues { modulus, values: x }, Repr::Residues { values: y, .. }) => Series::from_residues(
                modulus,
                x.iter().zip(&y).map(|(&p, &q)| ((p as u128 + q as u128) % modulus as u128) as u64).collect(),
            ),
            _ => unreachable!("unify returns matching representations"),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        match &self.repr {
            Repr::Exact(c) => Series::from_exact(c.iter().map(|v| -v).collect()),
            Repr::Residues { modulus, values } => Series::from_residues(
                *modulus,
                values.iter().map(|&v| if v == 0 { 0 } else { modulus - v }).collect(),
            ),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: i64) -> Series {
        match &self.repr {
            Repr::Exact(v) => Series::from_exact(v.iter().map(|x| x * c).collect()),
            Repr::Residues { modulus, values } => {
                let c = residue_of_i64(c, *modulus) as u128;
                let m = *modulus as u128;
                Series::from_residues(*modulus, values.iter().map(|&x| (x as u128 * c % m) as u64).collect())
            }
        }
    }

    /// Multiplies by `q^k`, keeping the truncation.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.len();
        match &self.repr {
            Repr::Exact(c) => {
                let mut out = vec![BigInt::zero(); n];
                for i in k..n {
                    out[i] = c[i - k].clone();
                }
                Series::from_exact(out)
            }
            Repr::Residues { modulus, values } => {
                let mut out = vec![0; n];
                for i in k..n {
                    out[i] = values[i - k];
                }
                Series::from_residues(*modulus, out)
            }
        }
    }

    /// Cauchy product. The loop runs over the nonzero terms of the sparser
    /// factor, so theta-type factors cost `O(N·√N)` rather than `O(N²)`.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        let (a, b) = Self::unify(self, other)?;
        let (sparse, dense) = if a.support().len() <= b.support().len() { (a, b) } else { (b, a) };
        let n = dense.len();
        Ok(match (sparse.repr, dense.repr) {
            (Repr::Exact(s), Repr::Exact(d)) => {
                let mut out = vec![BigInt::zero(); n];
                for (i, si) in s.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    if si.is_one() {
                        for j in 0..n - i {
                            out[i + j] += &d[j];
                        }
                    } else if (-si).is_one() {
                        for j in 0..n - i {
                            out[i + j] -= &d[j];
                        }
                    } else {
                        for j in 0..n - i {
                            out[i + j] += si * &d[j];
                        }
                    }
                }
                Series::from_exact(out)
            }
            (Repr::Residues { modulus, values: s }, Repr::Residues { values: d, .. }) => {
                let m = modulus as u128;
                let mut out = vec![0u128; n];
                for (i, &si) in s.iter().enumerate().filter(|(_, &v)| v != 0) {
                    let si = si as u128;
                    for j in 0..n - i {
                        out[i + j] = (out[i + j] + si * d[j] as u128) % m;
                    }
                }
                Series::from_residues(modulus, out.into_iter().map(|v| v as u64).collect())
            }
            _ => unreachable!("unify returns matching representations"),
        })
    }

    /// Multiplies by the binomial `1 + c·q^e` in one pass.
    pub fn mul_binomial(&self, c: i64, e: usize) -> Series {
        let n = self.len();
        match &self.repr {
            Repr::Exact(v) => {
                let mut out = v.clone();
                for i in (e..n).rev() {
                    if !v[i - e].is_zero() {
                        out[i] += &v[i - e] * c;
                    }
                }
                Series::from_exact(out)
            }
            Repr::Residues { modulus, values } => {
                let m = *modulus as u128;
                let c = residue_of_i64(c, *modulus) as u128;
                let mut out = values.clone();
                for i in (e..n).rev() {
                    out[i] = ((out[i] as u128 + c * values[i - e] as u128) % m) as u64;
                }
                Series::from_residues(*modulus, out)
            }
        }
    }

    /// Nonnegative integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Series {
        let mut acc = Series::one(self.truncation(), self.modulus()).expect("modulus already validated");
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Multiplicative inverse up to the truncation. The constant term must be a
    /// unit: ±1 for exact series, coprime to the modulus otherwise.
    pub fn invert(&self) -> Result<Series> {
        let one = Series::one(self.truncation(), self.modulus())?;
        one.div(self)
    }

    /// `self / divisor` up to the shorter truncation, solved term by term over
    /// the nonzero coefficients of the divisor.
    pub fn div(&self, divisor: &Series) -> Result<Series> {
        let (num, den) = Self::unify(self, divisor)?;
        let n = num.len();
        let den_terms: Vec<usize> = den.support().into_iter().filter(|&i| i > 0).collect();
        Ok(match (num.repr, den.repr) {
            (Repr::Exact(a), Repr::Exact(b)) => {
                let c0 = &b[0];
                let negate = if c0.is_one() {
                    false
                } else if (-c0).is_one() {
                    true
                } else {
                    return Err(SeriesError::NonUnitConstant(c0.to_string()));
                };
                let mut x: Vec<BigInt> = Vec::with_capacity(n);
                for k in 0..n {
                    let mut acc = a[k].clone();
                    for &i in den_terms.iter().take_while(|&&i| i <= k) {
                        let bi = &b[i];
                        if bi.is_one() {
                            acc -= &x[k - i];
                        } else if (-bi).is_one() {
                            acc += &x[k - i];
                        } else {
                            acc -= bi * &x[k - i];
                        }
                    }
                    x.push(if negate { -acc } else { acc });
                }
                Series::from_exact(x)
            }
            (Repr::Residues { modulus, values: a }, Repr::Residues { values: b, .. }) => {
                let inv = mod_inverse(b[0], modulus).ok_or_else(|| SeriesError::NonUnitConstant(b[0].to_string()))?;
                let m = modulus as u128;
                let mut x: Vec<u64> = Vec::with_capacity(n);
                for k in 0..n {
                    // Accumulate the subtracted part, then fold it in once.
                    let mut sub = 0u128;
                    for &i in den_terms.iter().take_while(|&&i| i <= k) {
                        sub = (sub + b[i] as u128 * x[k - i] as u128) % m;
                    }
                    let v = (a[k] as u128 + m - sub) % m;
                    x.push((v * inv as u128 % m) as u64);
                }
                Series::from_residues(modulus, x)
            }
            _ => unreachable!("unify returns matching representations"),
        })
    }

    /// Replaces `q` by `q^k`, keeping the truncation.
    pub fn substitute_power(&self, k: usize) -> Result<Series> {
        if k == 0 {
            return Err(SeriesError::ZeroStep);
        }
        let n = self.len();
        Ok(match &self.repr {
            Repr::Exact(c) => {
                let mut out = vec![BigInt::zero(); n];
                for (i, v) in c.iter().enumerate().take_while(|(i, _)| i * k < n) {
                    out[i * k] = v.clone();
                }
                Series::from_exact(out)
            }
            Repr::Residues { modulus, values } => {
                let mut out = vec![0; n];
                for (i, &v) in values.iter().enumerate().take_while(|(i, _)| i * k < n) {
                    out[i * k] = v;
                }
                Series::from_residues(*modulus, out)
            }
        })
    }

    /// Splits the series by exponent residue mod `p`: part `r` holds
    /// `Σ c_{pn+r} q^n`. Every class must contain at least one known exponent,
    /// so `p` may not exceed `truncation + 1`.
    pub fn dissect(&self, p: usize) -> Result<ResidueComponents> {
        if p == 0 {
            return Err(SeriesError::ZeroStep);
        }
        if p > self.len() {
            return Err(SeriesError::DissectTooFine {
                classes: p,
                truncation: self.truncation(),
            });
        }
        let parts = (0..p)
            .map(|r| match &self.repr {
                Repr::Exact(c) => Series::from_exact(c.iter().skip(r).step_by(p).cloned().collect()),
                Repr::Residues { modulus, values } => {
                    Series::from_residues(*modulus, values.iter().skip(r).step_by(p).copied().collect())
                }
            })
            .collect();
        Ok(ResidueComponents {
            step: p,
            source_truncation: self.truncation(),
            parts,
        })
    }

    /// Coefficientwise comparison up to the shorter truncation. Series over
    /// different rings are incomparable.
    pub fn compare(&self, other: &Series) -> Result<Comparison> {
        if self.modulus() != other.modulus() {
            return Err(SeriesError::IncompatibleModuli(self.modulus(), other.modulus()));
        }
        let truncation = self.truncation().min(other.truncation());
        let first_mismatch = match (&self.repr, &other.repr) {
            (Repr::Exact(a), Repr::Exact(b)) => (0..=truncation).find(|&i| a[i] != b[i]),
            (Repr::Residues { values: a, .. }, Repr::Residues { values: b, .. }) => {
                (0..=truncation).find(|&i| a[i] != b[i])
            }
            _ => unreachable!("equal moduli imply equal representations"),
        };
        Ok(Comparison {
            truncation,
            first_mismatch,
        })
    }
}

/// Equal modulus and equal coefficients up to the shorter truncation.
impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).map(|c| c.is_match()).unwrap_or(false)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for n in self.support() {
            let c = self.coeff(n);
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.len())?;
        if self.modulus() != 0 {
            write!(f, " (mod {})", self.modulus())?;
        }
        Ok(())
    }
}

/// The `p` residue-class parts of a series.
#[derive(Clone, Debug)]
pub struct ResidueComponents {
    step: usize,
    source_truncation: usize,
    parts: Vec<Series>,
}

impl ResidueComponents {
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn parts(&self) -> &[Series] {
        &self.parts
    }

    pub fn part(&self, r: usize) -> &Series {
        &self.parts[r]
    }

    /// Interleaves the parts back into a single series.
    pub fn reassemble(&self) -> Series {
        let modulus = self.parts[0].modulus();
        let n = self.source_truncation;
        let mut terms = vec![BigInt::zero(); n + 1];
        for (r, part) in self.parts.iter().enumerate() {
            for i in 0..part.len() {
                terms[i * self.step + r] = part.coeff(i);
            }
        }
        Series::from_exact(terms).reduce_unchecked(modulus)
    }
}
