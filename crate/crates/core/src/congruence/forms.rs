//! Brute-force checks on the quadratic forms behind the prime families.
//!
//! `P(m) = (3m² + m)/2` is a pentagonal exponent and `T(k) = (k² + k)/2` a
//! triangular one. Every check is an exhaustive scan over residues mod `p`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{is_prime, legendre};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("hypothesis violated for p = {p}: {hypothesis}")]
    Hypothesis { p: u64, hypothesis: &'static str },
    #[error("unknown form {0:?}; expected b5, b8 or b16")]
    UnknownForm(String),
}

pub type Result<T> = std::result::Result<T, FormError>;

/// Which family's form to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    /// `2P(k) + 5P(m)`, for primes with `(-10/p) = -1`.
    B5,
    /// `T(k) + 4P(m)`, for primes `p ≡ -1 (mod 6)`.
    B8,
    /// `T(k) + 4T(m)`, for primes `p ≡ -1 (mod 4)`.
    B16,
}

impl Form {
    pub fn hypothesis(self, p: u64) -> Result<()> {
        let (ok, hypothesis) = match self {
            Form::B5 => (p >= 5 && is_prime(p) && legendre(-10, p) == Ok(-1), "p prime >= 5 with (-10/p) = -1"),
            Form::B8 => (is_prime(p) && p % 6 == 5, "p prime with p = -1 (mod 6)"),
            Form::B16 => (is_prime(p) && p % 4 == 3, "p prime with p = -1 (mod 4)"),
        };
        if ok {
            Ok(())
        } else {
            Err(FormError::Hypothesis { p, hypothesis })
        }
    }

    /// The form's value at `(k, m)`, reduced mod `p`.
    pub fn eval(self, k: i64, m: i64, p: u64) -> u64 {
        let t = |x: i64| x as i128 * (x as i128 + 1) / 2;
        let pent = |x: i64| x as i128 * (3 * x as i128 + 1) / 2;
        let v = match self {
            Form::B5 => 2 * pent(k) + 5 * pent(m),
            Form::B8 => t(k) + 4 * pent(m),
            Form::B16 => t(k) + 4 * t(m),
        };
        v.rem_euclid(p as i128) as u64
    }

    /// Residue that only the special pair may attain.
    pub fn target(self, p: u64) -> u64 {
        let p2 = p as u128 * p as u128 - 1;
        let v = match self {
            Form::B5 | Form::B8 => 7 * p2 / 24,
            Form::B16 => 5 * p2 / 8,
        };
        (v % p as u128) as u64
    }

    /// Ranges for `k` and `m` in the uniqueness scan.
    fn ranges(self, p: u64) -> ((i64, i64), (i64, i64)) {
        let h = (p as i64 - 1) / 2;
        match self {
            Form::B5 => ((-h, h), (-h, h)),
            Form::B8 => ((0, h), (-h, h)),
            Form::B16 => ((0, p as i64 - 1), (0, p as i64 - 1)),
        }
    }

    /// The pair the proof singles out.
    fn special(self, p: u64) -> (i64, i64) {
        let p = p as i64;
        let h = (p - 1) / 2;
        // The representative of -1/6 mod p in [-h, h].
        let sixth = || {
            let r = (1..p).find(|x| (6 * x + 1) % p == 0).expect("p is coprime to 6");
            if r > h {
                r - p
            } else {
                r
            }
        };
        match self {
            Form::B5 => (sixth(), sixth()),
            Form::B8 => (h, sixth()),
            Form::B16 => (h, h),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::B5 => "b5",
            Form::B8 => "b8",
            Form::B16 => "b16",
        })
    }
}

impl FromStr for Form {
    type Err = FormError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b5" => Ok(Form::B5),
            "b8" => Ok(Form::B8),
            "b16" => Ok(Form::B16),
            _ => Err(FormError::UnknownForm(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub form: Form,
    pub p: u64,
    pub uncovered: Vec<u64>,
}

impl Coverage {
    pub fn passed(&self) -> bool {
        self.uncovered.is_empty()
    }
}

/// Residues mod `p` the form misses over `k, m ∈ [0, p-1]`.
pub fn coverage(form: Form, p: u64) -> Result<Coverage> {
    form.hypothesis(p)?;
    let mut hit = vec![false; p as usize];
    for k in 0..p as i64 {
        for m in 0..p as i64 {
            hit[form.eval(k, m, p) as usize] = true;
        }
    }
    let uncovered = (0..p).filter(|&j| !hit[j as usize]).collect();
    Ok(Coverage { form, p, uncovered })
}

/// `2P(k) + 5P(m)` covers every residue mod `p`.
pub fn kmj_cover_check(p: u64) -> Result<Coverage> {
    coverage(Form::B5, p)
}

/// The `b8` or `b16` form covers every residue mod `p`.
pub fn representable_check(form: Form, p: u64) -> Result<Coverage> {
    coverage(form, p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Uniqueness {
    pub form: Form,
    pub p: u64,
    pub target: u64,
    pub expected: (i64, i64),
    pub solutions: Vec<(i64, i64)>,
}

impl Uniqueness {
    pub fn passed(&self) -> bool {
        self.solutions == [self.expected]
    }
}

/// Every `(k, m)` in the proof's ranges hitting the target residue.
pub fn uniqueness_check(form: Form, p: u64) -> Result<Uniqueness> {
    form.hypothesis(p)?;
    let target = form.target(p);
    let ((k0, k1), (m0, m1)) = form.ranges(p);
    let solutions = (k0..=k1)
        .flat_map(|k| (m0..=m1).map(move |m| (k, m)))
        .filter(|&(k, m)| form.eval(k, m, p) == target)
        .collect();
    Ok(Uniqueness {
        form,
        p,
        target,
        expected: form.special(p),
        solutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_cases() {
        for p in [17, 29, 31] {
            assert!(kmj_cover_check(p).unwrap().passed(), "p = {p}");
        }
        assert!(representable_check(Form::B8, 5).unwrap().passed());
        assert!(representable_check(Form::B16, 3).unwrap().passed());
        assert!(representable_check(Form::B16, 7).unwrap().passed());
        let u = uniqueness_check(Form::B8, 5).unwrap();
        assert_eq!((u.target, u.solutions.clone()), (2, vec![(2, -1)]));
        assert_eq!(uniqueness_check(Form::B16, 3).unwrap().solutions, vec![(1, 1)]);
        assert!(uniqueness_check(Form::B5, 17).unwrap().passed());
    }

    #[test]
    fn hypotheses_enforced() {
        assert!(kmj_cover_check(5).is_err());
        assert!(representable_check(Form::B8, 7).is_err());
        assert!(representable_check(Form::B16, 5).is_err());
        assert!("b7".parse::<Form>().is_err());
    }
}
