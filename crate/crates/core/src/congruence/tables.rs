//! Dense residue tables for long congruence scans.
//!
//! A table holds one partition function modulo `m` up to some truncation. The
//! modulus is split into prime powers. The power 2 is stored bit-packed, other
//! powers up to 255 as bytes, and anything larger goes through [`Series`].
//! Every function handled here is `1/(q;q)_∞` times sparse Euler factors, so
//! building a table is one sparse division and a few sparse multiplications.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::theta::{pentagonal_terms, EtaFactor, EtaQuotientSpec};

/// Byte-kernel block length. Lags at least this long read only finished blocks.
const BLOCK: usize = 1024;

/// Splits `m` into its prime-power factors, ascending by prime.
pub fn prime_power_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            let mut q = 1;
            while m % d == 0 {
                m /= d;
                q *= d;
            }
            out.push(q);
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Lags of `(q^d;q^d)_∞`, split by the sign of their coefficient. The zero lag
/// is in `plus`.
struct Lags {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl Lags {
    fn euler(d: usize, limit: usize) -> Lags {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (e, c) in pentagonal_terms(limit / d) {
            if c > 0 {
                plus.push(e * d);
            } else {
                minus.push(e * d);
            }
        }
        Lags { plus, minus }
    }

    fn all_sorted(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.plus.iter().chain(&self.minus).copied().collect();
        v.sort_unstable();
        v
    }
}

/// Bit-packed coefficients mod 2.
#[derive(Debug, Clone)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    fn unit(len: usize) -> Bits {
        let mut words = vec![0u64; len.div_ceil(64)];
        words[0] = 1;
        Bits { words, len }
    }

    pub fn get(&self, n: usize) -> bool {
        (self.words[n / 64] >> (n % 64)) & 1 == 1
    }

    fn truncated(&self, len: usize) -> Bits {
        let mut words = self.words[..len.div_ceil(64)].to_vec();
        if len % 64 != 0 {
            *words.last_mut().expect("len > 0") &= (1u64 << (len % 64)) - 1;
        }
        Bits { words, len }
    }

    /// Bits `start .. start + 64`, with negative positions reading as zero.
    fn window(&self, start: i64) -> u64 {
        if start <= -64 {
            return 0;
        }
        if start < 0 {
            return self.words[0] << (-start);
        }
        let w = (start / 64) as usize;
        let o = (start % 64) as u32;
        let mut v = self.words[w] >> o;
        if o > 0 && w + 1 < self.words.len() {
            v |= self.words[w + 1] << (64 - o);
        }
        v
    }

    fn clear_tail(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            *self.words.last_mut().expect("len > 0") &= (1u64 << tail) - 1;
        }
    }

    /// In place `x ← x / (1 + Σ q^L)` over GF(2).
    fn divide(&mut self, lags: &[usize]) {
        let small_mask: u128 = lags
            .iter()
            .filter(|&&l| (1..64).contains(&l))
            .fold(0, |acc, &l| acc | 1u128 << (64 - l));
        let large: Vec<usize> = lags.iter().copied().filter(|&l| l >= 64).collect();
        for w in 0..self.words.len() {
            let base = 64 * w as i64;
            let mut acc = self.words[w];
            for &l in &large {
                if l as i64 > base + 63 {
                    break;
                }
                acc ^= self.window(base - l as i64);
            }
            if small_mask != 0 {
                let prev = if w > 0 { self.words[w - 1] } else { 0 };
                let mut v = (acc as u128) << 64 | prev as u128;
                for b in 0..64 {
                    if (v & (small_mask << b)).count_ones() & 1 == 1 {
                        v ^= 1u128 << (64 + b);
                    }
                }
                acc = (v >> 64) as u64;
            }
            self.words[w] = acc;
        }
        self.clear_tail();
    }

    /// `x · Σ q^L` over GF(2).
    fn multiply(&self, lags: &[usize]) -> Bits {
        let n = self.words.len();
        let mut out = vec![0u64; n];
        for &l in lags {
            let (ws, bs) = (l / 64, (l % 64) as u32);
            if ws >= n {
                break;
            }
            for i in ws..n {
                let j = i - ws;
                let mut v = self.words[j] << bs;
                if bs > 0 && j > 0 {
                    v |= self.words[j - 1] >> (64 - bs);
                }
                out[i] ^= v;
            }
        }
        let mut bits = Bits { words: out, len: self.len };
        bits.clear_tail();
        bits
    }
}

type AddKernel = fn(&mut [u16], &[u8]);

#[inline(always)]
fn add_widening(acc: &mut [u16], src: &[u8]) {
    for (a, &v) in acc.iter_mut().zip(src) {
        *a += v as u16;
    }
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "avx2")]
unsafe fn add_widening_avx2(acc: &mut [u16], src: &[u8]) {
    add_widening(acc, src)
}

/// The widest add kernel the running CPU supports.
fn add_kernel() -> AddKernel {
    #[cfg(target_arch = "x86_64")]
    {
        if std::is_x86_feature_detected!("avx2") {
            // SAFETY: the feature was just detected on this CPU.
            return |acc, src| unsafe { add_widening_avx2(acc, src) };
        }
    }
    add_widening
}

/// Adds `src[n - l]` into `acc[n - start]` for every `n` in `start..end` with
/// `n ≥ l`.
#[inline]
fn accumulate(kernel: AddKernel, acc: &mut [u16], src: &[u8], l: usize, start: usize, end: usize) {
    let lo = start.max(l);
    if lo >= end {
        return;
    }
    kernel(&mut acc[lo - start..end - start], &src[lo - l..end - l]);
}

/// Block accumulator for `Σ ±src[n - L]` modulo `m`. Negative terms read the
/// negated copy, so everything is an unsigned add. Partial sums live in `u16`
/// and are flushed to `u32` before they can overflow.
struct BlockSums {
    wide: Vec<u32>,
    narrow: Vec<u16>,
    flush_every: usize,
    kernel: AddKernel,
}

impl BlockSums {
    fn new(m: u32) -> Self {
        BlockSums {
            wide: vec![0; BLOCK],
            narrow: vec![0; BLOCK],
            flush_every: (u16::MAX as u32 / (m - 1).max(1)) as usize,
            kernel: add_kernel(),
        }
    }

    /// Sums every lag in `lags` (ascending, `(L, negated)`) that reaches into
    /// `start..end`.
    fn fill(&mut self, x: &[u8], nx: &[u8], lags: &[(usize, bool)], start: usize, end: usize) {
        self.wide.fill(0);
        self.narrow.fill(0);
        let mut pending = 0;
        for &(l, negated) in lags.iter().take_while(|&&(l, _)| l < end) {
            accumulate(self.kernel, &mut self.narrow, if negated { nx } else { x }, l, start, end);
            pending += 1;
            if pending == self.flush_every {
                self.flush();
                pending = 0;
            }
        }
        self.flush();
    }

    fn flush(&mut self) {
        for (w, n) in self.wide.iter_mut().zip(self.narrow.iter_mut()) {
            *w += *n as u32;
            *n = 0;
        }
    }
}

/// Signed lags merged in ascending order; `true` marks a negative coefficient.
fn signed_lags(lags: &Lags) -> Vec<(usize, bool)> {
    let mut v: Vec<(usize, bool)> =
        lags.plus.iter().map(|&l| (l, false)).chain(lags.minus.iter().map(|&l| (l, true))).collect();
    v.sort_unstable();
    v
}

fn negated(x: &[u8], m: u32) -> Vec<u8> {
    x.iter().map(|&v| ((m - v as u32) % m) as u8).collect()
}

/// In place `x ← x / (q^d;q^d)_∞` modulo `m ≤ 255`.
fn divide_bytes(x: &mut [u8], lags: &Lags, m: u32) {
    // x[n] = a[n] - Σ_{L>0} c_L x[n-L], so the sign of every lag flips.
    let terms: Vec<(usize, bool)> =
        signed_lags(lags).into_iter().filter(|&(l, _)| l > 0).map(|(l, neg)| (l, !neg)).collect();
    let (small, large): (Vec<(usize, bool)>, Vec<(usize, bool)>) = terms.iter().partition(|&&(l, _)| l < BLOCK);
    let n = x.len();
    let mut nx = vec![0u8; n];
    let mut sums = BlockSums::new(m);
    for start in (0..n).step_by(BLOCK) {
        let end = (start + BLOCK).min(n);
        sums.fill(x, &nx, &large, start, end);
        for k in start..end {
            let mut acc = sums.wide[k - start] + x[k] as u32;
            for &(l, neg) in small.iter().take_while(|&&(l, _)| l <= k) {
                acc += if neg { nx[k - l] } else { x[k - l] } as u32;
            }
            let v = acc % m;
            x[k] = v as u8;
            nx[k] = ((m - v) % m) as u8;
        }
    }
}

/// `x · (q^d;q^d)_∞` modulo `m ≤ 255`.
fn multiply_bytes(x: &[u8], lags: &Lags, m: u32) -> Vec<u8> {
    let terms = signed_lags(lags);
    let nx = negated(x, m);
    let n = x.len();
    let mut out = vec![0u8; n];
    let mut sums = BlockSums::new(m);
    for start in (0..n).step_by(BLOCK) {
        let end = (start + BLOCK).min(n);
        sums.fill(x, &nx, &terms, start, end);
        for k in start..end {
            out[k] = (sums.wide[k - start] % m) as u8;
        }
    }
    out
}

/// One prime-power component of a residue table.
#[derive(Debug, Clone)]
pub enum Dense {
    Bits(Bits),
    Bytes { modulus: u8, values: Vec<u8> },
    Wide { modulus: u64, values: Vec<u64> },
}

impl Dense {
    pub fn modulus(&self) -> u64 {
        match self {
            Dense::Bits(_) => 2,
            Dense::Bytes { modulus, .. } => *modulus as u64,
            Dense::Wide { modulus, .. } => *modulus,
        }
    }

    /// Number of stored coefficients.
    pub fn len(&self) -> usize {
        match self {
            Dense::Bits(b) => b.len,
            Dense::Bytes { values, .. } => values.len(),
            Dense::Wide { values, .. } => values.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn residue(&self, n: usize) -> u64 {
        match self {
            Dense::Bits(b) => b.get(n) as u64,
            Dense::Bytes { values, .. } => values[n] as u64,
            Dense::Wide { values, .. } => values[n],
        }
    }

    fn truncated(&self, len: usize) -> Dense {
        match self {
            Dense::Bits(b) => Dense::Bits(b.truncated(len)),
            Dense::Bytes { modulus, values } => Dense::Bytes {
                modulus: *modulus,
                values: values[..len].to_vec(),
            },
            Dense::Wide { modulus, values } => Dense::Wide {
                modulus: *modulus,
                values: values[..len].to_vec(),
            },
        }
    }

    /// `1/(q;q)_∞` modulo the prime power `q`, with `len` coefficients.
    fn partitions(q: u64, len: usize) -> Dense {
        let limit = len - 1;
        let lags = Lags::euler(1, limit);
        if q == 2 {
            let mut bits = Bits::unit(len);
            let all: Vec<usize> = lags.all_sorted().into_iter().filter(|&l| l > 0).collect();
            bits.divide(&all);
            Dense::Bits(bits)
        } else if q <= 255 {
            let mut values = vec![0u8; len];
            values[0] = 1;
            divide_bytes(&mut values, &lags, q as u32);
            Dense::Bytes { modulus: q as u8, values }
        } else {
            let series = crate::partitions::partition_numbers(limit, q).expect("modulus >= 2");
            Dense::Wide {
                modulus: q,
                values: series.coeffs().iter().map(|c| u64::try_from(c).expect("residue")).collect(),
            }
        }
    }

    fn apply(&mut self, factor: &EtaFactor) {
        let limit = self.len() - 1;
        let lags = Lags::euler(factor.scale as usize, limit);
        for _ in 0..factor.exponent.unsigned_abs() {
            match self {
                Dense::Bits(bits) => {
                    let all = lags.all_sorted();
                    if factor.exponent > 0 {
                        *bits = bits.multiply(&all);
                    } else {
                        bits.divide(&all[1..]);
                    }
                }
                Dense::Bytes { modulus, values } => {
                    let m = *modulus as u32;
                    if factor.exponent > 0 {
                        *values = multiply_bytes(values, &lags, m);
                    } else {
                        divide_bytes(values, &lags, m);
                    }
                }
                Dense::Wide { modulus, values } => {
                    let s = crate::series::Series::new(values.iter().copied(), *modulus).expect("valid");
                    let e = crate::theta::euler_at(factor.scale as usize, limit, *modulus).expect("valid");
                    let r = if factor.exponent > 0 { s.mul(&e) } else { s.div(&e) }.expect("same ring");
                    *values = r.coeffs().iter().map(|c| u64::try_from(c).expect("residue")).collect();
                }
            }
        }
    }
}

/// Residues of one partition function modulo a composite `m`.
#[derive(Debug, Clone)]
pub struct ResidueTable {
    modulus: u64,
    components: Vec<Arc<Dense>>,
}

impl ResidueTable {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Largest index with a known residue.
    pub fn truncation(&self) -> usize {
        self.components.iter().map(|c| c.len()).min().expect("nonempty") - 1
    }

    pub fn is_zero(&self, n: usize) -> bool {
        self.components.iter().all(|c| c.residue(n) == 0)
    }

    /// The residue in `[0, m)`, recombined from the prime-power components.
    pub fn residue(&self, n: usize) -> u64 {
        let mut value: u128 = 0;
        let mut modulus: u128 = 1;
        for c in &self.components {
            let q = c.modulus() as u128;
            let r = c.residue(n) as u128;
            // value + modulus·t ≡ r (mod q)
            let inv = mod_inverse((modulus % q) as u64, q as u64) as u128;
            let t = ((r + q - value % q) % q) * inv % q;
            value += modulus * t;
            modulus *= q;
        }
        value as u64
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "{a} is not invertible mod {m}");
    t0.rem_euclid(m as i128) as u64
}

type Slot = Arc<(usize, OnceLock<Arc<Dense>>)>;

/// Shared tables keyed by prime power and eta quotient. A slot is built once
/// by whichever caller reaches it first; others block on it.
#[derive(Default)]
pub struct TableCache {
    slots: Mutex<HashMap<(u64, EtaQuotientSpec), Vec<Slot>>>,
}

impl TableCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table of `spec` modulo `modulus` with at least `truncation + 1` terms.
    pub fn table(&self, spec: &EtaQuotientSpec, modulus: u64, truncation: usize) -> ResidueTable {
        assert!(modulus >= 2, "modulus must be at least 2");
        let components = prime_power_factors(modulus)
            .into_iter()
            .map(|q| self.component(spec, q, truncation + 1))
            .collect();
        ResidueTable { modulus, components }
    }

    fn slot(&self, key: (u64, EtaQuotientSpec), len: usize) -> Slot {
        let mut slots = self.slots.lock().expect("cache lock");
        let list = slots.entry(key).or_default();
        if let Some(s) = list.iter().filter(|s| s.0 >= len).min_by_key(|s| s.0) {
            return s.clone();
        }
        let s: Slot = Arc::new((len, OnceLock::new()));
        list.push(s.clone());
        s
    }

    fn component(&self, spec: &EtaQuotientSpec, q: u64, len: usize) -> Arc<Dense> {
        let slot = self.slot((q, spec.clone()), len);
        let table = slot.1.get_or_init(|| Arc::new(self.build(spec, q, slot.0))).clone();
        if table.len() == len {
            table
        } else {
            Arc::new(table.truncated(len))
        }
    }

    fn build(&self, spec: &EtaQuotientSpec, q: u64, len: usize) -> Dense {
        let partitions = EtaQuotientSpec::partitions();
        let mut rest: Vec<EtaFactor> = spec.factors().to_vec();
        let mut dense = match rest.iter().position(|f| f.scale == 1 && f.exponent < 0) {
            Some(i) if *spec != partitions => {
                rest[i].exponent += 1;
                let base = self.component(&partitions, q, len);
                Arc::unwrap_or_clone(base)
            }
            Some(i) => {
                rest[i].exponent += 1;
                Dense::partitions(q, len)
            }
            None => match q {
                2 => Dense::Bits(Bits::unit(len)),
                3..=255 => {
                    let mut values = vec![0u8; len];
                    values[0] = 1;
                    Dense::Bytes { modulus: q as u8, values }
                }
                _ => {
                    let mut values = vec![0u64; len];
                    values[0] = 1;
                    Dense::Wide { modulus: q, values }
                }
            },
        };
        for f in rest.iter().filter(|f| f.exponent != 0) {
            dense.apply(f);
        }
        dense
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::PartitionFunction;

    fn check(f: PartitionFunction, m: u64, n: usize) {
        let cache = TableCache::new();
        let table = cache.table(&f.eta_quotient(), m, n);
        let series = f.series(n, m).unwrap();
        for k in 0..=n {
            let expected = u64::try_from(&series.coeff(k)).unwrap();
            assert_eq!(table.residue(k), expected, "{f} mod {m} at {k}");
            assert_eq!(table.is_zero(k), expected == 0);
        }
    }

    #[test]
    fn factors() {
        assert_eq!(prime_power_factors(147), vec![3, 49]);
        assert_eq!(prime_power_factors(2), vec![2]);
        assert_eq!(prime_power_factors(1000), vec![8, 125]);
        assert_eq!(prime_power_factors(514), vec![2, 257]);
    }

    #[test]
    fn tables_match_series() {
        let fns = [
            PartitionFunction::Unrestricted,
            PartitionFunction::Regular(2),
            PartitionFunction::Regular(5),
            PartitionFunction::Regular(49),
            PartitionFunction::DistinctRegular(7),
        ];
        for f in fns {
            for m in [2, 3, 10, 49, 147, 8, 514] {
                check(f, m, 3000);
            }
        }
    }

    #[test]
    fn cache_reuses_longer_tables() {
        let cache = TableCache::new();
        let spec = PartitionFunction::Regular(5).eta_quotient();
        let long = cache.table(&spec, 10, 5000);
        let short = cache.table(&spec, 10, 100);
        assert_eq!(short.truncation(), 100);
        for k in 0..=100 {
            assert_eq!(long.residue(k), short.residue(k));
        }
    }

    #[test]
    fn general_eta_quotient() {
        let spec: EtaQuotientSpec = "2^1,3^2,4^-1".parse().unwrap();
        let cache = TableCache::new();
        let t = cache.table(&spec, 6, 800);
        let s = spec.expand(800, 6).unwrap();
        for k in 0..=800 {
            assert_eq!(t.residue(k), u64::try_from(&s.coeff(k)).unwrap());
        }
    }
}
