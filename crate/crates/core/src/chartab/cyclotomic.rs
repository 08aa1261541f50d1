//! Exact arithmetic in the ring of cyclotomic integers `Z[ω_e]`.
//!
//! An element is stored in the power basis `1, ω, …, ω^{φ(e)-1}`, i.e. as an
//! integer polynomial reduced modulo the `e`-th cyclotomic polynomial. Since
//! that polynomial is monic, the reduced form is unique and integral, so an
//! element is zero exactly when every stored coefficient is zero.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arithmetic context for a fixed conductor `e`.
#[derive(Debug)]
pub struct CyclotomicRing {
    order: usize,
    /// Coefficients of Φ_e, lowest degree first; the last entry is the leading 1.
    poly: Vec<i64>,
    /// Nonzero non-leading coefficients of Φ_e as `(degree, coefficient)`.
    tail: Vec<(usize, i64)>,
}

impl CyclotomicRing {
    /// Shared ring for conductor `order`.
    pub fn get(order: usize) -> Arc<Self> {
        assert!(order >= 1, "conductor must be positive");
        static RINGS: OnceLock<Mutex<HashMap<usize, Arc<CyclotomicRing>>>> = OnceLock::new();
        let rings = RINGS.get_or_init(Default::default);
        let mut rings = rings.lock().unwrap_or_else(|e| e.into_inner());
        rings
            .entry(order)
            .or_insert_with(|| {
                let poly = cyclotomic_polynomial(order);
                let tail =
                    poly[..poly.len() - 1].iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
                Arc::new(Self { order, poly, tail })
            })
            .clone()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Rank of `Z[ω_e]` over `Z`, i.e. φ(e).
    pub fn rank(&self) -> usize {
        self.poly.len() - 1
    }

    /// Coefficients of the `e`-th cyclotomic polynomial, lowest degree first.
    pub fn polynomial(&self) -> &[i64] {
        &self.poly
    }

    /// Reduces a vector indexed by exponents `0..e` into canonical coefficients.
    fn reduce(&self, mut acc: Vec<i64>) -> Vec<i64> {
        let rank = self.rank();
        for i in (rank..acc.len()).rev() {
            let c = acc[i];
            if c == 0 {
                continue;
            }
            acc[i] = 0;
            let shift = i - rank;
            for &(j, pj) in &self.tail {
                acc[shift + j] -= c * pj;
            }
        }
        acc.truncate(rank);
        acc
    }
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    fn build(n: usize, memo: &mut HashMap<usize, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        // x^n - 1 divided by Φ_d for every proper divisor d
        let mut num = vec![0i64; n + 1];
        num[0] = -1;
        num[n] = 1;
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            let divisor = build(d, memo);
            num = divide_monic(&num, &divisor);
        }
        memo.insert(n, num.clone());
        num
    }
    build(n, &mut HashMap::new())
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An element of `Z[ω_e]` in canonical form.
#[derive(Clone)]
pub struct CyclotomicInteger {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    pub fn zero(order: usize) -> Self {
        let ring = CyclotomicRing::get(order);
        let coeffs = vec![0; ring.rank()];
        Self { ring, coeffs }
    }

    pub fn from_integer(order: usize, value: i64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = value;
        z
    }

    pub fn one(order: usize) -> Self {
        Self::from_integer(order, 1)
    }

    /// `ω_e^k`.
    pub fn root_power(order: usize, k: i64) -> Self {
        Self::from_exponent_sum(order, &[(k, 1)])
    }

    /// `Σ c·ω_e^k` over the given `(k, c)` terms.
    pub fn from_exponent_sum(order: usize, terms: &[(i64, i64)]) -> Self {
        let ring = CyclotomicRing::get(order);
        let mut acc = vec![0i64; order];
        for &(k, c) in terms {
            acc[k.rem_euclid(order as i64) as usize] += c;
        }
        let coeffs = ring.reduce(acc);
        Self { ring, coeffs }
    }

    /// Rebuilds an element from its canonical coefficients.
    pub fn from_canonical(order: usize, coeffs: Vec<i64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::OutOfBounds { what: "conductor", value: 0, lo: 1, hi: usize::MAX });
        }
        let ring = CyclotomicRing::get(order);
        if coeffs.len() != ring.rank() {
            return Err(Error::OutOfBounds {
                what: "coefficient count",
                value: coeffs.len(),
                lo: ring.rank(),
                hi: ring.rank(),
            });
        }
        Ok(Self { ring, coeffs })
    }

    /// Conductor `e`.
    pub fn order(&self) -> usize {
        self.ring.order
    }

    /// Canonical coefficients over `1, ω, …, ω^{φ(e)-1}`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as an integer, if it is rational.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    /// Complex conjugate, `ω ↦ ω⁻¹`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Image under the automorphism `ω ↦ ω^m` (`m` coprime to the conductor).
    pub fn galois(&self, m: i64) -> Self {
        let e = self.order() as i64;
        let mut acc = vec![0i64; self.order()];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                acc[(k as i64 * m).rem_euclid(e) as usize] += c;
            }
        }
        Self { coeffs: self.ring.reduce(acc), ring: self.ring.clone() }
    }

    fn same_ring(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "cyclotomic conductors differ");
    }

    /// Adds `factor·self·other` into an exponent-indexed accumulator of length `e`.
    pub(crate) fn accumulate_product(&self, other: &Self, factor: i64, acc: &mut [i64]) {
        let e = self.order();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    let k = i + j;
                    acc[if k >= e { k - e } else { k }] += factor * a * b;
                }
            }
        }
    }

    /// Canonical element from an exponent-indexed accumulator.
    pub(crate) fn from_accumulator(order: usize, acc: Vec<i64>) -> Self {
        let ring = CyclotomicRing::get(order);
        Self { coeffs: ring.reduce(acc), ring }
    }
}

impl PartialEq for CyclotomicInteger {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicInteger {}

impl PartialOrd for CyclotomicInteger {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(conductor, canonical coefficients)`.
impl Ord for CyclotomicInteger {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), &self.coeffs).cmp(&(other.order(), &other.coeffs))
    }
}

impl std::hash::Hash for CyclotomicInteger {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl Add for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn add(self, rhs: Self) -> CyclotomicInteger {
        self.same_ring(rhs);
        CyclotomicInteger {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn sub(self, rhs: Self) -> CyclotomicInteger {
        self.same_ring(rhs);
        CyclotomicInteger {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn neg(self) -> CyclotomicInteger {
        CyclotomicInteger { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn mul(self, rhs: Self) -> CyclotomicInteger {
        self.same_ring(rhs);
        let mut acc = vec![0i64; self.order()];
        self.accumulate_product(rhs, 1, &mut acc);
        CyclotomicInteger { coeffs: self.ring.reduce(acc), ring: self.ring.clone() }
    }
}

impl Mul<i64> for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn mul(self, rhs: i64) -> CyclotomicInteger {
        CyclotomicInteger { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|a| a * rhs).collect() }
    }
}

impl fmt::Display for CyclotomicInteger {
    /// Integers print plainly; otherwise terms read `c*z{e}^k` with `z{e}` a
    /// primitive `e`-th root of unity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let e = self.order();
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            f.write_str(sign)?;
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (_, 1) => write!(f, "z{e}^{k}")?,
                (_, m) => write!(f, "{m}*z{e}^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct Encoded {
    order: usize,
    coeffs: Vec<i64>,
}

impl Serialize for CyclotomicInteger {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Encoded { order: self.order(), coeffs: self.coeffs.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclotomicInteger {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let enc = Encoded::deserialize(deserializer)?;
        Self::from_canonical(enc.order, enc.coeffs).map_err(serde::de::Error::custom)
    }
}
