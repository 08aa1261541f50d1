use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for which factorial-based counts are computed.
pub const MAX_N: usize = 30;

fn validate(parts: &[usize]) -> Result<()> {
    if parts.contains(&0) {
        return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
    }
    Ok(())
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// Integer partition indexing an irreducible character of `Sym(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        validate(&parts)?;
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Self {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (0..first).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Self { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.n());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push((row - j - 1) + (conj.parts[j] - i - 1) + 1);
            }
        }
        out
    }

    /// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                rec(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// Cycle type of a permutation, indexing a conjugacy class of `Sym(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        validate(&parts)?;
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(-1)^(n - number of cycles)`.
    pub fn sign(&self) -> i64 {
        if (self.n() - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Order of an element of this type.
    pub fn element_order(&self) -> usize {
        self.parts.iter().copied().fold(1, crate::groupcore::lcm)
    }

    pub fn all(n: usize) -> Vec<Self> {
        Partition::all(n).into_iter().map(|p| Self { parts: p.parts }).collect()
    }
}

impl TryFrom<Vec<usize>> for CycleType {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<CycleType> for Vec<usize> {
    fn from(c: CycleType) -> Self {
        c.parts
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `n! / Π hooks`.
pub fn degree(sigma: &Partition) -> u128 {
    assert!(sigma.n() <= MAX_N, "partition too large");
    factorial(sigma.n()) / sigma.hook_lengths().iter().map(|&h| h as u128).product::<u128>()
}

/// `n! / Π_k k^{m_k}·m_k!`, the size of the `Sym(n)`-class of cycle type `mu`.
pub fn class_size(mu: &CycleType) -> u128 {
    assert!(mu.n() <= MAX_N, "cycle type too large");
    let mut centralizer: u128 = 1;
    let mut i = 0;
    let parts = mu.parts();
    while i < parts.len() {
        let k = parts[i];
        let m = parts[i..].iter().take_while(|&&p| p == k).count();
        centralizer *= (k as u128).pow(m as u32) * factorial(m);
        i += m;
    }
    factorial(mu.n()) / centralizer
}

pub fn is_self_conjugate(sigma: &Partition) -> bool {
    sigma.is_self_conjugate()
}

/// Whether the `Sym(n)`-class splits into two `Alt(n)`-classes: all parts odd
/// and pairwise distinct.
pub fn alt_class_splits(mu: &CycleType) -> bool {
    let p = mu.parts();
    p.iter().all(|&x| x % 2 == 1) && p.windows(2).all(|w| w[0] != w[1])
}

/// Size of an `Alt(n)`-class of the given even cycle type.
pub fn alt_class_size(mu: &CycleType) -> u128 {
    let full = class_size(mu);
    if alt_class_splits(mu) {
        full / 2
    } else {
        full
    }
}
