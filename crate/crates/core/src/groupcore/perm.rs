use std::fmt;

use crate::error::{Error, Result};
use crate::groupcore::MAX_DEGREE;

/// A permutation of the points `1..=degree`.
///
/// Images are stored zero-based as bytes, which caps the degree at
/// [`MAX_DEGREE`]. Products read left to right: `a.compose(&b)` applies `a`
/// first and then `b`, so conjugation `x^g` is `g⁻¹·x·g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(Self { images: (0..degree).map(|i| i as u8).collect() })
    }

    /// Builds a permutation from one-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        check_degree(degree)?;
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(Error::PointOutOfRange { point: img, degree });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::MalformedPermutation {
                    text: format!("{images:?}"),
                    reason: format!("image {img} appears twice"),
                });
            }
            out.push((img - 1) as u8);
        }
        Ok(Self { images: out.into_boxed_slice() })
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)` or `()`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        check_degree(degree)?;
        let malformed =
            |reason: &str| Error::MalformedPermutation { text: text.to_string(), reason: reason.to_string() };
        if text.is_empty() {
            return Err(malformed("empty text"));
        }
        let mut images: Vec<u8> = (0..degree).map(|i| i as u8).collect();
        let mut used = vec![false; degree];
        let mut rest = text;
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .ok_or_else(|| malformed("expected `(`"))?
                .find(')')
                .ok_or_else(|| malformed("unclosed cycle"))?;
            let body = &rest[1..=body_end];
            rest = &rest[body_end + 2..];
            if body.is_empty() {
                if text != "()" {
                    return Err(malformed("empty cycle inside a product"));
                }
                continue;
            }
            let mut points = Vec::new();
            for token in body.split(',') {
                if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed("cycle entries must be positive integers"));
                }
                let point: usize = token.parse().map_err(|_| malformed("point too large"))?;
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                if std::mem::replace(&mut used[point - 1], true) {
                    return Err(Error::RepeatedPoint { text: text.to_string(), point });
                }
                points.push(point - 1);
            }
            for (i, &p) in points.iter().enumerate() {
                images[p] = points[(i + 1) % points.len()] as u8;
            }
        }
        Ok(Self { images: images.into_boxed_slice() })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-based image of a one-based point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// One-based image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Self { images: inv.into_boxed_slice() }
    }

    /// `g⁻¹·self·g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        // x^g maps g(i) to g(x(i))
        let mut out = vec![0u8; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[img as usize];
        }
        Self { images: out.into_boxed_slice() }
    }

    pub fn pow(&self, exp: i64) -> Self {
        let order = self.order() as i64;
        let mut e = exp.rem_euclid(order) as usize;
        let mut base = self.clone();
        let mut acc = Self { images: (0..self.degree()).map(|i| i as u8).collect() };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, weakly decreasing.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i32 {
        let ct = self.cycle_type();
        if (self.degree() - ct.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Least `k ≥ 1` with `x^k` the identity.
pub fn element_order(x: &Permutation) -> usize {
    x.order()
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(degree));
    }
    Ok(())
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
