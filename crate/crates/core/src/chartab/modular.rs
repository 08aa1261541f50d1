//! The modular stage: simultaneous eigenvectors of the class matrices over `F_p`.

use crate::arith::{is_prime, isqrt, prime_divisors};
use crate::chartab::constants::StructureConstants;
use crate::error::{Error, Result};
use crate::groupcore::ConjugacyClassSet;

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2·√n`.
pub fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut p = e + 1;
    loop {
        if p * p > 4 * n && is_prime(p) {
            return p;
        }
        p += e;
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Smallest generator of the multiplicative group of `F_p`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    let factors = prime_divisors(p - 1);
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1)
}

/// Character table reduced modulo a prime `p ≡ 1 (mod e)`.
#[derive(Clone, Debug)]
pub struct ModularTable {
    pub prime: u64,
    /// Exponent of the group; the conductor of every character value.
    pub conductor: u64,
    /// A primitive `conductor`-th root of unity in `F_p`.
    pub root: u64,
    /// Degrees as integers in `1..=√|G|`.
    pub degrees: Vec<u64>,
    /// `values[r][c]` is χ_r on class `c`, reduced mod `p`.
    pub values: Vec<Vec<u64>>,
}

/// Null space of a `rows × cols` matrix over `F_p`, one basis vector per free column.
fn null_space(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for x in &mut m[r] {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = mul_mod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[i][f]) % p;
            }
            v
        })
        .collect()
}

/// Splits an `M`-invariant subspace (basis rows) into eigenspaces of `M`,
/// ordered by ascending eigenvalue.
fn split_space(basis: &[Vec<u64>], matrix: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let k = matrix.len();
    let d = basis.len();
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..k).map(|i| matrix[i].iter().zip(b).fold(0, |acc, (&m, &x)| (acc + mul_mod(m, x, p)) % p)).collect()
        })
        .collect();
    let mut parts = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        // columns u_t - λ·b_t, rows indexed by coordinate
        let a: Vec<Vec<u64>> = (0..k)
            .map(|i| (0..d).map(|t| (images[t][i] + p - mul_mod(lambda, basis[t][i], p)) % p).collect())
            .collect();
        let kernel = null_space(a, d, p);
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        parts.push(
            kernel
                .iter()
                .map(|c| {
                    (0..k)
                        .map(|i| c.iter().zip(basis).fold(0, |acc, (&ct, b)| (acc + mul_mod(ct, b[i], p)) % p))
                        .collect()
                })
                .collect(),
        );
        if found == d {
            return Ok(parts);
        }
    }
    Err(Error::SplittingFailure(format!("eigenspaces of a class matrix cover dimension {found} of {d}")))
}

/// Computes the irreducible characters modulo a Dixon prime.
pub fn character_table_mod_p(classes: &ConjugacyClassSet, constants: &StructureConstants) -> Result<ModularTable> {
    let k = classes.len();
    let order = classes.group_order() as u64;
    let conductor = classes.element_orders().iter().fold(1usize, |a, &b| crate::groupcore::lcm(a, b)) as u64;
    let p = dixon_prime(conductor, order);

    let identity: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces = vec![identity];
    for j in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let matrix: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|l| constants.get(j, i, l) % p).collect()).collect();
        let mut next = Vec::with_capacity(k);
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split_space(&space, &matrix, p)?);
            }
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() > 1) {
        return Err(Error::SplittingFailure(format!("a common eigenspace of dimension {} remains", s.len())));
    }

    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64 % p).collect();
    let max_degree = isqrt(order);
    let mut degrees = Vec::with_capacity(k);
    let mut values = Vec::with_capacity(k);
    for space in spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::SplittingFailure("eigenvector vanishes on the identity class".into()));
        }
        let scale = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, scale, p)).collect();
        // χ(1)² = |G| / Σ_l ω_l ω_{l'} / |C_l|
        let sum = (0..k).fold(0, |acc, l| {
            let term = mul_mod(mul_mod(omega[l], omega[classes.inverse_class(l)], p), inv_mod(sizes[l], p), p);
            (acc + term) % p
        });
        if sum == 0 {
            return Err(Error::SplittingFailure("degenerate central character".into()));
        }
        let square = mul_mod(order % p, inv_mod(sum, p), p);
        let degree = (1..=max_degree)
            .find(|&d| mul_mod(d, d, p) == square)
            .ok_or_else(|| Error::LiftOutOfRange(format!("no degree squares to {square} mod {p}")))?;
        values.push((0..k).map(|l| mul_mod(mul_mod(omega[l], degree, p), inv_mod(sizes[l], p), p)).collect());
        degrees.push(degree);
    }
    let total: u64 = degrees.iter().map(|d| d * d).sum();
    if total != order {
        return Err(Error::LiftOutOfRange(format!("degree squares sum to {total}, expected {order}")));
    }
    let root = pow_mod(primitive_root(p), (p - 1) / conductor, p);
    Ok(ModularTable { prime: p, conductor, root, degrees, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::class_structure_constants;
    use crate::groupcore::{conjugacy_classes, generate_group, Permutation};

    fn modular(texts: &[&str], degree: usize) -> ModularTable {
        let gens: Vec<_> = texts.iter().map(|t| Permutation::parse(t, degree).unwrap()).collect();
        let g = generate_group(&gens, 10_000).unwrap();
        let c = conjugacy_classes(&g);
        character_table_mod_p(&c, &class_structure_constants(&g, &c)).unwrap()
    }

    #[test]
    fn prime_choice() {
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(4, 8), 13);
        assert_eq!(dixon_prime(30, 60), 31);
        assert_eq!(dixon_prime(1, 1), 3);
    }

    #[test]
    fn field_helpers() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
        assert_eq!(mul_mod(inv_mod(5, 13), 5, 13), 1);
        let kernel = null_space(vec![vec![1, 2], vec![2, 4]], 2, 7);
        assert_eq!(kernel, vec![vec![5, 1]]);
    }

    #[test]
    fn sym3_mod_7() {
        let t = modular(&["(1,2)", "(1,2,3)"], 3);
        assert_eq!(t.prime, 7);
        let mut degrees = t.degrees.clone();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2]);
    }

    #[test]
    fn q8_and_abelian() {
        let t = modular(&["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"], 8);
        let mut degrees = t.degrees.clone();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 1, 1, 2]);

        let t = modular(&["(1,2,3,4,5,6,7,8,9,10,11,12)"], 12);
        assert_eq!(t.degrees, vec![1; 12]);
        let t = modular(&["(1,2)", "(3,4)"], 4);
        assert_eq!(t.degrees, vec![1; 4]);
    }
}
