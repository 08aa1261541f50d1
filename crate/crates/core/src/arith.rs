//! Small integer helpers shared by the group-theoretic modules.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_prime_power(n: u64) -> bool {
    prime_divisors(n).len() == 1
}

/// Trial division.
pub fn is_squarefree(n: u64) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers() {
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(91));
        assert_eq!(prime_divisors(2520), vec![2, 3, 5, 7]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(p_part(2520, 2), 8);
        assert!(is_squarefree(30) && !is_squarefree(20) && is_squarefree(1));
        assert!(is_prime_power(8) && !is_prime_power(12) && !is_prime_power(1));
        assert_eq!(isqrt(95040), 308);
        assert!(matches!(require_prime(4), Err(Error::NotPrime(4))));
    }
}
