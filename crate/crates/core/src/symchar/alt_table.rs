use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::symchar::mn::mn_value;
use crate::symchar::partition::{alt_class_size, class_size, factorial, CycleType, Partition};

pub const ALT_TABLE_MIN_N: usize = 7;
pub const ALT_TABLE_MAX_N: usize = 14;

/// One `(σ, x)` pair of the table with everything computed about it.
#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub label: &'static str,
    pub sigma: Partition,
    pub cycle_type: CycleType,
    pub value: i64,
    pub self_conjugate: bool,
    pub element_order: usize,
    pub sym_class_size: u128,
    pub expected_sym_class_size: u128,
    pub alt_class_size: u128,
}

impl PairCheck {
    fn new(label: &'static str, sigma: &[usize], mu: &[usize], expected: u128) -> Result<Self> {
        let sigma = Partition::new(sigma.to_vec())?;
        let cycle_type = CycleType::new(mu.to_vec())?;
        Ok(Self {
            label,
            value: mn_value(&sigma, &cycle_type)?,
            self_conjugate: sigma.is_self_conjugate(),
            element_order: cycle_type.element_order(),
            sym_class_size: class_size(&cycle_type),
            expected_sym_class_size: expected,
            alt_class_size: alt_class_size(&cycle_type),
            sigma,
            cycle_type,
        })
    }

    /// Vanishing, restricting irreducibly to `Alt(n)`, and matching the closed-form size.
    pub fn holds(&self) -> bool {
        self.value == 0 && !self.self_conjugate && self.sym_class_size == self.expected_sym_class_size
    }
}

/// Divisibility findings for one prime `p ≤ n`.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeCheck {
    pub prime: u64,
    /// `p` divides the `Alt(n)`-class size of the case-(1) class.
    pub divides_case1_alt_size: bool,
    /// Some listed class of `p′`-elements has `Alt(n)`-size divisible by `p`
    /// (by 4 when `p = 2`).
    pub case2_witness: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AltTableReport {
    pub n: usize,
    pub case: &'static str,
    pub pairs: Vec<PairCheck>,
    /// Label of the pair used for case (1); differs from `x1` only when `n = 7`.
    pub case1_pair: &'static str,
    pub eight_divides_sym_size: bool,
    pub four_divides_alt_size: bool,
    pub primes: Vec<PrimeCheck>,
}

impl AltTableReport {
    /// Every pair holds and the case-(1) class has `Alt(n)`-size divisible by 4.
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(PairCheck::holds) && self.four_divides_alt_size
    }

    /// Odd primes `p ≤ n` not dividing the case-(1) `Alt(n)`-class size.
    pub fn missing_odd_primes(&self) -> Vec<u64> {
        self.primes.iter().filter(|c| c.prime > 2 && !c.divides_case1_alt_size).map(|c| c.prime).collect()
    }

    pub fn case2_holds(&self) -> bool {
        self.primes.iter().all(|c| c.case2_witness.is_some())
    }
}

/// Reproduces the vanishing pairs for `Alt(n)`, `7 ≤ n ≤ 14`.
pub fn verify_alternating_table(n: usize) -> Result<AltTableReport> {
    if !(ALT_TABLE_MIN_N..=ALT_TABLE_MAX_N).contains(&n) {
        return Err(Error::OutOfBounds { what: "n", value: n, lo: ALT_TABLE_MIN_N, hi: ALT_TABLE_MAX_N });
    }
    let f = factorial(n);
    let m = n as u128;
    let mut pairs = Vec::new();
    let case = if n % 2 == 1 {
        if is_prime(n as u64) {
            pairs.push(PairCheck::new("x1", &[n - 2, 2], &[n - 3, 2, 1], f / (2 * (m - 3)))?);
            "odd, prime"
        } else {
            pairs.push(PairCheck::new("x1", &[n - 2, 2], &[n], factorial(n - 1))?);
            "odd, not prime"
        }
    } else if is_prime(n as u64 - 1) {
        pairs.push(PairCheck::new("x1", &[n - 3, 2, 1], &[n - 2, 2], f / (2 * (m - 2)))?);
        "even, n-1 prime"
    } else {
        pairs.push(PairCheck::new("x1", &[n - 1, 1], &[n - 1, 1], f / (m - 1))?);
        "even, n-1 not prime"
    };
    if n % 2 == 1 {
        pairs.push(PairCheck::new("x2", &[n - 3, 2, 1], &[n - 2, 1, 1], f / (2 * (m - 2)))?);
    } else {
        pairs.push(PairCheck::new("x2", &[n - 2, 2], &[n - 3, 1, 1, 1], f / (6 * (m - 3)))?);
    }
    let case1_pair = if n == 7 {
        // the table's class has Alt(7)-size 630, so the pair (χ2, 3B) stands in
        pairs.push(PairCheck::new("3B", &[6, 1], &[3, 3, 1], 280)?);
        "3B"
    } else {
        "x1"
    };
    let case1 = pairs.iter().find(|p| p.label == case1_pair).expect("case-(1) pair present");
    let primes = (2..=n as u64)
        .filter(|&p| is_prime(p))
        .map(|p| {
            let need = if p == 2 { 4 } else { p as u128 };
            let case2_witness = pairs
                .iter()
                .filter(|c| c.label != "3B")
                .find(|c| !(c.element_order as u64).is_multiple_of(p) && c.alt_class_size % need == 0)
                .map(|c| c.label);
            PrimeCheck { prime: p, divides_case1_alt_size: case1.alt_class_size % p as u128 == 0, case2_witness }
        })
        .collect();
    Ok(AltTableReport {
        n,
        case,
        case1_pair,
        eight_divides_sym_size: case1.sym_class_size % 8 == 0,
        four_divides_alt_size: case1.alt_class_size % 4 == 0,
        primes,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_n_passes() {
        for n in ALT_TABLE_MIN_N..=ALT_TABLE_MAX_N {
            let report = verify_alternating_table(n).unwrap();
            assert!(report.passed(), "n={n}: {report:?}");
            assert!(report.eight_divides_sym_size, "n={n}");
            assert!(report.case2_holds(), "n={n}");
            if n > 7 {
                assert!(report.missing_odd_primes().is_empty(), "n={n}");
            }
        }
    }

    #[test]
    fn table_rows() {
        let r9 = verify_alternating_table(9).unwrap();
        assert_eq!(r9.case, "odd, not prime");
        assert_eq!(r9.pairs[0].sigma.parts(), &[7, 2]);
        assert_eq!(r9.pairs[0].sym_class_size, 40_320);
        let r10 = verify_alternating_table(10).unwrap();
        assert_eq!(r10.pairs[0].cycle_type.parts(), &[9, 1]);
        assert_eq!(r10.pairs[0].sym_class_size, 403_200);
        let r11 = verify_alternating_table(11).unwrap();
        assert_eq!(r11.pairs[0].sym_class_size, 2_494_800);
    }

    #[test]
    fn n7_special_pair() {
        let r = verify_alternating_table(7).unwrap();
        assert_eq!(r.case1_pair, "3B");
        let b = r.pairs.iter().find(|p| p.label == "3B").unwrap();
        assert_eq!(b.value, 0);
        assert_eq!(b.alt_class_size, 280);
        // 3 does not divide 280
        assert_eq!(r.missing_odd_primes(), vec![3]);
        let x1 = &r.pairs[0];
        assert_eq!(x1.alt_class_size, 630);
    }

    #[test]
    fn bounds() {
        assert!(verify_alternating_table(6).is_err());
        assert!(verify_alternating_table(15).is_err());
    }
}
