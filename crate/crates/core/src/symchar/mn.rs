use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::symchar::partition::{CycleType, Partition};

/// Character value `χ_σ(μ)` by the Murnaghan–Nakayama rule.
///
/// Strips are removed on the abacus: with beta-numbers `β_i = σ_i + (ℓ - 1 - i)`,
/// a border strip of length `k` is a bead moving from `b` to a free `b - k`,
/// and its leg length is the number of beads it jumps over.
pub fn mn_value(sigma: &Partition, mu: &CycleType) -> Result<i64> {
    if sigma.n() != mu.n() {
        return Err(Error::SizeMismatch { partition: sigma.n(), cycle_type: mu.n() });
    }
    let mut memo = HashMap::new();
    Ok(recurse(sigma.parts().to_vec(), mu.parts(), &mut memo))
}

fn recurse(sigma: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (sigma, rest.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let sigma = &key.0;
    let len = sigma.len();
    let beta: Vec<usize> = sigma.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        total += if jumped % 2 == 0 { 1 } else { -1 } * recurse(from_beta(moved), rest, memo);
    }
    memo.insert(key, total);
    total
}

fn from_beta(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).filter(|&p| p > 0).collect()
}

/// Character table of `Sym(n)` with rows and columns both in [`Partition::all`] order.
pub fn mn_table(n: usize) -> (Vec<Partition>, Vec<CycleType>, Vec<Vec<i64>>) {
    let rows = Partition::all(n);
    let cols = CycleType::all(n);
    let values = rows.iter().map(|s| cols.iter().map(|c| mn_value(s, c).expect("sizes agree")).collect()).collect();
    (rows, cols, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symchar::partition::{class_size, degree, factorial};
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }
    fn c(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    /// Cells of a diagram as (row, column).
    fn cells(parts: &[usize]) -> Vec<(usize, usize)> {
        parts.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect()
    }

    /// Every sub-diagram `ν ⊂ σ` with `σ/ν` a border strip of size `k`, with leg length.
    fn brute_strips(sigma: &[usize], k: usize) -> Vec<(Vec<usize>, usize)> {
        let n: usize = sigma.iter().sum();
        let mut out = Vec::new();
        for nu in Partition::all(n - k) {
            let nu = nu.parts();
            if nu.len() > sigma.len() || nu.iter().zip(sigma).any(|(a, b)| a > b) {
                continue;
            }
            let inner = |i: usize| nu.get(i).copied().unwrap_or(0);
            let skew: Vec<_> = cells(sigma).into_iter().filter(|&(i, j)| j >= inner(i)).collect();
            let has = |i: usize, j: usize| skew.contains(&(i, j));
            if skew.iter().any(|&(i, j)| has(i + 1, j) && has(i, j + 1) && has(i + 1, j + 1)) {
                continue;
            }
            // edge connectivity by flood fill
            let mut seen = vec![skew[0]];
            let mut stack = vec![skew[0]];
            while let Some((i, j)) = stack.pop() {
                for (a, b) in [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))] {
                    if has(a, b) && !seen.contains(&(a, b)) {
                        seen.push((a, b));
                        stack.push((a, b));
                    }
                }
            }
            if seen.len() != skew.len() {
                continue;
            }
            let rows = skew.iter().map(|&(i, _)| i).collect::<std::collections::BTreeSet<_>>().len();
            out.push((nu.to_vec(), rows - 1));
        }
        out
    }

    fn brute_mn(sigma: &[usize], mu: &[usize]) -> i64 {
        let Some((&k, rest)) = mu.split_first() else { return 1 };
        brute_strips(sigma, k)
            .into_iter()
            .map(|(nu, leg)| if leg % 2 == 0 { 1 } else { -1 } * brute_mn(&nu, rest))
            .sum()
    }

    #[test]
    fn examples() {
        assert_eq!(mn_value(&p(&[2, 1]), &c(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_value(&p(&[2, 1]), &c(&[3])).unwrap(), -1);
        assert_eq!(mn_value(&p(&[7, 2]), &c(&[9])).unwrap(), 0);
        assert_eq!(mn_value(&p(&[9, 1]), &c(&[9, 1])).unwrap(), 0);
        assert!(matches!(mn_value(&p(&[2, 1]), &c(&[2])), Err(Error::SizeMismatch { partition: 3, cycle_type: 2 })));
    }

    #[test]
    fn agrees_with_border_strip_oracle() {
        for n in 1..=7 {
            for s in Partition::all(n) {
                for m in CycleType::all(n) {
                    assert_eq!(mn_value(&s, &m).unwrap(), brute_mn(s.parts(), m.parts()), "{s} on {m}");
                }
            }
        }
    }

    #[test]
    fn identity_column_is_hook_degree() {
        for n in 0..=10 {
            let id = CycleType::new(vec![1; n]).unwrap();
            let mut sum_sq = 0u128;
            for s in Partition::all(n) {
                let d = degree(&s);
                assert_eq!(mn_value(&s, &id).unwrap() as u128, d);
                sum_sq += d * d;
            }
            assert_eq!(sum_sq, factorial(n));
        }
    }

    #[test]
    fn conjugate_partition_twists_by_sign() {
        for n in 1..=9 {
            for s in Partition::all(n) {
                let t = s.conjugate();
                for m in CycleType::all(n) {
                    assert_eq!(mn_value(&t, &m).unwrap(), m.sign() * mn_value(&s, &m).unwrap());
                }
            }
        }
    }

    #[test]
    fn table_orthogonality() {
        for n in 1..=7 {
            let (rows, cols, v) = mn_table(n);
            let order = factorial(n) as i128;
            for a in 0..rows.len() {
                for b in 0..rows.len() {
                    let s: i128 =
                        (0..cols.len()).map(|j| class_size(&cols[j]) as i128 * (v[a][j] * v[b][j]) as i128).sum();
                    assert_eq!(s, if a == b { order } else { 0 });
                }
            }
        }
    }

    fn partition_strategy() -> impl Strategy<Value = Partition> {
        (1usize..=14).prop_flat_map(|n| {
            let all = Partition::all(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn row_norm_is_one(sigma in partition_strategy()) {
            let n = sigma.n();
            let norm: i128 = CycleType::all(n)
                .iter()
                .map(|m| class_size(m) as i128 * (mn_value(&sigma, m).unwrap() as i128).pow(2))
                .sum();
            prop_assert_eq!(norm, factorial(n) as i128);
        }
    }
}
