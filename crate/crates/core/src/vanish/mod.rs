//! Vanishing classes, defect-zero characters and the lemmas built on them.

mod lemmas;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{prime_divisors, require_prime};
use crate::chartab::CharacterTable;
use crate::error::Result;

pub use lemmas::{
    check_alt_restriction, check_minimal_normal_lift, check_quotient_compatibility,
    coprime_six_nonvanishing_in_fitting, LiftFindings, LiftReport, QuotientCompatibility, RestrictionReport,
    RestrictionRow, RESTRICTION_MAX_N,
};

/// Classes on which some irreducible character is exactly zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    pub vanishing_class_indices: Vec<usize>,
    pub vanishing_class_sizes: Vec<usize>,
    /// Class index to the first row vanishing on it.
    pub witnesses: BTreeMap<usize, usize>,
}

impl VanishingReport {
    pub fn is_vanishing(&self, class: usize) -> bool {
        self.witnesses.contains_key(&class)
    }

    pub fn is_empty(&self) -> bool {
        self.vanishing_class_indices.is_empty()
    }
}

pub fn vanishing_classes(table: &CharacterTable) -> VanishingReport {
    let sizes = table.classes().sizes();
    let mut report = VanishingReport {
        vanishing_class_indices: Vec::new(),
        vanishing_class_sizes: Vec::new(),
        witnesses: BTreeMap::new(),
    };
    for c in 0..table.len() {
        if let Some(r) = (0..table.len()).find(|&r| table.value(r, c).is_zero()) {
            report.vanishing_class_indices.push(c);
            report.vanishing_class_sizes.push(sizes[c]);
            report.witnesses.insert(c, r);
        }
    }
    report
}

/// Rows `r` with `q ∤ |G|/χ_r(1)`.
pub fn defect_zero_characters(table: &CharacterTable, q: u64) -> Result<Vec<usize>> {
    require_prime(q)?;
    let order = table.group_order() as u64;
    Ok((0..table.len()).filter(|&r| !(order / table.degrees()[r]).is_multiple_of(q)).collect())
}

/// Whether every prime divisor of `|G|` admits a defect-zero character.
pub fn has_defect_zero_all_primes(table: &CharacterTable) -> bool {
    prime_divisors(table.group_order() as u64)
        .into_iter()
        .all(|q| defect_zero_characters(table, q).is_ok_and(|rows| !rows.is_empty()))
}

/// Every `q`-defect-zero row is zero on every class of element order divisible by `q`.
pub fn check_brauer_vanishing(table: &CharacterTable, q: u64) -> Result<bool> {
    let rows = defect_zero_characters(table, q)?;
    let orders = table.classes().element_orders();
    Ok(rows.iter().all(|&r| {
        (0..table.len()).filter(|&c| (orders[c] as u64).is_multiple_of(q)).all(|c| table.value(r, c).is_zero())
    }))
}
