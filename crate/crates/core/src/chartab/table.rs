use std::cmp::Ordering;

use serde::Serialize;

use crate::chartab::constants::class_structure_constants;
use crate::chartab::cyclotomic::CyclotomicInteger;
use crate::chartab::modular::{character_table_mod_p, inv_mod, mul_mod, pow_mod, ModularTable};
use crate::error::{Error, Result};
use crate::groupcore::{conjugacy_classes, ConjugacyClassSet, GroupTable};

/// Exact irreducible character table.
///
/// Row 0 is the trivial character; the remaining rows follow ascending
/// degree, then the lexicographic order of their value sequences.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group_name: String,
    classes: ConjugacyClassSet,
    conductor: usize,
    prime: u64,
    degrees: Vec<u64>,
    values: Vec<Vec<CyclotomicInteger>>,
}

/// Recovers exact values from a modular table using the power map.
///
/// On a class of element order `o`, `χ(g) = Σ_t m_t ζ_o^t` where the
/// multiplicity `m_t` of the eigenvalue `ζ_o^t` is recovered from the
/// values on the powers of `g` by a discrete Fourier inversion mod `p`.
pub fn lift_character_table(
    group_name: &str,
    classes: &ConjugacyClassSet,
    modular: &ModularTable,
) -> Result<CharacterTable> {
    let p = modular.prime;
    let e = modular.conductor as usize;
    let k = classes.len();
    let mut rows: Vec<(u64, Vec<CyclotomicInteger>)> = Vec::with_capacity(k);
    for (r, row) in modular.values.iter().enumerate() {
        let degree = modular.degrees[r];
        let mut exact = Vec::with_capacity(k);
        for c in 0..k {
            let o = classes.element_orders()[c];
            let step = (e / o) as u64;
            let zeta = pow_mod(modular.root, step, p);
            let zeta_inv = inv_mod(zeta, p);
            let o_inv = inv_mod(o as u64 % p, p);
            let powers = &classes.power_map()[c];
            let mut terms = Vec::new();
            for t in 0..o as u64 {
                let base = pow_mod(zeta_inv, t, p);
                let mut acc = 0;
                let mut w = 1;
                for &pc in powers {
                    acc = (acc + mul_mod(row[pc], w, p)) % p;
                    w = mul_mod(w, base, p);
                }
                let m = mul_mod(acc, o_inv, p);
                if m > degree {
                    return Err(Error::LiftOutOfRange(format!(
                        "multiplicity {m} mod {p} exceeds degree {degree} (row {r}, class {c})"
                    )));
                }
                if m != 0 {
                    terms.push((t as i64 * step as i64, m as i64));
                }
            }
            exact.push(CyclotomicInteger::from_exponent_sum(e, &terms));
        }
        rows.push((degree, exact));
    }

    let one = CyclotomicInteger::one(e);
    let is_trivial = |row: &[CyclotomicInteger]| row.iter().all(|v| *v == one);
    rows.sort_by(|(da, va), (db, vb)| match (is_trivial(va), is_trivial(vb)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => da.cmp(db).then_with(|| va.cmp(vb)),
    });
    let (degrees, values) = rows.into_iter().unzip();
    Ok(CharacterTable {
        group_name: group_name.to_string(),
        classes: classes.clone(),
        conductor: e,
        prime: p,
        degrees,
        values,
    })
}

/// Full pipeline: classes, structure constants, modular table, lift.
pub fn character_table(group: &GroupTable) -> Result<CharacterTable> {
    character_table_with_classes(group, &conjugacy_classes(group))
}

pub fn character_table_with_classes(group: &GroupTable, classes: &ConjugacyClassSet) -> Result<CharacterTable> {
    let constants = class_structure_constants(group, classes);
    let modular = character_table_mod_p(classes, &constants)?;
    lift_character_table(group.name(), classes, &modular)
}

impl CharacterTable {
    /// Assembles a table from stored parts (e.g. a deserialized report).
    pub fn from_parts(
        group_name: String,
        classes: ConjugacyClassSet,
        conductor: usize,
        prime: u64,
        values: Vec<Vec<CyclotomicInteger>>,
    ) -> Result<Self> {
        let degrees = values
            .iter()
            .map(|row| {
                row.first()
                    .and_then(CyclotomicInteger::as_integer)
                    .filter(|&d| d > 0)
                    .map(|d| d as u64)
                    .ok_or_else(|| Error::LiftOutOfRange("degree column is not a positive integer".into()))
            })
            .collect::<Result<_>>()?;
        Ok(Self { group_name, classes, conductor, prime, degrees, values })
    }

    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn group_order(&self) -> usize {
        self.classes.group_order()
    }

    pub fn classes(&self) -> &ConjugacyClassSet {
        &self.classes
    }

    /// Number of irreducible characters (= number of classes).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Conductor shared by all values (the group exponent).
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// The prime used for the modular stage.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn values(&self) -> &[Vec<CyclotomicInteger>] {
        &self.values
    }

    pub fn value(&self, row: usize, class: usize) -> &CyclotomicInteger {
        &self.values[row][class]
    }

    pub fn row(&self, row: usize) -> &[CyclotomicInteger] {
        &self.values[row]
    }

    /// Row index of the complex conjugate of each character.
    pub fn conjugate_rows(&self) -> Option<Vec<usize>> {
        let k = self.len();
        (0..k)
            .map(|r| {
                let target: Vec<_> = (0..k).map(|c| self.values[r][self.classes.inverse_class(c)].clone()).collect();
                self.values.iter().position(|row| *row == target)
            })
            .collect()
    }

    /// Replaces one value; only meant for exercising the consistency checks.
    pub fn with_value(mut self, row: usize, class: usize, value: CyclotomicInteger) -> Self {
        self.values[row][class] = value;
        self
    }
}

/// Exact row and column orthogonality.
pub fn verify_orthogonality(table: &CharacterTable) -> bool {
    let k = table.len();
    let e = table.conductor;
    let classes = &table.classes;
    let n = table.group_order() as i64;
    let conj_col = |c: usize| classes.inverse_class(c);
    if table.values.iter().any(|row| row.len() != k || row.iter().any(|v| v.order() != e)) {
        return false;
    }
    for r in 0..k {
        for s in r..k {
            let mut acc = vec![0i64; e];
            for c in 0..k {
                let size = classes.sizes()[c] as i64;
                table.values[r][c].accumulate_product(&table.values[s][conj_col(c)], size, &mut acc);
            }
            let expected = if r == s { n } else { 0 };
            if CyclotomicInteger::from_accumulator(e, acc).as_integer() != Some(expected) {
                return false;
            }
        }
    }
    for a in 0..k {
        for b in a..k {
            let mut acc = vec![0i64; e];
            for row in &table.values {
                row[a].accumulate_product(&row[conj_col(b)], 1, &mut acc);
            }
            let expected = if a == b { classes.centralizer_orders()[a] as i64 } else { 0 };
            if CyclotomicInteger::from_accumulator(e, acc).as_integer() != Some(expected) {
                return false;
            }
        }
    }
    true
}

/// Structural identities every character table satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableInvariants {
    /// `Σ χ(1)² = |G|`.
    pub degree_squares: bool,
    pub orthogonality: bool,
    /// Every nonlinear row has a zero.
    pub burnside_zeros: bool,
    /// No row vanishes on a central class.
    pub central_columns_nonzero: bool,
}

impl TableInvariants {
    pub fn passed(&self) -> bool {
        self.degree_squares && self.orthogonality && self.burnside_zeros && self.central_columns_nonzero
    }
}

pub fn check_table_invariants(table: &CharacterTable) -> TableInvariants {
    let central = table.classes.central_classes();
    TableInvariants {
        degree_squares: table.degrees.iter().map(|&d| d * d).sum::<u64>() == table.group_order() as u64,
        orthogonality: verify_orthogonality(table),
        burnside_zeros: (0..table.len())
            .filter(|&r| table.degrees[r] > 1)
            .all(|r| table.values[r].iter().any(CyclotomicInteger::is_zero)),
        central_columns_nonzero: central.iter().all(|&c| table.values.iter().all(|row| !row[c].is_zero())),
    }
}
