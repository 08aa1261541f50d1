use std::collections::HashSet;

use serde::Serialize;

use crate::arith::require_prime;
use crate::chartab::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::groupcore::{generate_group, GroupTable, Permutation};
use crate::structure::{fitting_subgroup, generated_subgroup, is_normal, quotient, Subgroup};
use crate::symchar::{label_symmetric_rows, Partition};
use crate::vanish::{defect_zero_characters, vanishing_classes};

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LiftReport {
    NotApplicable { reason: String },
    Checked(LiftFindings),
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftFindings {
    pub normal_order: usize,
    pub defect_zero_degrees: Vec<u64>,
    /// Elements of `N` whose order is divisible by `q`.
    pub checked_elements: usize,
    /// Classes of the big group holding such an element without vanishing.
    pub non_vanishing_classes: Vec<usize>,
}

impl LiftReport {
    pub fn passed(&self) -> bool {
        matches!(self, LiftReport::Checked(f) if f.non_vanishing_classes.is_empty())
    }

    pub fn is_applicable(&self) -> bool {
        matches!(self, LiftReport::Checked(_))
    }
}

/// If `N ⊴ G` has a `q`-defect-zero character, checks that every element of
/// `N` of order divisible by `q` is vanishing in `G`.
pub fn check_minimal_normal_lift(big: &GroupTable, generators: &[Permutation], q: u64) -> Result<LiftReport> {
    require_prime(q)?;
    let indices = generators
        .iter()
        .map(|g| big.index_of(g).ok_or_else(|| Error::NotInGroup(g.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let n = generated_subgroup(big, &indices);
    if !is_normal(big, &n) {
        return Err(Error::NotNormal);
    }
    let n_table = character_table(&generate_group(generators, big.order())?)?;
    let defect_zero = defect_zero_characters(&n_table, q)?;
    if defect_zero.is_empty() {
        return Ok(LiftReport::NotApplicable {
            reason: format!("the normal subgroup of order {} has no {q}-defect-zero character", n.order()),
        });
    }
    let table = character_table(big)?;
    let report = vanishing_classes(&table);
    let classes = table.classes();
    let mut checked = 0;
    let mut non_vanishing = Vec::new();
    for &x in n.element_indices() {
        if !(big.element_order(x) as u64).is_multiple_of(q) {
            continue;
        }
        checked += 1;
        let c = classes.class_of(x);
        if !report.is_vanishing(c) && !non_vanishing.contains(&c) {
            non_vanishing.push(c);
        }
    }
    non_vanishing.sort_unstable();
    Ok(LiftReport::Checked(LiftFindings {
        normal_order: n.order(),
        defect_zero_degrees: defect_zero.iter().map(|&r| n_table.degrees()[r]).collect(),
        checked_elements: checked,
        non_vanishing_classes: non_vanishing,
    }))
}

/// How vanishing in `G/N` relates to vanishing in `G` for classes outside `N`.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientCompatibility {
    pub normal_order: usize,
    /// Classes outside `N` whose coset vanishes in `G/N` but which do not vanish in `G`.
    pub forward_violations: Vec<usize>,
    /// Classes outside `N` vanishing in `G` whose coset does not vanish in `G/N`.
    pub backward_exceptions: Vec<usize>,
    /// `|x^N|` and `|xN^{G/N}|` both divide `|x^G|` for every class.
    pub divisibility_holds: bool,
}

impl QuotientCompatibility {
    pub fn forward_holds(&self) -> bool {
        self.forward_violations.is_empty()
    }
}

pub fn check_quotient_compatibility(
    group: &GroupTable,
    table: &CharacterTable,
    n: &Subgroup,
) -> Result<QuotientCompatibility> {
    if !is_normal(group, n) {
        return Err(Error::NotNormal);
    }
    let q = quotient(group, n)?;
    let q_table = character_table(&q.group)?;
    let q_vanishing = vanishing_classes(&q_table);
    let g_vanishing = vanishing_classes(table);
    let classes = table.classes();
    let mut forward = Vec::new();
    let mut backward = Vec::new();
    let mut divisibility = true;
    for c in 0..classes.len() {
        let x = classes.representative_indices()[c];
        let size = classes.sizes()[c];
        let coset_class = q_table.classes().class_of(q.image[x]);
        let n_orbit: HashSet<usize> = n.element_indices().iter().map(|&m| group.conj(x, m)).collect();
        divisibility &=
            size.is_multiple_of(q_table.classes().sizes()[coset_class]) && size.is_multiple_of(n_orbit.len());
        if n.contains(x) {
            continue;
        }
        match (q_vanishing.is_vanishing(coset_class), g_vanishing.is_vanishing(c)) {
            (true, false) => forward.push(c),
            (false, true) => backward.push(c),
            _ => {}
        }
    }
    Ok(QuotientCompatibility {
        normal_order: n.order(),
        forward_violations: forward,
        backward_exceptions: backward,
        divisibility_holds: divisibility,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionRow {
    pub partition: Partition,
    pub self_conjugate: bool,
    pub restriction_irreducible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub n: usize,
    pub rows: Vec<RestrictionRow>,
}

impl RestrictionReport {
    /// Restriction is irreducible exactly for the non-self-conjugate partitions.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.restriction_irreducible != r.self_conjugate)
    }
}

pub const RESTRICTION_MAX_N: usize = 7;

/// Restricts every irreducible character of `Sym(n)` to `Alt(n)` and tests
/// whether the result is a row of the `Alt(n)` table.
pub fn check_alt_restriction(n: usize) -> Result<RestrictionReport> {
    if !(3..=RESTRICTION_MAX_N).contains(&n) {
        return Err(Error::OutOfBounds { what: "n", value: n, lo: 3, hi: RESTRICTION_MAX_N });
    }
    let full_cycle: Vec<usize> = (2..=n).chain([1]).collect();
    let sym = generate_group(&[Permutation::from_images(&full_cycle)?, Permutation::parse("(1,2)", n)?], usize::MAX)?;
    let odd_cycle = if n % 2 == 1 {
        full_cycle
    } else {
        // (2,3,...,n)
        [1].into_iter().chain((3..=n).chain([2])).collect()
    };
    let alt = generate_group(&[Permutation::from_images(&odd_cycle)?, Permutation::parse("(1,2,3)", n)?], usize::MAX)?;
    let sym_table = character_table(&sym)?;
    let alt_table = character_table(&alt)?;
    let labels = label_symmetric_rows(&sym_table)
        .ok_or_else(|| Error::SplittingFailure("Sym(n) rows do not match any partition labelling".into()))?;
    let fusion: Vec<usize> = alt_table
        .classes()
        .representatives()
        .iter()
        .map(|x| sym_table.classes().class_of(sym.index_of(x).expect("Alt(n) lies in Sym(n)")))
        .collect();
    let rows = labels
        .into_iter()
        .enumerate()
        .map(|(r, partition)| {
            let restricted: Vec<i64> =
                fusion.iter().map(|&c| sym_table.value(r, c).as_integer().expect("rational table")).collect();
            let restriction_irreducible = alt_table
                .values()
                .iter()
                .any(|row| row.iter().zip(&restricted).all(|(v, &w)| v.as_integer() == Some(w)));
            RestrictionRow { self_conjugate: partition.is_self_conjugate(), partition, restriction_irreducible }
        })
        .collect();
    Ok(RestrictionReport { n, rows })
}

/// Whether every non-vanishing element of order coprime to 6 lies in the Fitting subgroup.
pub fn coprime_six_nonvanishing_in_fitting(group: &GroupTable, table: &CharacterTable) -> bool {
    let fitting = fitting_subgroup(group);
    let report = vanishing_classes(table);
    let classes = table.classes();
    (0..classes.len())
        .filter(|&c| {
            !report.is_vanishing(c)
                && !classes.element_orders()[c].is_multiple_of(2)
                && !classes.element_orders()[c].is_multiple_of(3)
        })
        .all(|c| fitting.contains(classes.representative_indices()[c]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{derived_subgroup, normal_subgroups};

    fn gens(texts: &[&str], degree: usize) -> Vec<Permutation> {
        texts.iter().map(|t| Permutation::parse(t, degree).unwrap()).collect()
    }

    #[test]
    fn lift_in_sym5() {
        let sym5 = generate_group(&gens(&["(1,2,3,4,5)", "(1,2)"], 5), 1000).unwrap();
        let alt5 = gens(&["(1,2,3,4,5)", "(1,2,3)"], 5);
        for q in [2, 3, 5] {
            let report = check_minimal_normal_lift(&sym5, &alt5, q).unwrap();
            assert!(report.passed(), "q={q}: {report:?}");
        }
        let LiftReport::Checked(f) = check_minimal_normal_lift(&sym5, &alt5, 5).unwrap() else { panic!() };
        assert_eq!(f.checked_elements, 24);
        assert_eq!(f.defect_zero_degrees, vec![5]);
    }

    #[test]
    fn lift_not_applicable_or_invalid() {
        let sym3 = generate_group(&gens(&["(1,2)", "(1,2,3)"], 3), 100).unwrap();
        let alt3 = gens(&["(1,2,3)"], 3);
        assert!(!check_minimal_normal_lift(&sym3, &alt3, 3).unwrap().is_applicable());
        assert!(matches!(check_minimal_normal_lift(&sym3, &gens(&["(1,2)"], 3), 2), Err(Error::NotNormal)));
        let sym4 = generate_group(&gens(&["(1,2,3,4)", "(1,2)"], 4), 100).unwrap();
        assert!(matches!(check_minimal_normal_lift(&sym3, &gens(&["(1,2,3,4)"], 4), 2), Err(Error::NotInGroup(_))));
        assert!(check_minimal_normal_lift(&sym4, &gens(&["(1,2)(3,4)", "(1,3)(2,4)"], 4), 4).is_err());
    }

    #[test]
    fn quotient_compatibility() {
        let sym4 = generate_group(&gens(&["(1,2,3,4)", "(1,2)"], 4), 100).unwrap();
        let table = character_table(&sym4).unwrap();
        for n in normal_subgroups(&sym4) {
            if n.is_trivial() {
                continue;
            }
            let report = check_quotient_compatibility(&sym4, &table, &n).unwrap();
            assert!(report.forward_holds(), "{report:?}");
            assert!(report.divisibility_holds);
        }
    }

    #[test]
    fn vanishing_need_not_descend() {
        // Sym(3)/Alt(3) is abelian, yet the transpositions vanish in Sym(3)
        let sym3 = generate_group(&gens(&["(1,2)", "(1,2,3)"], 3), 100).unwrap();
        let table = character_table(&sym3).unwrap();
        let a3 = derived_subgroup(&sym3, &Subgroup::whole(&sym3));
        let report = check_quotient_compatibility(&sym3, &table, &a3).unwrap();
        assert!(report.forward_holds());
        assert_eq!(report.backward_exceptions.len(), 1);
    }

    #[test]
    fn restriction_to_alternating() {
        for n in 3..=7 {
            let report = check_alt_restriction(n).unwrap();
            assert!(report.passed(), "n={n}: {report:?}");
        }
        assert!(check_alt_restriction(8).is_err());
    }

    #[test]
    fn coprime_six_elements() {
        let f20 = generate_group(&gens(&["(1,2,3,4,5)", "(2,3,5,4)"], 5), 100).unwrap();
        assert!(coprime_six_nonvanishing_in_fitting(&f20, &character_table(&f20).unwrap()));
        let alt5 = generate_group(&gens(&["(1,2,3,4,5)", "(1,2,3)"], 5), 100).unwrap();
        assert!(coprime_six_nonvanishing_in_fitting(&alt5, &character_table(&alt5).unwrap()));
    }
}
