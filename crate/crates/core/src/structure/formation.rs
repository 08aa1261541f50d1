use std::collections::HashSet;

use serde::Serialize;

use crate::arith::is_prime;
use crate::groupcore::GroupTable;
use crate::structure::series::{
    chief_factor_orders_above, elementary_abelian_prime, fitting_subgroup, is_soluble, is_supersoluble,
    minimal_normal_subgroups, normal_subgroups,
};
use crate::structure::subgroup::{generated_subgroup, Subgroup};

/// Largest order for which the complement search runs.
pub const FORMATION_ORDER_BOUND: usize = 2000;

/// Outcome of checking the structure of a soluble, minimally non-supersoluble group.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FormationReport {
    NotApplicable { reason: String },
    Checked(FormationFindings),
}

#[derive(Clone, Debug, Serialize)]
pub struct FormationFindings {
    pub fitting_order: usize,
    /// (a) the Fitting subgroup is the only minimal normal subgroup.
    pub fitting_unique_minimal_normal: bool,
    /// (b) prime `p` when the Fitting subgroup is an elementary abelian `p`-group.
    pub elementary_abelian_prime: Option<u64>,
    /// (c) order of the complement found, if any.
    pub complement_order: Option<usize>,
    /// (d) the complement is a maximal subgroup.
    pub complement_maximal: bool,
}

impl FormationReport {
    pub fn passed(&self) -> bool {
        match self {
            FormationReport::NotApplicable { .. } => false,
            FormationReport::Checked(f) => {
                f.fitting_unique_minimal_normal
                    && f.elementary_abelian_prime.is_some()
                    && f.complement_order.is_some()
                    && f.complement_maximal
            }
        }
    }

    pub fn is_applicable(&self) -> bool {
        matches!(self, FormationReport::Checked(_))
    }
}

/// Verifies, for a soluble group that is not supersoluble while all of its
/// proper quotients are, that the Fitting subgroup is the unique minimal
/// normal subgroup, is elementary abelian, and has a maximal complement.
pub fn verify_formation_lemma(group: &GroupTable) -> FormationReport {
    let not_applicable = |reason: &str| FormationReport::NotApplicable { reason: reason.to_string() };
    if group.order() > FORMATION_ORDER_BOUND {
        return not_applicable("group order exceeds the complement search bound");
    }
    if !is_soluble(group) {
        return not_applicable("group is not soluble");
    }
    if is_supersoluble(group) {
        return not_applicable("group is supersoluble");
    }
    let lattice = normal_subgroups(group);
    for n in lattice.iter().filter(|n| !n.is_trivial()) {
        if !chief_factor_orders_above(group, &lattice, n).iter().all(|&f| is_prime(f as u64)) {
            return FormationReport::NotApplicable {
                reason: format!("quotient by a normal subgroup of order {} is not supersoluble", n.order()),
            };
        }
    }

    let fitting = fitting_subgroup(group);
    let minimal = minimal_normal_subgroups(group);
    let unique = minimal.len() == 1 && minimal[0] == fitting;
    let prime = elementary_abelian_prime(group, &fitting);
    let complement = find_complement(group, &fitting);
    let maximal = complement.as_ref().is_some_and(|h| is_maximal(group, h));
    FormationReport::Checked(FormationFindings {
        fitting_order: fitting.order(),
        fitting_unique_minimal_normal: unique,
        elementary_abelian_prime: prime,
        complement_order: complement.map(|h| h.order()),
        complement_maximal: maximal,
    })
}

/// Depth-first search for `H` with `H ∩ N = 1` and `|H|·|N| = |G|`, adding
/// one element from an uncovered coset of `N` at a time.
pub fn find_complement(group: &GroupTable, n: &Subgroup) -> Option<Subgroup> {
    let index = group.order() / n.order();
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut next_id = 0;
    for x in 0..group.order() {
        if coset_of[x] == usize::MAX {
            for &m in n.element_indices() {
                coset_of[group.mul(x, m)] = next_id;
            }
            next_id += 1;
        }
    }
    let mut visited = HashSet::new();
    search(group, n, index, &coset_of, Subgroup::trivial(), &mut visited)
}

fn search(
    group: &GroupTable,
    n: &Subgroup,
    index: usize,
    coset_of: &[usize],
    current: Subgroup,
    visited: &mut HashSet<Vec<usize>>,
) -> Option<Subgroup> {
    if current.order() == index {
        return Some(current);
    }
    let mut covered = vec![false; index];
    for &x in current.element_indices() {
        covered[coset_of[x]] = true;
    }
    for y in 0..group.order() {
        if covered[coset_of[y]] {
            continue;
        }
        let mut gens = current.generators().to_vec();
        gens.push(y);
        let candidate = generated_subgroup(group, &gens);
        if candidate.intersection_order(n) != 1 || !index.is_multiple_of(candidate.order()) {
            continue;
        }
        if !visited.insert(candidate.element_indices().to_vec()) {
            continue;
        }
        if let Some(found) = search(group, n, index, coset_of, candidate, visited) {
            return Some(found);
        }
    }
    None
}

/// Whether adjoining any element outside `h` generates the whole group.
pub fn is_maximal(group: &GroupTable, h: &Subgroup) -> bool {
    if h.order() == group.order() {
        return false;
    }
    (0..group.order()).filter(|&y| !h.contains(y)).all(|y| {
        let mut gens = h.generators().to_vec();
        gens.push(y);
        generated_subgroup(group, &gens).order() == group.order()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::{generate_group, Permutation};

    fn group(texts: &[&str], degree: usize) -> GroupTable {
        let gens: Vec<_> = texts.iter().map(|t| Permutation::parse(t, degree).unwrap()).collect();
        generate_group(&gens, 10_000).unwrap()
    }

    #[test]
    fn alt4_passes() {
        let report = verify_formation_lemma(&group(&["(1,2,3)", "(2,3,4)"], 4));
        let FormationReport::Checked(f) = &report else { panic!("expected applicable: {report:?}") };
        assert_eq!(f.fitting_order, 4);
        assert!(f.fitting_unique_minimal_normal);
        assert_eq!(f.elementary_abelian_prime, Some(2));
        assert_eq!(f.complement_order, Some(3));
        assert!(f.complement_maximal);
        assert!(report.passed());
    }

    #[test]
    fn sym4_passes() {
        let report = verify_formation_lemma(&group(&["(1,2,3,4)", "(1,2)"], 4));
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn inapplicable_groups() {
        // SL(2,3): its quotient Alt(4) is not supersoluble
        let sl23 = group(&["(1,4,7)(2,8,5)", "(1,6,2,3)(4,7,8,5)"], 8);
        assert_eq!(sl23.order(), 24);
        assert!(!verify_formation_lemma(&sl23).is_applicable());
        assert!(!verify_formation_lemma(&group(&["(1,2)", "(1,2,3)"], 3)).is_applicable());
        assert!(!verify_formation_lemma(&group(&["(1,2,3,4,5)", "(1,2,3)"], 5)).is_applicable());
    }
}
