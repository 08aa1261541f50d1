//! Hypothesis and conclusion checkers for the vanishing-class theorems.
//!
//! Every checker evaluates its hypothesis from the vanishing classes alone
//! and its conclusion from the group structure, then records whether the
//! implication holds. The theorems are true, so `consistent == false` means
//! a bug somewhere below.

mod scan;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_squarefree, prime_divisors, require_prime};
use crate::chartab::{character_table, CharacterTable};
use crate::error::Result;
use crate::groupcore::GroupTable;
use crate::structure::{has_normal_p_complement, is_soluble, is_supersoluble};
use crate::vanish::{vanishing_classes, VanishingReport};

pub use scan::{scan_catalog, GroupScan, ScanOptions, ScanReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    A,
    B,
    C,
    #[serde(rename = "corollary")]
    Corollary,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::C => "C",
            TheoremId::Corollary => "corollary",
        })
    }
}

/// One clause of a hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Detail {
    /// A vanishing class breaking a hypothesis clause.
    VanishingClass { class: usize, size: usize, element_order: usize, witness_row: usize },
    /// `p` does not divide `|G|`.
    PrimeDoesNotDivideOrder { prime: u64, order: usize },
    /// A prime divisor `q` of `|G|` divides `p - 1`.
    PrimeDividesPMinusOne { q: u64, prime: u64 },
    /// Order of the normal `p`-complement found.
    NormalComplement { order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub group: String,
    pub theorem: TheoremId,
    pub prime: Option<u64>,
    pub hypothesis_holds: bool,
    pub clauses: Vec<Clause>,
    pub conclusion: String,
    pub conclusion_holds: bool,
    pub consistent: bool,
    pub details: Vec<Detail>,
}

impl TheoremReport {
    fn new(
        group: &str,
        theorem: TheoremId,
        prime: Option<u64>,
        clauses: Vec<Clause>,
        conclusion: &str,
        conclusion_holds: bool,
        details: Vec<Detail>,
    ) -> Self {
        let hypothesis_holds = clauses.iter().all(|c| c.holds);
        Self {
            group: group.to_string(),
            theorem,
            prime,
            hypothesis_holds,
            clauses,
            conclusion: conclusion.to_string(),
            conclusion_holds,
            consistent: !hypothesis_holds || conclusion_holds,
            details,
        }
    }

    /// Sizes of the vanishing classes named in the details.
    pub fn offending_sizes(&self) -> Vec<usize> {
        self.details
            .iter()
            .filter_map(|d| match d {
                Detail::VanishingClass { size, .. } => Some(*size),
                _ => None,
            })
            .collect()
    }
}

/// Sizes and element orders of the vanishing classes, which is all a hypothesis may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingProfile {
    pub group_order: usize,
    /// `(class, size, element order, witness row)` per vanishing class.
    pub classes: Vec<(usize, usize, usize, usize)>,
}

impl VanishingProfile {
    pub fn new(table: &CharacterTable, report: &VanishingReport) -> Self {
        let classes = table.classes();
        Self {
            group_order: table.group_order(),
            classes: report
                .witnesses
                .iter()
                .map(|(&c, &r)| (c, classes.sizes()[c], classes.element_orders()[c], r))
                .collect(),
        }
    }

    fn offending(&self, bad: impl Fn(usize, usize) -> bool) -> Vec<Detail> {
        self.classes
            .iter()
            .filter(|&&(_, size, order, _)| bad(size, order))
            .map(|&(class, size, element_order, witness_row)| Detail::VanishingClass {
                class,
                size,
                element_order,
                witness_row,
            })
            .collect()
    }
}

fn clause(name: impl Into<String>, holds: bool) -> Clause {
    Clause { name: name.into(), holds }
}

/// Hypothesis of Theorem A: `p | |G|`, no prime divisor of `|G|` divides
/// `p - 1`, and no vanishing class size is divisible by `p²`.
pub fn theorem_a_hypothesis(profile: &VanishingProfile, p: u64) -> Result<(Vec<Clause>, Vec<Detail>)> {
    require_prime(p)?;
    let order = profile.group_order;
    let mut details = Vec::new();
    let divides = (order as u64).is_multiple_of(p);
    if !divides {
        details.push(Detail::PrimeDoesNotDivideOrder { prime: p, order });
    }
    let bad_q: Vec<u64> = prime_divisors(order as u64).into_iter().filter(|&q| (p - 1).is_multiple_of(q)).collect();
    details.extend(bad_q.iter().map(|&q| Detail::PrimeDividesPMinusOne { q, prime: p }));
    let offending = profile.offending(|size, _| (size as u64).is_multiple_of(p * p));
    let clauses = vec![
        clause(format!("{p} divides |G|"), divides),
        clause(format!("no prime divisor of |G| divides {}", p - 1), bad_q.is_empty()),
        clause(format!("no vanishing class size divisible by {}", p * p), offending.is_empty()),
    ];
    details.extend(offending);
    Ok((clauses, details))
}

pub fn corollary_hypothesis(profile: &VanishingProfile) -> (Vec<Clause>, Vec<Detail>) {
    let offending = profile.offending(|size, _| size % 4 == 0);
    (vec![clause("no vanishing class size divisible by 4", offending.is_empty())], offending)
}

pub fn theorem_b_hypothesis(profile: &VanishingProfile) -> (Vec<Clause>, Vec<Detail>) {
    let offending = profile.offending(|size, _| !is_squarefree(size as u64));
    (vec![clause("every vanishing class size is squarefree", offending.is_empty())], offending)
}

/// Hypothesis of Theorem C: `p` divides no vanishing class size of a `p′`-element.
pub fn theorem_c_hypothesis(profile: &VanishingProfile, p: u64) -> Result<(Vec<Clause>, Vec<Detail>)> {
    require_prime(p)?;
    let offending =
        profile.offending(|size, order| !(order as u64).is_multiple_of(p) && (size as u64).is_multiple_of(p));
    Ok((
        vec![clause(format!("{p} divides no vanishing class size of a {p}'-element"), offending.is_empty())],
        offending,
    ))
}

/// A group together with its exact table and vanishing classes.
#[derive(Clone, Debug)]
pub struct GroupAnalysis {
    pub group: GroupTable,
    pub table: CharacterTable,
    pub vanishing: VanishingReport,
}

impl GroupAnalysis {
    pub fn new(group: GroupTable) -> Result<Self> {
        let table = character_table(&group)?;
        Ok(Self::from_parts(group, table))
    }

    pub fn from_parts(group: GroupTable, table: CharacterTable) -> Self {
        let vanishing = vanishing_classes(&table);
        Self { group, table, vanishing }
    }

    pub fn profile(&self) -> VanishingProfile {
        VanishingProfile::new(&self.table, &self.vanishing)
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }
}

pub fn check_theorem_a(analysis: &GroupAnalysis, p: u64) -> Result<TheoremReport> {
    let (clauses, details) = theorem_a_hypothesis(&analysis.profile(), p)?;
    let soluble = is_soluble(&analysis.group);
    Ok(TheoremReport::new(analysis.name(), TheoremId::A, Some(p), clauses, "G is soluble", soluble, details))
}

pub fn check_corollary(analysis: &GroupAnalysis) -> TheoremReport {
    let (clauses, details) = corollary_hypothesis(&analysis.profile());
    let soluble = is_soluble(&analysis.group);
    TheoremReport::new(analysis.name(), TheoremId::Corollary, None, clauses, "G is soluble", soluble, details)
}

pub fn check_theorem_b(analysis: &GroupAnalysis) -> TheoremReport {
    let (clauses, details) = theorem_b_hypothesis(&analysis.profile());
    let supersoluble = is_supersoluble(&analysis.group);
    TheoremReport::new(analysis.name(), TheoremId::B, None, clauses, "G is supersoluble", supersoluble, details)
}

pub fn check_theorem_c(analysis: &GroupAnalysis, p: u64) -> Result<TheoremReport> {
    let (clauses, mut details) = theorem_c_hypothesis(&analysis.profile(), p)?;
    let complement = has_normal_p_complement(&analysis.group, p)?;
    if let Some(k) = &complement {
        details.push(Detail::NormalComplement { order: k.order() });
    }
    Ok(TheoremReport::new(
        analysis.name(),
        TheoremId::C,
        Some(p),
        clauses,
        &format!("G has a normal {p}-complement"),
        complement.is_some(),
        details,
    ))
}

/// Corollary, B, then A and C for every prime divisor of `|G|` in ascending order.
pub fn check_all(analysis: &GroupAnalysis) -> Result<Vec<TheoremReport>> {
    let mut reports = vec![check_corollary(analysis), check_theorem_b(analysis)];
    let primes = prime_divisors(analysis.group.order() as u64);
    for &p in &primes {
        reports.push(check_theorem_a(analysis, p)?);
    }
    for &p in &primes {
        reports.push(check_theorem_c(analysis, p)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::{generate_group, Permutation};

    fn analysis(texts: &[&str], degree: usize) -> GroupAnalysis {
        let gens: Vec<_> = texts.iter().map(|t| Permutation::parse(t, degree).unwrap()).collect();
        GroupAnalysis::new(generate_group(&gens, 10_000).unwrap()).unwrap()
    }

    fn sym3() -> GroupAnalysis {
        analysis(&["(1,2)", "(1,2,3)"], 3)
    }
    fn f20() -> GroupAnalysis {
        analysis(&["(1,2,3,4,5)", "(2,3,5,4)"], 5)
    }

    #[test]
    fn theorem_a_examples() {
        let r = check_theorem_a(&f20(), 2).unwrap();
        assert!(r.hypothesis_holds && r.conclusion_holds && r.consistent);

        let alt5 = analysis(&["(1,2,3,4,5)", "(1,2,3)"], 5);
        let r = check_theorem_a(&alt5, 2).unwrap();
        assert!(!r.hypothesis_holds && !r.conclusion_holds && r.consistent);
        assert!(r.offending_sizes().contains(&20));

        let r = check_theorem_a(&sym3(), 3).unwrap();
        assert!(!r.hypothesis_holds);
        assert!(!r.clauses[1].holds);
        assert!(r.details.contains(&Detail::PrimeDividesPMinusOne { q: 2, prime: 3 }));
        assert!(check_theorem_a(&sym3(), 4).is_err());
    }

    #[test]
    fn corollary_examples() {
        let r = check_corollary(&sym3());
        assert!(r.hypothesis_holds && r.conclusion_holds);
        let q8 = analysis(&["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"], 8);
        assert_eq!(q8.vanishing.vanishing_class_sizes, vec![2, 2, 2]);
        assert!(check_corollary(&q8).hypothesis_holds);
        let alt5 = analysis(&["(1,2,3,4,5)", "(1,2,3)"], 5);
        let r = check_corollary(&alt5);
        assert!(!r.hypothesis_holds);
        assert_eq!(r.offending_sizes(), vec![12, 20, 12]);
    }

    #[test]
    fn theorem_b_examples() {
        let r = check_theorem_b(&f20());
        assert!(r.hypothesis_holds && r.conclusion_holds);
        let sl23 = analysis(&["(1,4,7)(2,8,5)", "(1,6,2,3)(4,7,8,5)"], 8);
        let r = check_theorem_b(&sl23);
        assert!(!r.hypothesis_holds && !r.conclusion_holds && r.consistent);
        assert!(r.offending_sizes().contains(&4));
        let alt4 = analysis(&["(1,2,3)", "(2,3,4)"], 4);
        let r = check_theorem_b(&alt4);
        assert!(!r.hypothesis_holds && !r.conclusion_holds);
    }

    #[test]
    fn theorem_c_examples() {
        let r = check_theorem_c(&sym3(), 2).unwrap();
        assert!(r.hypothesis_holds && r.conclusion_holds);
        assert!(r.details.contains(&Detail::NormalComplement { order: 3 }));
        let r = check_theorem_c(&sym3(), 3).unwrap();
        assert!(!r.hypothesis_holds && !r.conclusion_holds && r.consistent);
        assert_eq!(r.offending_sizes(), vec![3]);
        let r = check_theorem_c(&f20(), 5).unwrap();
        assert!(!r.hypothesis_holds && !r.conclusion_holds);
    }

    #[test]
    fn false_hypotheses_carry_details() {
        for a in [sym3(), f20(), analysis(&["(1,2,3,4,5)", "(1,2)"], 5)] {
            for r in check_all(&a).unwrap() {
                assert!(r.consistent);
                assert!(r.hypothesis_holds || !r.details.is_empty(), "{r:?}");
            }
        }
    }

    #[test]
    fn corollary_matches_theorem_a_at_two() {
        for a in [sym3(), f20(), analysis(&["(1,2,3,4)", "(1,2)"], 4)] {
            let profile = a.profile();
            let (a_clauses, _) = theorem_a_hypothesis(&profile, 2).unwrap();
            assert!(a_clauses[1].holds);
            assert_eq!(check_corollary(&a).hypothesis_holds, check_theorem_a(&a, 2).unwrap().hypothesis_holds);
        }
    }

    #[test]
    fn hypotheses_depend_only_on_vanishing_sizes() {
        // D8 and Q8: same order, same vanishing sizes, different element orders
        let d8 = analysis(&["(1,2,3,4)", "(1,3)"], 4);
        let q8 = analysis(&["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"], 8);
        assert_eq!(d8.vanishing.vanishing_class_sizes, q8.vanishing.vanishing_class_sizes);
        assert_ne!(d8.profile(), q8.profile());
        let verdicts = |a: &GroupAnalysis| {
            check_all(a).unwrap().iter().map(|r| (r.theorem, r.prime, r.hypothesis_holds)).collect::<Vec<_>>()
        };
        assert_eq!(verdicts(&d8), verdicts(&q8));
    }
}
