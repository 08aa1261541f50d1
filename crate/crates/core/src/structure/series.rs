use std::collections::HashSet;

use crate::arith::{is_prime, is_prime_power, p_part, prime_divisors, require_prime};
use crate::error::Result;
use crate::groupcore::{conjugacy_classes, GroupTable};
use crate::structure::subgroup::{generated_subgroup, join, normal_closure, Subgroup};

/// A descending chain of subgroups from the whole group to the trivial one.
#[derive(Clone, Debug)]
pub struct NormalSeries {
    pub chain: Vec<Subgroup>,
    /// `|chain[i]| / |chain[i+1]|`.
    pub factor_orders: Vec<usize>,
}

impl NormalSeries {
    fn from_chain(chain: Vec<Subgroup>) -> Self {
        let factor_orders = chain.windows(2).map(|w| w[0].order() / w[1].order()).collect();
        Self { chain, factor_orders }
    }

    pub fn orders(&self) -> Vec<usize> {
        self.chain.iter().map(Subgroup::order).collect()
    }
}

/// Commutator subgroup of `h`.
pub fn derived_subgroup(group: &GroupTable, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let mut commutators = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            // [a,b] = a⁻¹b⁻¹ab
            let c = group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b));
            if c != 0 {
                commutators.push(c);
            }
        }
    }
    normal_closure(group, &commutators, gens)
}

/// `G ⊵ G′ ⊵ G″ ⊵ …` until the terms stabilise. The last term is trivial
/// exactly when the group is soluble.
pub fn derived_series(group: &GroupTable) -> NormalSeries {
    let mut chain = vec![Subgroup::whole(group)];
    loop {
        let last = chain.last().expect("nonempty");
        let next = derived_subgroup(group, last);
        if next.order() == last.order() {
            break;
        }
        chain.push(next);
    }
    NormalSeries::from_chain(chain)
}

pub fn is_soluble(group: &GroupTable) -> bool {
    derived_series(group).chain.last().is_some_and(Subgroup::is_trivial)
}

/// Every normal subgroup, in ascending order of size.
///
/// Each normal subgroup is the join of the normal closures of the classes it
/// contains, so closing the class closures under joins finds all of them.
pub fn normal_subgroups(group: &GroupTable) -> Vec<Subgroup> {
    let classes = conjugacy_classes(group);
    let conj = group.generator_indices();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut found = vec![Subgroup::trivial()];
    seen.insert(vec![0]);
    for &rep in &classes.representative_indices()[1..] {
        let n = normal_closure(group, &[rep], conj);
        if seen.insert(n.element_indices().to_vec()) {
            found.push(n);
        }
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            if found[i].is_subset_of(&found[j]) || found[j].is_subset_of(&found[i]) {
                continue;
            }
            let n = join(group, &found[i], &found[j]);
            if seen.insert(n.element_indices().to_vec()) {
                found.push(n);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.element_indices().cmp(b.element_indices())));
    found
}

/// Maximal chain of normal subgroups from `top` down to `bottom` within the
/// given lattice, choosing the largest (then least) candidate at each step.
fn maximal_chain(lattice: &[Subgroup], top: &Subgroup, bottom: &Subgroup) -> Vec<Subgroup> {
    let mut chain = vec![top.clone()];
    let mut current = top.clone();
    while current != *bottom {
        let below: Vec<&Subgroup> = lattice
            .iter()
            .filter(|n| n.order() < current.order() && bottom.is_subset_of(n) && n.is_subset_of(&current))
            .collect();
        let next = below
            .iter()
            .filter(|n| !below.iter().any(|m| m.order() > n.order() && n.is_subset_of(m)))
            .max_by(|a, b| a.order().cmp(&b.order()).then_with(|| b.element_indices().cmp(a.element_indices())))
            .map(|n| (*n).clone())
            .unwrap_or_else(|| bottom.clone());
        chain.push(next.clone());
        current = next;
    }
    chain
}

/// A chief series: every factor is a minimal normal subgroup of the corresponding quotient.
pub fn chief_series(group: &GroupTable) -> NormalSeries {
    let lattice = normal_subgroups(group);
    NormalSeries::from_chain(maximal_chain(&lattice, &Subgroup::whole(group), &Subgroup::trivial()))
}

/// Orders of the chief factors of `G/n`.
pub fn chief_factor_orders_above(group: &GroupTable, lattice: &[Subgroup], n: &Subgroup) -> Vec<usize> {
    let chain = maximal_chain(lattice, &Subgroup::whole(group), n);
    chain.windows(2).map(|w| w[0].order() / w[1].order()).collect()
}

/// Supersoluble exactly when every chief factor has prime order.
pub fn is_supersoluble(group: &GroupTable) -> bool {
    chief_series(group).factor_orders.iter().all(|&f| is_prime(f as u64))
}

pub fn minimal_normal_subgroups(group: &GroupTable) -> Vec<Subgroup> {
    let classes = conjugacy_classes(group);
    let conj = group.generator_indices();
    let mut closures: Vec<Subgroup> = Vec::new();
    for &rep in &classes.representative_indices()[1..] {
        let n = normal_closure(group, &[rep], conj);
        if !closures.contains(&n) {
            closures.push(n);
        }
    }
    let mut minimal: Vec<Subgroup> = closures
        .iter()
        .filter(|n| !closures.iter().any(|m| m.order() < n.order() && m.is_subset_of(n)))
        .cloned()
        .collect();
    minimal.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.element_indices().cmp(b.element_indices())));
    minimal
}

pub fn center(group: &GroupTable) -> Subgroup {
    let gens = group.generator_indices();
    let central: Vec<usize> =
        (0..group.order()).filter(|&x| gens.iter().all(|&g| group.mul(x, g) == group.mul(g, x))).collect();
    subgroup_from_elements(group, &central)
}

/// Nilpotent exactly when each Sylow subgroup is normal, i.e. when the
/// `p`-elements number exactly `|G|_p` for every prime `p`.
pub fn is_nilpotent(group: &GroupTable) -> bool {
    let n = group.order() as u64;
    prime_divisors(n).into_iter().all(|p| {
        let count = (0..group.order()).filter(|&x| is_prime_power_or_one(group.element_order(x) as u64, p)).count();
        count as u64 == p_part(n, p)
    })
}

fn is_prime_power_or_one(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Largest normal `p`-subgroup.
pub fn o_p(lattice: &[Subgroup], p: u64) -> Subgroup {
    lattice
        .iter()
        .filter(|n| is_prime_power_or_one(n.order() as u64, p))
        .max_by_key(|n| n.order())
        .cloned()
        .unwrap_or_else(Subgroup::trivial)
}

/// Product of the `O_p(G)` over the primes dividing `|G|`.
pub fn fitting_subgroup(group: &GroupTable) -> Subgroup {
    let lattice = normal_subgroups(group);
    prime_divisors(group.order() as u64)
        .into_iter()
        .map(|p| o_p(&lattice, p))
        .fold(Subgroup::trivial(), |acc, op| join(group, &acc, &op))
}

/// The subgroup of `p′`-elements when they form one. A group whose order is
/// prime to `p` is its own normal `p`-complement.
pub fn has_normal_p_complement(group: &GroupTable, p: u64) -> Result<Option<Subgroup>> {
    require_prime(p)?;
    let n = group.order() as u64;
    if !n.is_multiple_of(p) {
        return Ok(Some(Subgroup::whole(group)));
    }
    let p_prime: Vec<usize> =
        (0..group.order()).filter(|&x| !(group.element_order(x) as u64).is_multiple_of(p)).collect();
    if p_prime.len() as u64 != n / p_part(n, p) {
        return Ok(None);
    }
    let h = subgroup_from_elements(group, &p_prime);
    Ok((h.order() == p_prime.len()).then_some(h))
}

/// Subgroup generated by a set of elements, with a greedily chosen small generating set.
pub fn subgroup_from_elements(group: &GroupTable, elements: &[usize]) -> Subgroup {
    let mut current = Subgroup::trivial();
    for &x in elements {
        if !current.contains(x) {
            let mut gens = current.generators().to_vec();
            gens.push(x);
            current = generated_subgroup(group, &gens);
        }
    }
    current
}

/// Elementary abelian `p`-group test, returning `p`.
pub fn elementary_abelian_prime(group: &GroupTable, h: &Subgroup) -> Option<u64> {
    let order = h.order() as u64;
    if !is_prime_power(order) || !h.is_abelian(group) {
        return None;
    }
    let p = prime_divisors(order)[0];
    h.element_indices().iter().all(|&x| x == 0 || group.element_order(x) as u64 == p).then_some(p)
}
