use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groupcore::perm::{lcm, Permutation};

/// A fully enumerated permutation group.
///
/// Elements are listed breadth-first from the identity, multiplying on the
/// right by the generators in the order given, so index 0 is always the
/// identity and indices are reproducible across runs.
#[derive(Clone)]
pub struct GroupTable {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
}

/// Enumerates the closure of `generators` under composition.
pub fn generate_group(generators: &[Permutation], cap: usize) -> Result<GroupTable> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let degree = first.degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
    }
    let identity = Permutation::identity(degree)?;
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut head = 0;
    while head < elements.len() {
        for g in generators {
            let next = elements[head].compose(g);
            if !index.contains_key(&next) {
                if elements.len() == cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        head += 1;
    }
    let inverses = elements.iter().map(|x| index[&x.inverse()]).collect();
    let orders = elements.iter().map(Permutation::order).collect();
    let generator_indices = generators.iter().map(|g| index[g]).collect();
    Ok(GroupTable {
        name: String::new(),
        degree,
        generators: generators.to_vec(),
        generator_indices,
        elements,
        index,
        inverses,
        orders,
    })
}

impl GroupTable {
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Index of `element(a)·element(b)`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Index of `g⁻¹·x·g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.index[&self.elements[x].conjugate_by(&self.elements[g])]
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i]
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
    }
}

/// Least common multiple of all element orders.
pub fn exponent(group: &GroupTable) -> usize {
    group.orders.iter().copied().fold(1, lcm)
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perms(texts: &[&str], degree: usize) -> Vec<Permutation> {
        texts.iter().map(|t| Permutation::parse(t, degree).unwrap()).collect()
    }

    /// Closure oracle: repeatedly multiply every known pair until nothing new appears.
    fn brute_closure(gens: &[Permutation]) -> usize {
        let mut set: HashSet<Permutation> = gens.iter().cloned().collect();
        loop {
            let current: Vec<_> = set.iter().cloned().collect();
            let before = set.len();
            for a in &current {
                for b in &current {
                    set.insert(a.compose(b));
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    #[test]
    fn orders_of_small_groups() {
        let s3 = perms(&["(1,2,3)", "(1,2)"], 3);
        assert_eq!(generate_group(&s3, 1000).unwrap().order(), 6);

        let f20 = perms(&["(1,2,3,4,5)", "(2,3,5,4)"], 5);
        assert_eq!(brute_closure(&f20), 20);
        assert_eq!(generate_group(&f20, 1000).unwrap().order(), 20);
        // (2,3,5,4) conjugates the 5-cycle to its square
        assert_eq!(f20[0].conjugate_by(&f20[1]), f20[0].pow(2));

        let a5 = perms(&["(1,2,3,4,5)", "(1,2,3)"], 5);
        assert_eq!(brute_closure(&a5), 60);
        assert_eq!(generate_group(&a5, 1000).unwrap().order(), 60);
    }

    #[test]
    fn closure_invariants() {
        let g = generate_group(&perms(&["(1,2,3,4)", "(1,2)"], 4), 1000).unwrap();
        assert!(g.element(0).is_identity());
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..g.order() {
                let _ = g.mul(a, b);
            }
        }
    }

    #[test]
    fn ordering_is_breadth_first() {
        let g = generate_group(&perms(&["(1,2,3)", "(1,2)"], 3), 10).unwrap();
        let shown: Vec<_> = g.elements().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["()", "(1,2,3)", "(1,2)", "(1,3,2)", "(2,3)", "(1,3)"]);
    }

    #[test]
    fn cap_and_degree_errors() {
        let a5 = perms(&["(1,2,3,4,5)", "(1,2,3)"], 5);
        assert!(matches!(generate_group(&a5, 59), Err(Error::OrderCapExceeded { cap: 59 })));
        assert!(generate_group(&a5, 60).is_ok());
        let mixed = vec![Permutation::parse("(1,2)", 2).unwrap(), Permutation::parse("(1,2)", 3).unwrap()];
        assert!(matches!(generate_group(&mixed, 10), Err(Error::DegreeMismatch { expected: 2, found: 3 })));
        assert!(matches!(generate_group(&[], 10), Err(Error::NoGenerators)));
    }

    #[test]
    fn exponents() {
        let s3 = generate_group(&perms(&["(1,2,3)", "(1,2)"], 3), 100).unwrap();
        assert_eq!(exponent(&s3), 6);
        let q8 = generate_group(&perms(&["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"], 8), 100).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(exponent(&q8), 4);
        let a5 = generate_group(&perms(&["(1,2,3,4,5)", "(1,2,3)"], 5), 100).unwrap();
        assert_eq!(exponent(&a5), 30);
    }
}
