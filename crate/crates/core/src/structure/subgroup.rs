use crate::groupcore::GroupTable;

/// A subgroup of an enumerated group, held as sorted element indices
/// together with a generating set. Equality compares elements only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl Subgroup {
    pub fn trivial() -> Self {
        Self { elements: vec![0], generators: Vec::new() }
    }

    pub fn whole(group: &GroupTable) -> Self {
        Self { elements: (0..group.order()).collect(), generators: group.generator_indices().to_vec() }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_indices(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.elements.iter().filter(|&&x| other.contains(x)).count()
    }

    /// Whether every generator commutes with every other.
    pub fn is_abelian(&self, group: &GroupTable) -> bool {
        let g = &self.generators;
        g.iter().enumerate().all(|(i, &a)| g[i + 1..].iter().all(|&b| group.mul(a, b) == group.mul(b, a)))
    }
}

/// Subgroup generated by the given element indices.
pub fn generated_subgroup(group: &GroupTable, generators: &[usize]) -> Subgroup {
    let generators: Vec<usize> = generators.iter().copied().filter(|&g| g != 0).collect();
    let mut member = vec![false; group.order()];
    member[0] = true;
    let mut elements = vec![0];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head];
        for &g in &generators {
            let y = group.mul(x, g);
            if !member[y] {
                member[y] = true;
                elements.push(y);
            }
        }
        head += 1;
    }
    elements.sort_unstable();
    Subgroup { elements, generators }
}

/// Smallest subgroup containing `seeds` and closed under conjugation by `conjugators`.
pub fn normal_closure(group: &GroupTable, seeds: &[usize], conjugators: &[usize]) -> Subgroup {
    let mut current = generated_subgroup(group, seeds);
    let mut i = 0;
    while i < current.generators.len() {
        let h = current.generators[i];
        for &c in conjugators {
            let y = group.conj(h, c);
            if !current.contains(y) {
                let mut gens = current.generators.clone();
                gens.push(y);
                current = generated_subgroup(group, &gens);
            }
        }
        i += 1;
    }
    current
}

/// Whether `h` is normalized by every generator of the group.
pub fn is_normal(group: &GroupTable, h: &Subgroup) -> bool {
    h.generators.iter().all(|&x| group.generator_indices().iter().all(|&g| h.contains(group.conj(x, g))))
}

/// Subgroup generated by two subgroups.
pub fn join(group: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let gens: Vec<usize> = a.generators.iter().chain(&b.generators).copied().collect();
    generated_subgroup(group, &gens)
}
