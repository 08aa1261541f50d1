use crate::groupcore::{ConjugacyClassSet, GroupTable};

/// Class multiplication coefficients `a[i][j][k]`: the number of pairs
/// `(x, y)` with `x` in class `i`, `y` in class `j` and `x·y` equal to the
/// fixed representative of class `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    classes: usize,
    data: Vec<u64>,
}

impl StructureConstants {
    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.classes + j) * self.classes + k]
    }
}

pub fn class_structure_constants(group: &GroupTable, classes: &ConjugacyClassSet) -> StructureConstants {
    let k = classes.len();
    let mut data = vec![0u64; k * k * k];
    for (target, &rep) in classes.representative_indices().iter().enumerate() {
        let g = group.element(rep);
        for x in 0..group.order() {
            // y = x⁻¹·g, so that x·y = g
            let y = group.index_of(&group.element(group.inv(x)).compose(g)).expect("closed group");
            let (ci, cj) = (classes.class_of(x), classes.class_of(y));
            data[(ci * k + cj) * k + target] += 1;
        }
    }
    StructureConstants { classes: k, data }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::{conjugacy_classes, generate_group, Permutation};

    fn s3() -> GroupTable {
        let gens = [Permutation::parse("(1,2)", 3).unwrap(), Permutation::parse("(1,2,3)", 3).unwrap()];
        generate_group(&gens, 10).unwrap()
    }

    #[test]
    fn sym3_constants() {
        let g = s3();
        let c = conjugacy_classes(&g);
        // classes: identity, transpositions, 3-cycles
        assert_eq!(c.sizes(), &[1, 3, 2]);
        let a = class_structure_constants(&g, &c);
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(a.get(0, j, k), u64::from(j == k));
            }
        }
        assert_eq!(a.get(1, 1, 0), 3);
        assert_eq!(a.get(1, 1, 2), 3);
        assert_eq!(a.get(1, 1, 1), 0);
    }

    #[test]
    fn constants_count_every_factorisation() {
        // Σ_{i,j} a[i][j][k] = |G| for every k
        let gens = [Permutation::parse("(1,2,3,4)", 4).unwrap(), Permutation::parse("(1,2)", 4).unwrap()];
        let g = generate_group(&gens, 100).unwrap();
        let c = conjugacy_classes(&g);
        let a = class_structure_constants(&g, &c);
        for k in 0..c.len() {
            let total: u64 =
                (0..c.len()).flat_map(|i| (0..c.len()).map(move |j| (i, j))).map(|(i, j)| a.get(i, j, k)).sum();
            assert_eq!(total, 24);
        }
    }
}
