use crate::groupcore::group::GroupTable;
use crate::groupcore::perm::Permutation;

/// Conjugacy classes of an enumerated group.
///
/// Classes are ordered by the element index of their representative, which
/// is the least index in the class; the identity class is therefore class 0.
#[derive(Clone, Debug)]
pub struct ConjugacyClassSet {
    group_order: usize,
    representatives: Vec<Permutation>,
    rep_indices: Vec<usize>,
    sizes: Vec<usize>,
    centralizer_orders: Vec<usize>,
    element_orders: Vec<usize>,
    /// `power_map[i][k]` is the class of `rep_i^k` for `0 <= k < element_orders[i]`.
    power_map: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

pub fn conjugacy_classes(group: &GroupTable) -> ConjugacyClassSet {
    let n = group.order();
    let gens = group.generator_indices();
    let mut class_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = members.len();
        class_of[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            for &g in gens {
                let y = group.conj(x, g);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    orbit.push(y);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        members.push(orbit);
    }

    let rep_indices: Vec<usize> = members.iter().map(|m| m[0]).collect();
    let sizes: Vec<usize> = members.iter().map(Vec::len).collect();
    let element_orders: Vec<usize> = rep_indices.iter().map(|&r| group.element_order(r)).collect();
    let power_map = rep_indices
        .iter()
        .zip(&element_orders)
        .map(|(&r, &ord)| {
            let mut out = Vec::with_capacity(ord);
            let mut cur = 0;
            for _ in 0..ord {
                out.push(class_of[cur]);
                cur = group.mul(cur, r);
            }
            out
        })
        .collect();
    ConjugacyClassSet {
        group_order: n,
        representatives: rep_indices.iter().map(|&r| group.element(r).clone()).collect(),
        centralizer_orders: sizes.iter().map(|s| n / s).collect(),
        rep_indices,
        sizes,
        element_orders,
        power_map,
        class_of,
        members,
    }
}

impl ConjugacyClassSet {
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    /// Element index (in the parent group) of each representative.
    pub fn representative_indices(&self) -> &[usize] {
        &self.rep_indices
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn centralizer_orders(&self) -> &[usize] {
        &self.centralizer_orders
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    pub fn power_map(&self) -> &[Vec<usize>] {
        &self.power_map
    }

    /// Class of `rep_class^k`; negative exponents are allowed.
    pub fn power_class(&self, class: usize, k: i64) -> usize {
        let ord = self.element_orders[class] as i64;
        self.power_map[class][k.rem_euclid(ord) as usize]
    }

    /// Class containing the inverses of class `class`.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.power_class(class, -1)
    }

    /// Class index of each group element.
    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Sorted element indices of a class.
    pub fn members(&self, class: usize) -> &[usize] {
        &self.members[class]
    }

    /// Classes of size one.
    pub fn central_classes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.sizes[i] == 1).collect()
    }
}
