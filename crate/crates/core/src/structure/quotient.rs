use crate::error::{Error, Result};
use crate::groupcore::{generate_group, GroupTable, Permutation, MAX_DEGREE};
use crate::structure::subgroup::Subgroup;

/// `G/N` realized as the permutation action of `G` on the cosets of `N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: GroupTable,
    /// Index in `group` of the image of each element of the parent.
    pub image: Vec<usize>,
    /// Coset number of each element of the parent.
    pub coset_of: Vec<usize>,
}

/// Builds `G/N` for a normal subgroup `n` of index at most [`MAX_DEGREE`].
pub fn quotient(group: &GroupTable, n: &Subgroup) -> Result<Quotient> {
    let index = group.order() / n.order();
    if index > MAX_DEGREE {
        return Err(Error::QuotientTooLarge { index });
    }
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps = Vec::with_capacity(index);
    for x in 0..group.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &m in n.element_indices() {
            coset_of[group.mul(x, m)] = reps.len();
        }
        reps.push(x);
    }
    let action = |x: usize| -> Result<Permutation> {
        let images: Vec<usize> = reps.iter().map(|&r| coset_of[group.mul(r, x)] + 1).collect();
        Permutation::from_images(&images)
    };
    let gens = group.generator_indices().iter().map(|&g| action(g)).collect::<Result<Vec<_>>>()?;
    let name = format!("{}/N{}", group.name(), n.order());
    let q = generate_group(&gens, group.order())?.named(name);
    let image = (0..group.order())
        .map(|x| Ok(q.index_of(&action(x)?).expect("image lies in the quotient")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Quotient { group: q, image, coset_of })
}
