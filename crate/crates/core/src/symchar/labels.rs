use crate::chartab::CharacterTable;
use crate::symchar::mn::mn_value;
use crate::symchar::partition::{factorial, CycleType, Partition, MAX_N};

/// Partition labelling of each row of a computed table of `Sym(n)`, found by
/// comparing against Murnaghan–Nakayama values class by class.
///
/// `None` when the table is not that of the full symmetric group on its
/// points or some row matches no partition.
pub fn label_symmetric_rows(table: &CharacterTable) -> Option<Vec<Partition>> {
    let reps = table.classes().representatives();
    let n = reps.first()?.degree();
    if n > MAX_N || table.group_order() as u128 != factorial(n) || table.len() != Partition::all(n).len() {
        return None;
    }
    let types: Vec<CycleType> = reps.iter().map(|x| CycleType::new(x.cycle_type()).expect("valid")).collect();
    let candidates = Partition::all(n);
    let mut used = vec![false; candidates.len()];
    let mut labels = Vec::with_capacity(table.len());
    for r in 0..table.len() {
        let row: Vec<i64> = table.row(r).iter().map(|v| v.as_integer()).collect::<Option<_>>()?;
        let i = (0..candidates.len())
            .find(|&i| !used[i] && types.iter().zip(&row).all(|(t, &v)| mn_value(&candidates[i], t).ok() == Some(v)))?;
        used[i] = true;
        labels.push(candidates[i].clone());
    }
    Some(labels)
}
