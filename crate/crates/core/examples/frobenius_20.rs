//! The Frobenius group of order 20: every vanishing class has size 5, so
//! Theorems A (p = 2) and B apply, while the non-vanishing 5-class has size 4.

use vanishkit::theorems::{check_corollary, check_theorem_a, check_theorem_b, GroupAnalysis};
use vanishkit::toolkit::{find_builtin, render};

fn main() -> vanishkit::Result<()> {
    let group = find_builtin("C5xC4_semidirect").expect("catalog entry").build(100)?;
    let analysis = GroupAnalysis::new(group)?;
    let classes = analysis.table.classes();
    for c in 0..classes.len() {
        println!(
            "class {c}: order {}, size {}, vanishing {}",
            classes.element_orders()[c],
            classes.sizes()[c],
            analysis.vanishing.is_vanishing(c)
        );
    }
    for report in [check_theorem_a(&analysis, 2)?, check_corollary(&analysis), check_theorem_b(&analysis)] {
        println!();
        print!("{}", render::theorem(&report));
    }
    Ok(())
}
