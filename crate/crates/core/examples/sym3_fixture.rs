//! Sym(3): the transpositions form the only vanishing class, and Theorem C
//! at p = 2 finds the normal 2-complement.

use vanishkit::theorems::{check_theorem_c, GroupAnalysis};
use vanishkit::toolkit::find_builtin;

fn main() -> vanishkit::Result<()> {
    let def = find_builtin("Sym3").expect("catalog entry");
    let analysis = GroupAnalysis::new(def.build(100)?)?;
    println!("vanishing class sizes: {:?}", analysis.vanishing.vanishing_class_sizes);
    for p in [2, 3] {
        let report = check_theorem_c(&analysis, p)?;
        print!("{}", vanishkit::toolkit::render::theorem(&report));
    }
    Ok(())
}
