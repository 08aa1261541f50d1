//! Stretch target: the table of M12 (order 95040) has no 2-defect-zero character.

use std::time::Instant;

use vanishkit::chartab::character_table;
use vanishkit::toolkit::stretch_catalog;
use vanishkit::vanish::defect_zero_characters;

fn main() -> vanishkit::Result<()> {
    let def = &stretch_catalog()[0];
    let start = Instant::now();
    let table = character_table(&def.build(100_000)?)?;
    println!("{}: {} classes, degrees {:?}", def.name, table.len(), table.degrees());
    for q in [2, 3] {
        println!("q={q}: {} defect-zero characters", defect_zero_characters(&table, q)?.len());
    }
    println!("elapsed {:?}", start.elapsed());
    Ok(())
}
