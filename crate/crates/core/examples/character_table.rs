//! Prints the exact character table of a group given by generators.
//!
//! cargo run --example character_table -- 5 "(1,2,3,4,5)" "(1,2,3)"

use vanishkit::chartab::{character_table, check_table_invariants};
use vanishkit::groupcore::{generate_group, Permutation, DEFAULT_ORDER_CAP};

fn main() -> vanishkit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (degree, gens) = match args.split_first() {
        Some((d, rest)) if !rest.is_empty() => (d.parse().expect("degree"), rest.to_vec()),
        _ => (5, vec!["(1,2,3,4,5)".to_string(), "(1,2,3)".to_string()]),
    };
    let perms = gens.iter().map(|g| Permutation::parse(g, degree)).collect::<vanishkit::Result<Vec<_>>>()?;
    let group = generate_group(&perms, DEFAULT_ORDER_CAP)?;
    let table = character_table(&group)?;
    println!("order {}, {} classes, values in Z[z{}]", group.order(), table.len(), table.conductor());
    println!("class sizes: {:?}", table.classes().sizes());
    for r in 0..table.len() {
        let row: Vec<String> = table.row(r).iter().map(ToString::to_string).collect();
        println!("chi{r}: {}", row.join("  "));
    }
    println!("{:?}", check_table_invariants(&table));
    Ok(())
}
