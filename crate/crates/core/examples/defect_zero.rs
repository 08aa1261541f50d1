//! Alt(5) and Alt(6) have defect-zero characters for every prime; Alt(7)
//! has none for 2 and 3.

use vanishkit::arith::prime_divisors;
use vanishkit::chartab::character_table;
use vanishkit::toolkit::find_builtin;
use vanishkit::vanish::{check_brauer_vanishing, defect_zero_characters, has_defect_zero_all_primes};

fn main() -> vanishkit::Result<()> {
    for name in ["Alt5", "Alt6", "Alt7"] {
        let table = character_table(&find_builtin(name).expect("catalog entry").build(10_000)?)?;
        println!("{name}: degrees {:?}", table.degrees());
        for q in prime_divisors(table.group_order() as u64) {
            let rows = defect_zero_characters(&table, q)?;
            let degrees: Vec<u64> = rows.iter().map(|&r| table.degrees()[r]).collect();
            println!(
                "  q={q}: defect-zero degrees {degrees:?}, Brauer vanishing {}",
                check_brauer_vanishing(&table, q)?
            );
        }
        println!("  defect zero for every prime: {}", has_defect_zero_all_primes(&table));
    }
    Ok(())
}
