//! Vanishing pairs for Alt(n), 7 <= n <= 14, with class-size checks.

use vanishkit::symchar::{verify_alternating_table, ALT_TABLE_MAX_N, ALT_TABLE_MIN_N};
use vanishkit::toolkit::render;

fn main() -> vanishkit::Result<()> {
    for n in ALT_TABLE_MIN_N..=ALT_TABLE_MAX_N {
        print!("{}", render::alt_table(&verify_alternating_table(n)?));
    }
    Ok(())
}
