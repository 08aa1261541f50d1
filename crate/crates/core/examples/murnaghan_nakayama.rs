//! The character table of Sym(n) from the Murnaghan–Nakayama rule.

use vanishkit::symchar::{class_size, degree, mn_table};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let (rows, cols, values) = mn_table(n);
    print!("{:>14}", "");
    for c in &cols {
        print!("{:>12}", c.to_string());
    }
    println!();
    print!("{:>14}", "size");
    for c in &cols {
        print!("{:>12}", class_size(c));
    }
    println!();
    for (sigma, row) in rows.iter().zip(&values) {
        print!("{:>14}", sigma.to_string());
        for v in row {
            print!("{v:>12}");
        }
        println!("   (hook degree {})", degree(sigma));
    }
}
