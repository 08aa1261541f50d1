//! Every theorem checker over the built-in catalog.

use vanishkit::theorems::{scan_catalog, ScanOptions};
use vanishkit::toolkit::{builtin_catalog, render};

fn main() {
    let report = scan_catalog(&builtin_catalog(), ScanOptions::default());
    print!("{}", render::scan(&report));
    if report.inconsistent_count() > 0 {
        std::process::exit(3);
    }
}
