//! Runs the full verification suite at weight 6 and prints one line per
//! check. The same suite backs `fishburn check --theorems --n-max N`.
//!
//! ```text
//! cargo run --example theorem_checks
//! ```

use fishburn::enumeration::theorem_suite;

fn main() {
    let reports = theorem_suite(6);
    for report in &reports {
        println!("{report}");
    }
    let passed = reports.iter().filter(|r| r.pass()).count();
    println!("\n{passed}/{} checks pass", reports.len());
    std::process::exit(if passed == reports.len() { 0 } else { 1 });
}
