//! Compares the distribution of zeros with the distribution of the longest
//! strictly increasing prefix, weight by weight. A match is reported, not
//! asserted: this comparison is an open conjecture, and the prefix reading
//! of the statistic is itself one possible interpretation.
//!
//! ```text
//! cargo run --example conjecture_scan
//! ```

use fishburn::enumeration::{conjecture_report, distribution};

fn main() {
    for row in conjecture_report(8).rows {
        println!(
            "n={}: {}",
            row.n,
            if row.matches { "match" } else { "MISMATCH" }
        );
    }

    println!("\nthe two weight-5 tables side by side:");
    let zeros = distribution("zeros", 5).unwrap();
    let prefix = distribution("first_increasing_prefix", 5).unwrap();
    println!("  value  zeros  increasing-prefix");
    for (value, count) in zeros.bins() {
        println!("  {value}      {count}      {}", prefix.count(*value));
    }
}
