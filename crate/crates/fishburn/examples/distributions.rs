//! Statistic distributions and the equidistribution facts between them.
//!
//! ```text
//! cargo run --example distributions
//! ```

use fishburn::enumeration::{distribution, equidistribution_check, statistic_names};

fn main() {
    println!("registered statistics: {}", statistic_names().join(", "));

    println!("\ndistribution of zeros over weight 5:");
    for (value, count) in distribution("zeros", 5).unwrap().bins() {
        println!("  {value}\t{count}");
    }

    println!("\nequidistributed pairs, checked exhaustively:");
    for (a, b) in [
        ("zeros", "rmax_hat"),
        ("zeros", "first_increasing_prefix"),
        ("first_run", "last_run"),
        ("first_run", "last_diag_run"),
    ] {
        for n in [6, 7] {
            let report = equidistribution_check(a, b, n).unwrap();
            println!("  {report}");
        }
    }

    println!("\na pair that is NOT equidistributed:");
    let report = equidistribution_check("zeros", "last", 3).unwrap();
    println!("  {report}");
}
