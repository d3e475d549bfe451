//! Both families of weight 3 side by side, counts up to weight 8, and the
//! independent cross-check of the matrix counts.
//!
//! ```text
//! cargo run --example enumerate_all
//! ```

use fishburn::bijection::from_sequence;
use fishburn::enumeration::{all_ascent_sequences, all_matrices_direct, fishburn_count};

fn main() {
    println!("weight 3, sequence and matrix for each object:");
    for x in all_ascent_sequences(3) {
        println!("  {x}   <->   {}", from_sequence(&x));
    }

    println!("\ncounts (the Fishburn numbers):");
    for n in 1..=8 {
        println!("  n={n}: {}", fishburn_count(n));
    }

    println!("\nindependent regeneration of the matrices, for cross-checking:");
    for n in 1..=6 {
        println!(
            "  n={n}: {} matrices from scratch",
            all_matrices_direct(n).len()
        );
    }
}
