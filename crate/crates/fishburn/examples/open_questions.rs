//! Tables for the two transported operations with no known sequence-level
//! description: the antidiagonal flip and the entrywise sum. The tables are
//! raw material for conjecturing; nothing is asserted about a closed form.
//!
//! ```text
//! cargo run --example open_questions
//! ```

use fishburn::enumeration::{all_ascent_sequences, flip_transport, sum_transport};

fn main() {
    println!("flip transport on weight 4 (fixed points marked):");
    for x in all_ascent_sequences(4) {
        let y = flip_transport(&x);
        let mark = if y == x { "  *" } else { "" };
        println!("  {x}  ->  {y}{mark}");
    }

    println!("\nsum transport on weight 2 x weight 3 (matching dimensions only):");
    let lefts: Vec<_> = all_ascent_sequences(2).collect();
    let rights: Vec<_> = all_ascent_sequences(3).collect();
    for x in &lefts {
        for y in &rights {
            if x.ascents() != y.ascents() {
                continue;
            }
            let z = sum_transport(x, y).unwrap();
            println!("  {x} + {y}  ->  {z}");
        }
    }
}
