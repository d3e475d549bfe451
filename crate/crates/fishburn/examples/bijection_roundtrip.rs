//! A matrix encoded as a sequence and rebuilt, with each removal rule shown.
//!
//! ```text
//! cargo run --example bijection_roundtrip
//! ```

use fishburn::bijection::{from_sequence, remove, to_sequence};
use fishburn::FishburnMatrix;

fn main() {
    let a: FishburnMatrix = "1,0,1,0;0,2,0,3;0,0,1,4;0,0,0,2".parse().unwrap();
    println!("matrix   {a}");
    println!("weight   {}  dimension {}", a.weight(), a.dim());

    // Dismantle step by step; the labels, reversed, are the sequence tail.
    println!("\nremovals:");
    let mut current = a.clone();
    while current.weight() > 1 {
        let step = remove(&current).unwrap();
        println!("  {}  label {}  ->  {}", step.rule, step.label, step.matrix);
        current = step.matrix;
    }

    let x = to_sequence(&a);
    println!("\nsequence {x}");
    println!("ascents  {} (= dimension - 1)", x.ascents());
    println!("last     {} (= min row index - 1)", x.last_entry());

    let back = from_sequence(&x);
    println!("rebuilt  {back}");
    assert_eq!(back, a);
    println!("round trip ok");
}
