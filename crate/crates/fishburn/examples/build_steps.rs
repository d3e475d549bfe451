//! The step-by-step construction of a matrix from its sequence.
//!
//! Each entry picks one of three addition rules: `Add1` bumps an entry of
//! the last column (entry at most its predecessor), `Add2` borders the
//! matrix with a fresh corner 1 (entry equal to 1 + the ascent count so
//! far), and `Add3` splices a new row and column into the middle (anything
//! strictly between).
//!
//! ```text
//! cargo run --example build_steps
//! ```

use fishburn::bijection::build_trace;
use fishburn::AscentSequence;

fn main() {
    let x: AscentSequence = "0,1,0,1,3,1,1,2".parse().unwrap();
    println!("sequence {x}\n");
    for (k, step) in build_trace(&x).steps.iter().enumerate() {
        let rule = step
            .rule
            .map(|r| r.to_string())
            .unwrap_or_else(|| "start".into());
        println!(
            "step {k:2}  entry {}  {rule:5}  {}",
            step.label, step.matrix
        );
    }
}
