//! Statistics of a single ascent sequence.
//!
//! ```text
//! cargo run --example sequence_basics
//! ```

use fishburn::AscentSequence;

fn main() {
    let x: AscentSequence = "0,1,0,1,3,1,1,2".parse().unwrap();
    println!("sequence        {x}");
    println!("length          {}", x.len());
    println!(
        "ascents         {} at positions {:?}",
        x.ascents(),
        x.ascent_positions()
    );
    println!("zeros           {}", x.zeros());
    println!("last entry      {}", x.last_entry());
    println!("rl-maxima       {}", x.rmax());
    println!("components      {}", x.components());

    let runs: Vec<String> = x
        .runs()
        .iter()
        .map(|r| format!("{}^{}", r.value, r.length))
        .collect();
    println!("runs            {}", runs.join(" "));

    let hat = x.modified();
    println!("modified        {hat}");
    println!("self-modified   {}", x.is_self_modified());
    println!("swap of runs    {}", x.run_swap());

    println!("entry poly      {}", x.entry_polynomial());
    println!("rl-max poly     {}", x.rmax_polynomial());

    let y: AscentSequence = "0,0,1".parse().unwrap();
    let sum = x.direct_sum(&y);
    println!("direct sum      {x} (+) {y} = {sum}");
    println!("sum components  {}", sum.components());
}
