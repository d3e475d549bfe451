//! Statistics and transforms of a single matrix.
//!
//! ```text
//! cargo run --example matrix_basics
//! ```

use fishburn::FishburnMatrix;

fn print_grid(label: &str, a: &FishburnMatrix) {
    println!("{label}:");
    for row in a.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  {}", cells.join(" "));
    }
}

fn main() {
    let a: FishburnMatrix = "1,0,1,0;0,2,0,3;0,0,1,4;0,0,0,2".parse().unwrap();
    print_grid("matrix", &a);
    println!("dimension        {}", a.dim());
    println!("weight           {}", a.weight());
    println!("min row index    {}", a.min_row_index());
    println!("last col value   {}", a.last_col_value());
    println!("row sums         {:?}", a.row_sums());
    println!("trace            {}", a.trace());
    println!("blocks           {}", a.blocks());
    println!("positive entries {}", a.positive_entries());
    println!("excess           {}", a.excess());
    println!("row-sum poly     {}", a.row_sum_polynomial());
    println!("last-column poly {}", a.last_column_polynomial());
    println!(
        "binary {}  diagonal {}  positive-diagonal {}  bidiagonal {}",
        a.is_binary(),
        a.is_diagonal(),
        a.is_positive_diagonal(),
        a.is_bidiagonal()
    );

    print_grid("flip (antidiagonal reflection)", &a.flip());

    let b: FishburnMatrix = "1,1;0,1".parse().unwrap();
    let c: FishburnMatrix = "1,0;0,2".parse().unwrap();
    let s = b.matrix_sum(&c).unwrap();
    println!("sum: {b} + {c} = {s} (weight {})", s.weight());
}
