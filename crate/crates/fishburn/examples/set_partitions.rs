//! Bidiagonal matrices and order-consecutive set partitions.
//!
//! A partition of `[n]` is order-consecutive when its blocks can be ordered
//! so that every prefix union is an interval. Written as `1..n` with one
//! parenthesis pair per block, such a partition scans to a `k x k`
//! bidiagonal matrix of weight `n`, and the matrix scans back.
//!
//! ```text
//! cargo run --example set_partitions
//! ```

use fishburn::subclasses::{
    all_set_partitions, count_bidiagonal, count_bidiagonal_terms, matrix_to_partition,
    paren_to_blocks, partition_to_matrix, OCPartition,
};

fn main() {
    let p: OCPartition = "{1,2,3},{4,9},{5},{6,7},{8}".parse().unwrap();
    println!("partition       {p}");
    let b = partition_to_matrix(&p);
    println!("matrix          {b}");
    let rep = matrix_to_partition(&b).unwrap();
    println!("representation  {rep}");
    println!("blocks again    {}", paren_to_blocks(&rep));

    println!(
        "\nnot order-consecutive: {{1,3}},{{2,4}} -> {:?}",
        "{1,3},{2,4}"
            .parse::<OCPartition>()
            .err()
            .map(|e| e.to_string())
    );

    println!("\norder-consecutive partitions of [n], by block count:");
    for n in 1..=6usize {
        let mut by_blocks = vec![0u64; n + 1];
        for q in all_set_partitions(n) {
            if q.is_order_consecutive() {
                by_blocks[q.block_count()] += 1;
            }
        }
        let formula: Vec<u64> = (1..=n).map(|k| count_bidiagonal(n, k)).collect();
        println!(
            "  n={n}: brute force {:?}, formula {:?}, total {}",
            &by_blocks[1..],
            formula,
            formula.iter().sum::<u64>()
        );
    }

    println!("\nformula terms for n=9, k=3 (by zeros among the scanned entries):");
    println!("  {:?}", count_bidiagonal_terms(9, 3));
}
