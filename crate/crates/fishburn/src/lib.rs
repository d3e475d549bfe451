//! Ascent sequences, Fishburn matrices, and the bijection between them.
//!
//! An *ascent sequence* starts with 0 and each later entry is at most one
//! more than the number of ascents before it. A *Fishburn matrix* of weight
//! `n` is a square upper-triangular matrix of non-negative integers summing
//! to `n` with no all-zero row or column. Both families are counted by the
//! Fishburn numbers (OEIS A022493: 1, 2, 5, 15, 53, 217, ...), and a
//! weight-preserving bijection connects them: a matrix is dismantled one
//! unit of weight at a time, and the removal labels, read in build order,
//! form an ascent sequence.
//!
//! What the crate provides, by module:
//!
//! - [`sequences`]: sequence types, validation, and statistics (ascents,
//!   zeros, runs, right-to-left maxima, components, the modification
//!   algorithm, the run-swap involution, value polynomials).
//! - [`matrices`]: the matrix type, validation, and statistics (row and
//!   column sums, trace, antidiagonal flip, diagonal blocks, entry counts,
//!   subclass predicates, entrywise sums).
//! - [`bijection`]: the removal and addition rules, the encoding in both
//!   directions, and step-by-step build traces.
//! - [`subclasses`]: diagonal matrices as compositions; sequence
//!   characterizations of binary, positive-diagonal, and bidiagonal
//!   matrices; the correspondence between bidiagonal matrices and
//!   order-consecutive set partitions, with its parenthesized text form and
//!   counting formula.
//! - [`enumeration`]: exhaustive generators for both families (plus an
//!   independent from-scratch matrix generator for cross-checking), named
//!   statistic distributions, equidistribution checks, a suite that
//!   verifies every identity the crate implements, and the transported
//!   flip and sum operations.
//! - [`cli`]: the `fishburn` binary (see `fishburn help`).
//!
//! Every claim is verified exhaustively at small weights by the test
//! suites; `cargo test --test acceptance -- --nocapture` prints the
//! one-line outcome of each headline check.
//!
//! # Runnable examples
//!
//! ```text
//! cargo run --example sequence_basics      statistics of one sequence
//! cargo run --example matrix_basics        statistics of one matrix
//! cargo run --example bijection_roundtrip  matrix <-> sequence, step rules
//! cargo run --example build_steps          trace of a build
//! cargo run --example enumerate_all        both families side by side
//! cargo run --example distributions        statistic tables, equidistribution
//! cargo run --example theorem_checks       the verification suite
//! cargo run --example set_partitions       bidiagonal <-> order-consecutive
//! cargo run --example open_questions       flip and sum transport tables
//! cargo run --example conjecture_scan      zeros vs increasing prefix
//! ```
//!
//! # Quick start
//!
//! ```
//! use fishburn::{AscentSequence, bijection};
//!
//! let x: AscentSequence = "0,1,0,1,3,1,1,2".parse().unwrap();
//! let a = bijection::from_sequence(&x);
//! assert_eq!(a.weight(), 8);
//! assert_eq!(a.dim(), x.ascents() + 1);
//! assert_eq!(bijection::to_sequence(&a), x);
//! ```

pub mod bijection;
pub mod cli;
pub mod enumeration;
pub mod matrices;
pub mod sequences;
pub mod subclasses;

pub use bijection::{AdditionRule, BuildStep, BuildTrace, RemovalResult, RemovalRule};
pub use enumeration::{CheckReport, ConjectureReport, Histogram};
pub use matrices::{FishburnMatrix, MatrixError};
pub use sequences::{
    AscentSequence, IntSequence, ModifiedAscentSequence, Run, SequenceError, StatPolynomial,
};
pub use subclasses::{Composition, OCPartition, ParenRep, ParenToken, SetPartition, SubclassError};
