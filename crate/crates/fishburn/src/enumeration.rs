//! Exhaustive generation and verification at desk scale.
//!
//! Everything in this crate can be checked by brute force for small weights,
//! and this module does exactly that:
//!
//! - [`all_ascent_sequences`] streams the ascent sequences of length `n` in
//!   lexicographic order; [`all_matrices`] maps them through the bijection;
//!   [`all_matrices_direct`] regenerates the matrices from scratch (every
//!   upper-triangular grid of every dimension, filtered for validity) as an
//!   independent cross-check; [`fishburn_count`] counts either family.
//! - [`statistic`] evaluates any of the registered named statistics, and
//!   [`distribution`] tabulates one over all sequences of a given length as
//!   a [`Histogram`]; [`equidistribution_check`] compares two tables.
//! - [`theorem_suite`] runs every identity, equivalence, involution, and
//!   counting claim the crate implements and returns one [`CheckReport`]
//!   per claim.
//! - [`conjecture_report`] tabulates the one open comparison (zeros versus
//!   the length of the initial strictly increasing prefix) without
//!   asserting it.
//! - [`flip_transport`] and [`sum_transport`] move the antidiagonal
//!   reflection and entrywise addition of matrices over to sequences; no
//!   closed sequence-level description is claimed for either.

use crate::bijection::{add, from_sequence, remove, to_sequence};
use crate::matrices::FishburnMatrix;
use crate::sequences::{AscentSequence, IntSequence, StatPolynomial};
use crate::subclasses::{
    all_set_partitions, bidiagonal_sequence_predicate, binary_sequence_predicate, count_bidiagonal,
    excess_pairs, matrix_to_partition, paren_to_blocks, partition_to_matrix, SetPartition,
};
use std::collections::BTreeMap;
use std::fmt;

/// Errors from the statistic registry and the transported operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    /// The statistic name is not registered.
    UnknownStatistic { name: String },
    /// Sum transport requires the two matrices to share a dimension.
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::UnknownStatistic { name } => {
                write!(
                    f,
                    "unknown statistic {name:?}; known: {}",
                    statistic_names().join(", ")
                )
            }
            EnumerationError::DimensionMismatch { left, right } => {
                write!(f, "matrix dimensions differ: {left} vs {right}")
            }
        }
    }
}

impl std::error::Error for EnumerationError {}

/// Lexicographic stream over the ascent sequences of a fixed length.
pub struct AscentSequenceIter {
    n: usize,
    entries: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for AscentSequenceIter {
    type Item = AscentSequence;

    fn next(&mut self) -> Option<AscentSequence> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.emit());
        }
        // Odometer step: bump the rightmost entry with headroom, reset the
        // tail to zeros. The bound at a position depends only on the prefix.
        for p in (1..self.n).rev() {
            let bound = 1 + self.entries[..p].windows(2).filter(|w| w[0] < w[1]).count();
            if self.entries[p] < bound {
                self.entries[p] += 1;
                for q in p + 1..self.n {
                    self.entries[q] = 0;
                }
                return Some(self.emit());
            }
        }
        self.done = true;
        None
    }
}

impl AscentSequenceIter {
    fn emit(&self) -> AscentSequence {
        AscentSequence::from_entries(self.entries.clone())
            .expect("generator stays within the ascent bound")
    }
}

/// All ascent sequences of length `n`, in lexicographic order.
pub fn all_ascent_sequences(n: usize) -> AscentSequenceIter {
    assert!(n >= 1, "length must be at least 1");
    AscentSequenceIter {
        n,
        entries: vec![0; n],
        started: false,
        done: false,
    }
}

/// All matrices of weight `n`, in the order induced by their sequences.
pub fn all_matrices(n: usize) -> impl Iterator<Item = FishburnMatrix> {
    all_ascent_sequences(n).map(|x| from_sequence(&x))
}

/// Number of ascent sequences of length `n` (equivalently, matrices of
/// weight `n`): the Fishburn numbers, OEIS A022493.
pub fn fishburn_count(n: usize) -> u64 {
    all_ascent_sequences(n).count() as u64
}

/// Independent matrix generator: enumerates every upper-triangular grid of
/// every dimension `d <= n` with entry sum `n` and keeps the valid ones.
/// Shares no code with the bijection, so multiset agreement with
/// [`all_matrices`] is a genuine cross-check. Exponential in `n`; intended
/// for `n` up to about 8.
pub fn all_matrices_direct(n: usize) -> Vec<FishburnMatrix> {
    assert!(n >= 1, "weight must be at least 1");
    let mut out = Vec::new();
    for d in 1..=n {
        let mut grid = vec![vec![0usize; d]; d];
        let mut col_positive = vec![false; d];
        fill(&mut grid, d, 0, 0, n, false, &mut col_positive, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    grid: &mut Vec<Vec<usize>>,
    d: usize,
    row: usize,
    col: usize,
    remaining: usize,
    row_positive: bool,
    col_positive: &mut Vec<bool>,
    out: &mut Vec<FishburnMatrix>,
) {
    if col == d {
        if !row_positive {
            return;
        }
        let next = row + 1;
        if next == d {
            if remaining == 0 {
                out.push(FishburnMatrix::from_grid(grid.clone()));
            }
            return;
        }
        // Every later row still needs at least one unit of weight.
        if remaining < d - next {
            return;
        }
        fill(grid, d, next, next, remaining, false, col_positive, out);
        return;
    }
    for v in 0..=remaining {
        grid[row][col] = v;
        let was = col_positive[col];
        if v > 0 {
            col_positive[col] = true;
        }
        // The diagonal cell is the last contributor to its column.
        if row != col || col_positive[col] {
            fill(
                grid,
                d,
                row,
                col + 1,
                remaining - v,
                row_positive || v > 0,
                col_positive,
                out,
            );
        }
        col_positive[col] = was;
        grid[row][col] = 0;
    }
}

/// Deterministic parallel enumeration: branches on the second entry (the
/// only choice point at depth two), enumerates each branch on its own
/// thread, and concatenates in entry order. Output is identical to the
/// sequential stream regardless of scheduling; `jobs` beyond 2 gains
/// nothing because there are only two branches.
pub fn all_ascent_sequences_partitioned(n: usize, jobs: usize) -> Vec<AscentSequence> {
    if jobs <= 1 || n < 2 {
        return all_ascent_sequences(n).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = [0usize, 1usize]
            .iter()
            .map(|&second| {
                scope.spawn(move || {
                    let mut prefix = vec![0, second];
                    let mut out = Vec::new();
                    complete_prefix(n, &mut prefix, &mut out);
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("enumeration thread panicked"))
            .collect()
    })
}

fn complete_prefix(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<AscentSequence>) {
    if prefix.len() == n {
        out.push(
            AscentSequence::from_entries(prefix.clone())
                .expect("generator stays within the ascent bound"),
        );
        return;
    }
    let bound = 1 + prefix.windows(2).filter(|w| w[0] < w[1]).count();
    for v in 0..=bound {
        prefix.push(v);
        complete_prefix(n, prefix, out);
        prefix.pop();
    }
}

/// Counts by statistic value.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Histogram {
    bins: BTreeMap<usize, u64>,
}

impl Histogram {
    pub fn new() -> Self {
        Histogram::default()
    }

    pub fn record(&mut self, value: usize) {
        *self.bins.entry(value).or_insert(0) += 1;
    }

    pub fn bins(&self) -> &BTreeMap<usize, u64> {
        &self.bins
    }

    pub fn count(&self, value: usize) -> u64 {
        self.bins.get(&value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.bins.values().sum()
    }
}

impl fmt::Display for Histogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bins.iter().map(|(v, c)| format!("{v}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Outcome of one exhaustive check: pass exactly when no counterexample was
/// found. At most a handful of counterexamples are retained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    /// Largest weight the check covered.
    pub n_max: usize,
    /// How many objects (or object pairs) were examined.
    pub objects: u64,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(id: &str, n_max: usize) -> Self {
        CheckReport {
            id: id.to_string(),
            n_max,
            objects: 0,
            failures: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 8 {
            self.failures.push(msg);
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            write!(
                f,
                "PASS {} (n <= {}, {} objects)",
                self.id, self.n_max, self.objects
            )
        } else {
            write!(
                f,
                "FAIL {} (n <= {}): {}",
                self.id, self.n_max, self.failures[0]
            )
        }
    }
}

/// Entries that equal the ascent count of the prefix ending at them; these
/// are exactly the build steps that land on the matrix diagonal, so their
/// number equals the trace.
fn saturated_count(x: &IntSequence) -> usize {
    let e = x.entries();
    let mut ascents = 0;
    let mut count = 0;
    for i in 0..e.len() {
        if i > 0 && e[i - 1] < e[i] {
            ascents += 1;
        }
        if e[i] == ascents {
            count += 1;
        }
    }
    count
}

/// Length of the last run whose first entry equals the ascent count there
/// (the run that last grew the bottom-right diagonal entry). The initial
/// 0-run always qualifies.
fn last_saturated_run_length(x: &IntSequence) -> usize {
    let mut best = 0;
    for run in x.runs() {
        let ascents = x
            .ascents_in_prefix(run.start)
            .expect("run start is in range");
        if run.value == ascents {
            best = run.length;
        }
    }
    best
}

type StatFn = fn(&AscentSequence) -> usize;

/// Registered statistics, alphabetically. Matrix-side statistics are pulled
/// back along the bijection so that every entry is a function on sequences.
const STATISTICS: &[(&str, StatFn)] = &[
    ("asc", |x| x.ascents()),
    ("blocks", |x| from_sequence(x).blocks()),
    ("comp", |x| x.components()),
    ("comp_hat", |x| x.modified().components()),
    ("dim", |x| from_sequence(x).dim()),
    ("excess", |x| from_sequence(x).excess()),
    ("first_increasing_prefix", |x| x.increasing_prefix_length()),
    ("first_run", |x| x.first_run_length()),
    ("index", |x| from_sequence(x).min_row_index()),
    ("last", |x| x.last_entry()),
    ("last_diag_run", |x| last_saturated_run_length(x)),
    ("last_run", |x| x.last_run_length()),
    ("positive_entries", |x| from_sequence(x).positive_entries()),
    ("rmax", |x| x.rmax()),
    ("rmax_hat", |x| x.modified().rmax()),
    ("row1_last_positive", |x| {
        from_sequence(x).first_row_last_positive()
    }),
    ("trace", |x| from_sequence(x).trace()),
    ("zeros", |x| x.zeros()),
];

/// Names of all registered statistics, alphabetically.
pub fn statistic_names() -> Vec<&'static str> {
    STATISTICS.iter().map(|(name, _)| *name).collect()
}

/// Evaluates a registered statistic on one sequence.
pub fn statistic(name: &str, x: &AscentSequence) -> Result<usize, EnumerationError> {
    STATISTICS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f(x))
        .ok_or_else(|| EnumerationError::UnknownStatistic {
            name: name.to_string(),
        })
}

/// Distribution of a registered statistic over all sequences of length `n`.
pub fn distribution(name: &str, n: usize) -> Result<Histogram, EnumerationError> {
    let f = STATISTICS
        .iter()
        .find(|(s, _)| *s == name)
        .map(|(_, f)| *f)
        .ok_or_else(|| EnumerationError::UnknownStatistic {
            name: name.to_string(),
        })?;
    let mut hist = Histogram::new();
    for x in all_ascent_sequences(n) {
        hist.record(f(&x));
    }
    Ok(hist)
}

/// Compares the distributions of two statistics at one length.
pub fn equidistribution_check(
    stat_a: &str,
    stat_b: &str,
    n: usize,
) -> Result<CheckReport, EnumerationError> {
    let a = distribution(stat_a, n)?;
    let b = distribution(stat_b, n)?;
    let mut report = CheckReport::new(&format!("equidistribution({stat_a},{stat_b})"), n);
    report.objects = a.total() + b.total();
    if a != b {
        report.fail(format!("at n={n}: {stat_a} gives {a}, {stat_b} gives {b}"));
    }
    Ok(report)
}

/// Exhaustively checks a scalar identity between a sequence statistic and a
/// matrix statistic across the bijection.
pub fn scalar_identity_report(
    id: &str,
    n_max: usize,
    seq_side: impl Fn(&AscentSequence) -> usize,
    mat_side: impl Fn(&FishburnMatrix) -> usize,
) -> CheckReport {
    let mut report = CheckReport::new(id, n_max);
    for n in 1..=n_max {
        for x in all_ascent_sequences(n) {
            let a = from_sequence(&x);
            report.objects += 1;
            let (s, m) = (seq_side(&x), mat_side(&a));
            if s != m {
                report.fail(format!("x={x}: sequence side {s}, matrix side {m}"));
            }
        }
    }
    report
}

/// Exhaustively checks a polynomial identity across the bijection.
pub fn polynomial_identity_report(
    id: &str,
    n_max: usize,
    seq_side: impl Fn(&AscentSequence) -> StatPolynomial,
    mat_side: impl Fn(&FishburnMatrix) -> StatPolynomial,
) -> CheckReport {
    let mut report = CheckReport::new(id, n_max);
    for n in 1..=n_max {
        for x in all_ascent_sequences(n) {
            let a = from_sequence(&x);
            report.objects += 1;
            let (s, m) = (seq_side(&x), mat_side(&a));
            if s != m {
                report.fail(format!("x={x}: sequence side {s}, matrix side {m}"));
            }
        }
    }
    report
}

/// Exhaustively checks that a sequence predicate and a matrix predicate
/// agree across the bijection.
pub fn predicate_identity_report(
    id: &str,
    n_max: usize,
    seq_side: impl Fn(&AscentSequence) -> bool,
    mat_side: impl Fn(&FishburnMatrix) -> bool,
) -> CheckReport {
    let mut report = CheckReport::new(id, n_max);
    for n in 1..=n_max {
        for x in all_ascent_sequences(n) {
            let a = from_sequence(&x);
            report.objects += 1;
            let (s, m) = (seq_side(&x), mat_side(&a));
            if s != m {
                report.fail(format!("x={x}: sequence side {s}, matrix side {m}"));
            }
        }
    }
    report
}

fn bijection_round_trip_report(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("bijection_round_trip", n_max);
    for n in 1..=n_max {
        let mut matrices = Vec::new();
        for x in all_ascent_sequences(n) {
            let a = from_sequence(&x);
            report.objects += 1;
            if to_sequence(&a) != x {
                report.fail(format!("decode(encode({x})) differs"));
            }
            if a.weight() != n {
                report.fail(format!("x={x}: weight {} instead of {n}", a.weight()));
            }
            if a.dim() != x.ascents() + 1 {
                report.fail(format!("x={x}: dimension is not ascents + 1"));
            }
            if a.min_row_index() != x.last_entry() + 1 {
                report.fail(format!("x={x}: min row index is not last entry + 1"));
            }
            matrices.push(a);
        }
        let count = matrices.len();
        matrices.sort();
        matrices.dedup();
        if matrices.len() != count {
            report.fail(format!("n={n}: matrix images collide"));
        }
    }
    report
}

fn add_remove_round_trip_report(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("add_remove_round_trip", n_max);
    for n in 1..=n_max {
        for b in all_matrices(n) {
            for label in 0..=b.dim() {
                report.objects += 1;
                let grown = add(&b, label).expect("label in range");
                match remove(&grown) {
                    Ok(r) => {
                        if r.matrix != b || r.label != label {
                            report.fail(format!(
                                "remove(add(B,{label})) differs for B={b} (weight {n})"
                            ));
                        }
                    }
                    Err(e) => report.fail(format!("remove failed after add: {e}")),
                }
            }
            if n >= 2 {
                let r = remove(&b).expect("weight at least 2");
                let back = add(&r.matrix, r.label).expect("label in range");
                if back != b {
                    report.fail(format!("add(remove(B)) differs for B={b}"));
                }
            }
        }
    }
    report
}

/// The three removal guards, as worded rule by rule, are mutually exclusive
/// and exhaustive, and the rule that fires is the one whose guard holds.
fn removal_rule_totality_report(n_max: usize) -> CheckReport {
    use crate::bijection::RemovalRule;
    let mut report = CheckReport::new("removal_rule_totality", n_max);
    for n in 1..=n_max {
        for a in all_matrices(n) {
            report.objects += 1;
            let d = a.dim();
            let idx = a.min_row_index();
            let val = a.last_col_value();
            let other_positive = (0..d - 1).any(|j| a.rows()[idx - 1][j] > 0);
            let g1 = val > 1 || (val == 1 && idx < d && other_positive);
            let g2 = val == 1 && idx == d;
            let g3 = val == 1 && idx < d && !other_positive;
            let holds = [g1, g2, g3].iter().filter(|&&g| g).count();
            if holds != 1 {
                report.fail(format!("A={a}: {holds} removal guards hold"));
            }
            if n >= 2 {
                let fired = remove(&a).expect("weight at least 2").rule;
                let expected = if g2 {
                    RemovalRule::Rem2
                } else if g3 {
                    RemovalRule::Rem3
                } else {
                    RemovalRule::Rem1
                };
                if fired != expected {
                    report.fail(format!("A={a}: fired {fired}, guard says {expected}"));
                }
            }
        }
    }
    report
}

fn matrix_oracle_report(n_max: usize) -> CheckReport {
    let cap = n_max.min(7);
    let mut report = CheckReport::new("matrix_oracle_agreement", cap);
    for n in 1..=cap {
        let mut through_bijection: Vec<FishburnMatrix> = all_matrices(n).collect();
        let mut direct = all_matrices_direct(n);
        report.objects += direct.len() as u64;
        through_bijection.sort();
        direct.sort();
        if through_bijection != direct {
            report.fail(format!(
                "n={n}: bijection yields {} matrices, direct enumeration {}",
                through_bijection.len(),
                direct.len()
            ));
        }
    }
    report
}

fn row_sum_counts_report(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("row_sum_counts", n_max);
    for n in 1..=n_max {
        for x in all_ascent_sequences(n) {
            let a = from_sequence(&x);
            let hat = x.modified();
            report.objects += 1;
            for k in 1..=a.dim() {
                let row = a.row_sum(k).expect("k in range");
                let count = hat.entries().iter().filter(|&&v| v == k - 1).count();
                if row != count {
                    report.fail(format!(
                        "x={x}: row {k} sums to {row}, modified sequence holds {count} copies of {}",
                        k - 1
                    ));
                }
            }
        }
    }
    report
}

fn zeros_rmax_equidistribution_report(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("zeros_rmax_equidistribution", n_max);
    for n in 1..=n_max {
        let zeros = distribution("zeros", n).expect("registered");
        let rmax_hat = distribution("rmax_hat", n).expect("registered");
        report.objects += zeros.total();
        if zeros != rmax_hat {
            report.fail(format!("n={n}: zeros {zeros} vs rmax_hat {rmax_hat}"));
        }
    }
    report
}

fn run_swap_report(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("run_swap_involution", n_max);
    for n in 1..=n_max {
        for x in all_ascent_sequences(n) {
            report.objects += 1;
            let y = x.run_swap();
            if y.run_swap() != x {
                report.fail(format!("run_swap is not an involution at {x}"));
            }
            if y.first_run_length() != x.last_run_length()
                || y.last_run_length() != x.first_run_length()
            {
                report.fail(format!("run_swap does not exchange run lengths at {x}"));
            }
        }
    }
    report
}

fn run_equidistribution_report(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("run_statistics_equidistribution", n_max);
    for n in 1..=n_max {
        let first = distribution("first_run", n).expect("registered");
        let last = distribution("last_run", n).expect("registered");
        let diag = distribution("last_diag_run", n).expect("registered");
        report.objects += first.total();
        if first != last || first != diag {
            report.fail(format!(
                "n={n}: first_run {first}, last_run {last}, last_diag_run {diag}"
            ));
        }
    }
    report
}

fn partition_bijection_report(n_max: usize) -> CheckReport {
    let cap = n_max.min(9);
    let mut report = CheckReport::new("bidiagonal_partition_bijection", cap);
    for n in 1..=cap {
        let mut images: Vec<SetPartition> = Vec::new();
        for b in all_matrices(n).filter(|m| m.is_bidiagonal()) {
            report.objects += 1;
            let rep = match matrix_to_partition(&b) {
                Ok(rep) => rep,
                Err(e) => {
                    report.fail(format!("B={b}: {e}"));
                    continue;
                }
            };
            let oc = paren_to_blocks(&rep);
            if oc.block_count() != b.dim() || oc.n() != n {
                report.fail(format!("B={b}: partition shape mismatch"));
            }
            if partition_to_matrix(&oc) != b {
                report.fail(format!("B={b}: partition does not rebuild the matrix"));
            }
            images.push(oc.partition().clone());
        }
        let produced = images.len();
        images.sort();
        images.dedup();
        if images.len() != produced {
            report.fail(format!("n={n}: two matrices map to one partition"));
        }
        let mut order_consecutive: Vec<SetPartition> = all_set_partitions(n)
            .into_iter()
            .filter(|p| p.is_order_consecutive())
            .collect();
        order_consecutive.sort();
        if images != order_consecutive {
            report.fail(format!(
                "n={n}: image has {} partitions, order-consecutive family has {}",
                images.len(),
                order_consecutive.len()
            ));
        }
    }
    report
}

fn bidiagonal_count_report(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("bidiagonal_count_formula", n_max);
    for n in 1..=n_max {
        let mut by_dim: BTreeMap<usize, u64> = BTreeMap::new();
        for b in all_matrices(n).filter(|m| m.is_bidiagonal()) {
            *by_dim.entry(b.dim()).or_insert(0) += 1;
            report.objects += 1;
        }
        for k in 1..=n {
            let formula = count_bidiagonal(n, k);
            let enumerated = by_dim.get(&k).copied().unwrap_or(0);
            if formula != enumerated {
                report.fail(format!(
                    "n={n}, k={k}: formula {formula}, enumeration {enumerated}"
                ));
            }
        }
        if n <= 8 {
            let mut oc_by_blocks: BTreeMap<usize, u64> = BTreeMap::new();
            for p in all_set_partitions(n) {
                if p.is_order_consecutive() {
                    *oc_by_blocks.entry(p.block_count()).or_insert(0) += 1;
                }
            }
            for k in 1..=n {
                let formula = count_bidiagonal(n, k);
                let partitions = oc_by_blocks.get(&k).copied().unwrap_or(0);
                if formula != partitions {
                    report.fail(format!(
                        "n={n}, k={k}: formula {formula}, partition count {partitions}"
                    ));
                }
            }
        }
    }
    report
}

/// Runs every check up to the given weight and returns the reports in a
/// fixed order. All of them pass; a failure report carries its first
/// counterexamples.
pub fn theorem_suite(n_max: usize) -> Vec<CheckReport> {
    assert!(n_max >= 1, "n_max must be at least 1");
    vec![
        bijection_round_trip_report(n_max),
        add_remove_round_trip_report(n_max),
        removal_rule_totality_report(n_max),
        matrix_oracle_report(n_max),
        row_sum_counts_report(n_max),
        scalar_identity_report(
            "zeros_vs_first_row",
            n_max,
            |x| x.zeros(),
            |a| a.row_sum(1).expect("dimension at least 1"),
        ),
        scalar_identity_report(
            "last_vs_index",
            n_max,
            |x| x.last_entry(),
            |a| a.min_row_index() - 1,
        ),
        scalar_identity_report(
            "ascents_vs_dimension",
            n_max,
            |x| x.ascents(),
            |a| a.dim() - 1,
        ),
        scalar_identity_report(
            "rmax_vs_last_colsum",
            n_max,
            |x| x.modified().rmax(),
            |a| a.col_sum(a.dim()).expect("dimension in range"),
        ),
        scalar_identity_report(
            "components_vs_blocks",
            n_max,
            |x| x.modified().components(),
            |a| a.blocks(),
        ),
        polynomial_identity_report(
            "entry_poly_vs_row_sums",
            n_max,
            |x| x.modified().entry_polynomial(),
            |a| a.row_sum_polynomial(),
        ),
        polynomial_identity_report(
            "rmax_poly_vs_last_column",
            n_max,
            |x| x.modified().rmax_polynomial(),
            |a| a.last_column_polynomial(),
        ),
        zeros_rmax_equidistribution_report(n_max),
        scalar_identity_report(
            "positive_entries_vs_adjacent",
            n_max,
            |x| x.len() - x.equal_adjacent_pairs(),
            |a| a.positive_entries(),
        ),
        scalar_identity_report(
            "trace_identity",
            n_max,
            |x| saturated_count(x),
            |a| a.trace(),
        ),
        scalar_identity_report(
            "first_run_vs_corner",
            n_max,
            |x| x.first_run_length(),
            |a| a.entry(1, 1).expect("in range"),
        ),
        scalar_identity_report(
            "last_run_vs_value",
            n_max,
            |x| x.last_run_length(),
            |a| a.last_col_value(),
        ),
        scalar_identity_report(
            "diag_run_vs_last_corner",
            n_max,
            |x| last_saturated_run_length(x),
            |a| a.entry(a.dim(), a.dim()).expect("in range"),
        ),
        run_swap_report(n_max),
        run_equidistribution_report(n_max),
        predicate_identity_report(
            "binary_vs_distinct_adjacent",
            n_max,
            binary_sequence_predicate,
            |a| a.is_binary(),
        ),
        scalar_identity_report("excess_vs_equal_adjacent", n_max, excess_pairs, |a| {
            a.excess()
        }),
        predicate_identity_report(
            "positive_diagonal_vs_self_modified",
            n_max,
            |x| x.is_self_modified(),
            |a| a.is_positive_diagonal(),
        ),
        predicate_identity_report(
            "bidiagonal_vs_ascent_bound",
            n_max,
            bidiagonal_sequence_predicate,
            |a| a.is_bidiagonal(),
        ),
        partition_bijection_report(n_max),
        bidiagonal_count_report(n_max),
    ]
}

/// One row of the conjecture table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: usize,
    pub matches: bool,
}

/// Per-length comparison of the zeros distribution with the distribution of
/// the longest strictly increasing prefix. Reports what it sees; it does
/// not assert that the two always agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

/// Compares `zeros` with `first_increasing_prefix` for every length up to
/// `n_max`. The increasing-prefix reading of the statistic is the maximal
/// `k` with `x_1 < x_2 < ... < x_k`.
pub fn conjecture_report(n_max: usize) -> ConjectureReport {
    assert!(n_max >= 1, "n_max must be at least 1");
    let rows = (1..=n_max)
        .map(|n| {
            let zeros = distribution("zeros", n).expect("registered");
            let prefix = distribution("first_increasing_prefix", n).expect("registered");
            ConjectureRow {
                n,
                matches: zeros == prefix,
            }
        })
        .collect();
    ConjectureReport { rows }
}

/// The sequence whose matrix is the antidiagonal reflection of the matrix
/// of `x`. An involution that preserves the ascent count.
pub fn flip_transport(x: &AscentSequence) -> AscentSequence {
    to_sequence(&from_sequence(x).flip())
}

/// The sequence of the entrywise sum of the two matrices; defined when the
/// matrices share a dimension (equivalently, the sequences share an ascent
/// count). Commutative, with weight the sum of the input weights.
pub fn sum_transport(
    x: &AscentSequence,
    y: &AscentSequence,
) -> Result<AscentSequence, EnumerationError> {
    let a = from_sequence(x);
    let b = from_sequence(y);
    if a.dim() != b.dim() {
        return Err(EnumerationError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let sum = a.matrix_sum(&b).expect("dimensions agree");
    Ok(to_sequence(&sum))
}
