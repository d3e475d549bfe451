//! Integer sequences, ascent sequences, and their statistics.
//!
//! An *ascent sequence* is a sequence of non-negative integers that starts
//! with 0 and in which every later entry is at most one more than the number
//! of ascents among the entries before it. This module provides:
//!
//! - [`IntSequence`]: a non-empty sequence of non-negative integers, with the
//!   statistics shared by all sequence families (ascents, zeros, runs,
//!   right-to-left maxima, components, direct sums, value polynomials).
//! - [`AscentSequence`]: a validated ascent sequence, plus the operations
//!   that only make sense there (the modification algorithm, the run swap
//!   involution).
//! - [`ModifiedAscentSequence`]: the output of the modification algorithm.
//!   It keeps the ascent positions of its source and has pairwise distinct
//!   ascent tops, but is generally not an ascent sequence itself.
//! - [`StatPolynomial`]: a coefficient vector indexed by exponent, used for
//!   the value-distribution polynomials here and the row-sum/last-column
//!   polynomials on matrices.
//!
//! Positions are 1-based everywhere in the public interface.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

/// Errors from sequence construction and validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceError {
    /// Sequences must contain at least one entry.
    Empty,
    /// An ascent sequence must start with 0.
    FirstEntryNonzero,
    /// Entry at `position` (1-based) exceeds 1 + the ascent count of its prefix.
    BoundViolation { position: usize },
    /// A 1-based position argument was outside `1..=len`.
    OutOfRange { position: usize, len: usize },
    /// Text input could not be parsed.
    Parse(String),
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::Empty => write!(f, "sequence must be non-empty"),
            SequenceError::FirstEntryNonzero => {
                write!(f, "an ascent sequence must start with 0")
            }
            SequenceError::BoundViolation { position } => write!(
                f,
                "entry at position {position} exceeds 1 + the ascent count of its prefix"
            ),
            SequenceError::OutOfRange { position, len } => {
                write!(f, "position {position} is out of range for length {len}")
            }
            SequenceError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for SequenceError {}

/// A maximal constant block inside a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    /// The repeated value.
    pub value: usize,
    /// Number of repetitions; at least 1.
    pub length: usize,
    /// 1-based position of the first entry of the run.
    pub start: usize,
}

/// A non-empty sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSequence {
    entries: Vec<usize>,
}

impl IntSequence {
    /// Wraps the entries; fails only on an empty vector.
    pub fn new(entries: Vec<usize>) -> Result<Self, SequenceError> {
        if entries.is_empty() {
            return Err(SequenceError::Empty);
        }
        Ok(IntSequence { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest entry.
    pub fn max_entry(&self) -> usize {
        *self.entries.iter().max().expect("sequence is non-empty")
    }

    /// Number of ascents in the prefix of length `k` (positions `i < k` with
    /// `x_i < x_{i+1}`), for `1 <= k <= len`.
    pub fn ascents_in_prefix(&self, k: usize) -> Result<usize, SequenceError> {
        if k == 0 || k > self.len() {
            return Err(SequenceError::OutOfRange {
                position: k,
                len: self.len(),
            });
        }
        Ok(self.entries[..k].windows(2).filter(|w| w[0] < w[1]).count())
    }

    /// Total number of ascents.
    pub fn ascents(&self) -> usize {
        self.entries.windows(2).filter(|w| w[0] < w[1]).count()
    }

    /// 1-based positions `i` with `x_i < x_{i+1}`, in increasing order.
    pub fn ascent_positions(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Values `x_{i+1}` over the ascent positions `i`, in position order.
    pub fn ascent_tops(&self) -> Vec<usize> {
        self.ascent_positions()
            .into_iter()
            .map(|i| self.entries[i])
            .collect()
    }

    /// Number of zero entries.
    pub fn zeros(&self) -> usize {
        self.entries.iter().filter(|&&v| v == 0).count()
    }

    /// The final entry.
    pub fn last_entry(&self) -> usize {
        *self.entries.last().expect("sequence is non-empty")
    }

    /// Number of right-to-left maxima: entries with no strictly larger entry
    /// to their right. Equal trailing entries each count.
    pub fn rmax(&self) -> usize {
        self.rl_maxima().len()
    }

    /// Values of the right-to-left maxima, in position order.
    fn rl_maxima(&self) -> Vec<usize> {
        let mut best: Option<usize> = None;
        let mut vals = Vec::new();
        for &v in self.entries.iter().rev() {
            if best.is_none_or(|b| v >= b) {
                vals.push(v);
            }
            best = Some(best.map_or(v, |b| b.max(v)));
        }
        vals.reverse();
        vals
    }

    /// The maximal run decomposition, in order.
    pub fn runs(&self) -> Vec<Run> {
        let mut runs: Vec<Run> = Vec::new();
        for (i, &v) in self.entries.iter().enumerate() {
            match runs.last_mut() {
                Some(run) if run.value == v => run.length += 1,
                _ => runs.push(Run {
                    value: v,
                    length: 1,
                    start: i + 1,
                }),
            }
        }
        runs
    }

    /// Length of the first run.
    pub fn first_run_length(&self) -> usize {
        let v = self.entries[0];
        self.entries.iter().take_while(|&&e| e == v).count()
    }

    /// Length of the final run.
    pub fn last_run_length(&self) -> usize {
        let v = self.last_entry();
        self.entries.iter().rev().take_while(|&&e| e == v).count()
    }

    /// Number of adjacent equal pairs `(x_i, x_{i+1})`.
    pub fn equal_adjacent_pairs(&self) -> usize {
        self.entries.windows(2).filter(|w| w[0] == w[1]).count()
    }

    /// Concatenates `self` with `other` shifted up by `1 + max(self)`.
    pub fn direct_sum(&self, other: &IntSequence) -> IntSequence {
        let shift = 1 + self.max_entry();
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|&v| v + shift));
        IntSequence { entries }
    }

    /// The maximal number of parts in a decomposition of `self` as an
    /// iterated direct sum of non-empty non-negative sequences.
    ///
    /// A decomposition point after position `l` exists exactly when every
    /// entry of the suffix exceeds every entry of the prefix, and such cuts
    /// are independent of each other, so the count is `1 +` the number of
    /// valid cut positions.
    pub fn components(&self) -> usize {
        let n = self.len();
        let mut suffix_min = vec![0usize; n];
        let mut m = usize::MAX;
        for i in (0..n).rev() {
            m = m.min(self.entries[i]);
            suffix_min[i] = m;
        }
        let mut cuts = 0;
        let mut prefix_max = 0usize;
        for (&before_cut, &after_min) in self.entries.iter().zip(suffix_min.iter().skip(1)) {
            prefix_max = prefix_max.max(before_cut);
            if after_min > prefix_max {
                cuts += 1;
            }
        }
        1 + cuts
    }

    /// Polynomial whose coefficient at exponent `e` counts the entries equal
    /// to `e`.
    pub fn entry_polynomial(&self) -> StatPolynomial {
        let mut coeffs = vec![0usize; self.max_entry() + 1];
        for &v in &self.entries {
            coeffs[v] += 1;
        }
        StatPolynomial::from_coeffs(coeffs)
    }

    /// Polynomial whose coefficient at exponent `e` counts the right-to-left
    /// maxima equal to `e`.
    pub fn rmax_polynomial(&self) -> StatPolynomial {
        let vals = self.rl_maxima();
        let max = vals.iter().copied().max().unwrap_or(0);
        let mut coeffs = vec![0usize; max + 1];
        for v in vals {
            coeffs[v] += 1;
        }
        StatPolynomial::from_coeffs(coeffs)
    }

    /// Length of the longest strictly increasing prefix `x_1 < x_2 < ...`.
    pub fn increasing_prefix_length(&self) -> usize {
        1 + self.entries.windows(2).take_while(|w| w[0] < w[1]).count()
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for IntSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(SequenceError::Empty);
        }
        let entries = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| SequenceError::Parse(format!("invalid entry {:?}", p.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        IntSequence::new(entries)
    }
}

/// A validated ascent sequence: starts with 0, and every entry is bounded by
/// 1 + the ascent count of the entries before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AscentSequence {
    seq: IntSequence,
}

impl AscentSequence {
    /// Checks the recursive bound; the entries are kept unchanged.
    pub fn validate(seq: IntSequence) -> Result<Self, SequenceError> {
        let entries = seq.entries();
        if entries[0] != 0 {
            return Err(SequenceError::FirstEntryNonzero);
        }
        let mut ascents = 0;
        for i in 1..entries.len() {
            if entries[i] > 1 + ascents {
                return Err(SequenceError::BoundViolation { position: i + 1 });
            }
            if entries[i] > entries[i - 1] {
                ascents += 1;
            }
        }
        Ok(AscentSequence { seq })
    }

    /// Builds and validates in one step.
    pub fn from_entries(entries: Vec<usize>) -> Result<Self, SequenceError> {
        AscentSequence::validate(IntSequence::new(entries)?)
    }

    pub fn as_int_sequence(&self) -> &IntSequence {
        &self.seq
    }

    pub fn into_int_sequence(self) -> IntSequence {
        self.seq
    }

    /// Runs the modification algorithm: for each ascent position `i` in
    /// increasing order, every earlier entry that is at least the ascent top
    /// `x_{i+1}` is bumped up by one. The result keeps the ascent positions
    /// of the source and has pairwise distinct ascent tops.
    pub fn modified(&self) -> ModifiedAscentSequence {
        let mut e = self.seq.entries.clone();
        for a in self.seq.ascent_positions() {
            // `a` is 1-based; the ascent top sits at 0-based index `a`.
            let top = e[a];
            for v in e.iter_mut().take(a.saturating_sub(1)) {
                if *v >= top {
                    *v += 1;
                }
            }
        }
        ModifiedAscentSequence {
            seq: IntSequence { entries: e },
        }
    }

    /// True when the modification algorithm leaves the sequence unchanged.
    pub fn is_self_modified(&self) -> bool {
        self.modified().entries() == self.seq.entries()
    }

    /// Swaps the lengths of the leading 0-run and the trailing run: writing
    /// the sequence as a 0-run of length `a`, a middle part, and a final run
    /// of length `b`, returns the sequence with those lengths exchanged.
    /// A sequence that is a single 0-run is fixed. This is an involution on
    /// ascent sequences of a given length.
    pub fn run_swap(&self) -> AscentSequence {
        let e = self.seq.entries();
        let n = e.len();
        let a = self.seq.first_run_length();
        if a == n {
            return self.clone();
        }
        let last = e[n - 1];
        let b = self.seq.last_run_length();
        let mut out = vec![0usize; b];
        out.extend_from_slice(&e[a..n - b]);
        out.extend(std::iter::repeat_n(last, a));
        AscentSequence::from_entries(out).expect("run swap stays within the ascent bound")
    }
}

impl Deref for AscentSequence {
    type Target = IntSequence;

    fn deref(&self) -> &IntSequence {
        &self.seq
    }
}

impl fmt::Display for AscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.seq.fmt(f)
    }
}

impl FromStr for AscentSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AscentSequence::validate(s.parse()?)
    }
}

/// The outcome of the modification algorithm. Not an ascent sequence in
/// general; it shares all [`IntSequence`] statistics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModifiedAscentSequence {
    seq: IntSequence,
}

impl ModifiedAscentSequence {
    pub fn as_int_sequence(&self) -> &IntSequence {
        &self.seq
    }
}

impl Deref for ModifiedAscentSequence {
    type Target = IntSequence;

    fn deref(&self) -> &IntSequence {
        &self.seq
    }
}

impl fmt::Display for ModifiedAscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.seq.fmt(f)
    }
}

/// A polynomial with non-negative integer coefficients, stored as the
/// coefficient at each exponent. Trailing zero coefficients are trimmed, so
/// equal polynomials compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StatPolynomial {
    coeffs: Vec<usize>,
}

impl StatPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<usize>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        StatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        StatPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients in ascending exponent order, without trailing zeros.
    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    /// The value at `q = 1`.
    pub fn coeff_sum(&self) -> usize {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for StatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for StatPolynomial {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .trim()
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| {
                    SequenceError::Parse(format!("invalid coefficient {:?}", p.trim()))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StatPolynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iseq(e: &[usize]) -> IntSequence {
        IntSequence::new(e.to_vec()).unwrap()
    }

    fn aseq(e: &[usize]) -> AscentSequence {
        AscentSequence::from_entries(e.to_vec()).unwrap()
    }

    #[test]
    fn validation_accepts_and_rejects() {
        assert!(AscentSequence::from_entries(vec![0, 1, 2]).is_ok());
        assert!(AscentSequence::from_entries(vec![0]).is_ok());
        assert_eq!(
            AscentSequence::from_entries(vec![0, 2]),
            Err(SequenceError::BoundViolation { position: 2 })
        );
        assert_eq!(
            AscentSequence::from_entries(vec![1]),
            Err(SequenceError::FirstEntryNonzero)
        );
        assert_eq!(
            AscentSequence::from_entries(vec![]),
            Err(SequenceError::Empty)
        );
        // Validation keeps the entries unchanged.
        assert_eq!(aseq(&[0, 1, 0, 1, 3]).entries(), &[0, 1, 0, 1, 3]);
    }

    #[test]
    fn ascent_counting() {
        let x = iseq(&[0, 1, 0, 1, 3, 1, 1, 2]);
        assert_eq!(x.ascents_in_prefix(8).unwrap(), 4);
        assert_eq!(x.ascent_positions(), vec![1, 3, 4, 7]);
        assert_eq!(iseq(&[0]).ascents_in_prefix(1).unwrap(), 0);
        assert_eq!(iseq(&[0, 0, 1, 1, 2]).ascents_in_prefix(5).unwrap(), 2);
        assert_eq!(iseq(&[0, 0, 0]).ascent_positions(), Vec::<usize>::new());
        assert_eq!(iseq(&[0, 1, 2]).ascent_positions(), vec![1, 2]);
        assert_eq!(
            x.ascents_in_prefix(9),
            Err(SequenceError::OutOfRange {
                position: 9,
                len: 8
            })
        );
        assert_eq!(
            x.ascents_in_prefix(0),
            Err(SequenceError::OutOfRange {
                position: 0,
                len: 8
            })
        );
    }

    #[test]
    fn modification_algorithm() {
        assert_eq!(
            aseq(&[0, 1, 0, 1, 3, 1, 1, 2]).modified().entries(),
            &[0, 3, 0, 1, 4, 1, 1, 2]
        );
        assert_eq!(aseq(&[0, 0, 0]).modified().entries(), &[0, 0, 0]);
        assert_eq!(aseq(&[0, 1, 0]).modified().entries(), &[0, 1, 0]);
    }

    #[test]
    fn self_modified() {
        assert!(!aseq(&[0, 1, 0, 1, 3, 1, 1, 2]).is_self_modified());
        assert!(aseq(&[0, 0, 0]).is_self_modified());
        assert!(aseq(&[0, 1, 1, 2, 0]).is_self_modified());
    }

    #[test]
    fn direct_sum_shifts_by_one_plus_max() {
        assert_eq!(
            iseq(&[3, 2, 0, 1, 2])
                .direct_sum(&iseq(&[0, 0, 1]))
                .entries(),
            &[3, 2, 0, 1, 2, 4, 4, 5]
        );
        assert_eq!(iseq(&[0]).direct_sum(&iseq(&[0])).entries(), &[0, 1]);
        assert_eq!(
            iseq(&[0, 1]).direct_sum(&iseq(&[0, 1, 0])).entries(),
            &[0, 1, 2, 3, 2]
        );
    }

    /// Independent oracle: try every cut position recursively and take the
    /// best split. Used to pin the expected component counts.
    fn components_oracle(e: &[usize]) -> usize {
        let mut best = 1;
        for l in 1..e.len() {
            let prefix_max = *e[..l].iter().max().unwrap();
            let shift = 1 + prefix_max;
            if e[l..].iter().all(|&v| v >= shift) {
                let tail: Vec<usize> = e[l..].iter().map(|&v| v - shift).collect();
                best = best.max(1 + components_oracle(&tail));
            }
        }
        best
    }

    #[test]
    fn components_match_recursive_oracle() {
        assert_eq!(components_oracle(&[0, 1, 2, 1]), 2);
        assert_eq!(iseq(&[0, 1, 2, 1]).components(), 2);
        assert_eq!(iseq(&[0, 0, 0]).components(), 1);
        // The worked direct-sum example splits one step further on the right:
        // its suffix (4,4,5) is itself a sum of two parts.
        assert_eq!(components_oracle(&[3, 2, 0, 1, 2, 4, 4, 5]), 3);
        assert_eq!(iseq(&[3, 2, 0, 1, 2, 4, 4, 5]).components(), 3);

        // Exhaustive small-alphabet agreement with the oracle.
        for len in 1..=5usize {
            let mut tuple = vec![0usize; len];
            loop {
                let s = IntSequence::new(tuple.clone()).unwrap();
                assert_eq!(
                    s.components(),
                    components_oracle(&tuple),
                    "components mismatch on {tuple:?}"
                );
                let mut i = 0;
                loop {
                    if i == len {
                        break;
                    }
                    if tuple[i] < 3 {
                        tuple[i] += 1;
                        break;
                    }
                    tuple[i] = 0;
                    i += 1;
                }
                if i == len {
                    break;
                }
            }
        }
    }

    #[test]
    fn scalar_statistics() {
        assert_eq!(iseq(&[0, 1, 0]).rmax(), 2);
        assert_eq!(iseq(&[0, 0, 0]).zeros(), 3);
        assert_eq!(iseq(&[0, 0, 0]).last_entry(), 0);
        // Right-to-left maxima of the worked modified sequence: the 4 and the
        // final 2; the trailing 1s sit below the 2.
        assert_eq!(iseq(&[0, 3, 0, 1, 4, 1, 1, 2]).rmax(), 2);
        // Ties count: every entry of a constant sequence is a maximum.
        assert_eq!(iseq(&[1, 1]).rmax(), 2);
    }

    #[test]
    fn run_decomposition() {
        let runs = iseq(&[0, 0, 1, 1, 1, 0]).runs();
        assert_eq!(
            runs,
            vec![
                Run {
                    value: 0,
                    length: 2,
                    start: 1
                },
                Run {
                    value: 1,
                    length: 3,
                    start: 3
                },
                Run {
                    value: 0,
                    length: 1,
                    start: 6
                },
            ]
        );
        assert_eq!(
            iseq(&[0]).runs(),
            vec![Run {
                value: 0,
                length: 1,
                start: 1
            }]
        );
        assert_eq!(iseq(&[0, 1, 0]).runs().len(), 3);
        assert_eq!(iseq(&[0, 0, 1]).first_run_length(), 2);
        assert_eq!(iseq(&[0, 0, 1]).last_run_length(), 1);
    }

    #[test]
    fn run_swap_examples() {
        assert_eq!(
            aseq(&[0, 0, 1, 2, 2]).run_swap().entries(),
            &[0, 0, 1, 2, 2]
        );
        assert_eq!(aseq(&[0, 0, 0]).run_swap().entries(), &[0, 0, 0]);
        assert_eq!(aseq(&[0, 0, 1]).run_swap().entries(), &[0, 1, 1]);
        assert_eq!(aseq(&[0, 1, 1]).run_swap().entries(), &[0, 0, 1]);
        assert_eq!(aseq(&[0, 1, 0, 0]).run_swap().entries(), &[0, 0, 1, 0]);
    }

    #[test]
    fn value_polynomials() {
        assert_eq!(iseq(&[0, 1, 0]).entry_polynomial().coeffs(), &[2, 1]);
        assert_eq!(iseq(&[0]).entry_polynomial().coeffs(), &[1]);
        assert_eq!(iseq(&[0, 1, 0]).rmax_polynomial().coeffs(), &[1, 1]);
        // q = 1 specializations.
        let x = iseq(&[0, 3, 0, 1, 4, 1, 1, 2]);
        assert_eq!(x.entry_polynomial().coeff_sum(), x.len());
        assert_eq!(x.rmax_polynomial().coeff_sum(), x.rmax());
    }

    #[test]
    fn increasing_prefix() {
        assert_eq!(iseq(&[0, 1, 2, 0]).increasing_prefix_length(), 3);
        assert_eq!(iseq(&[0, 0, 1]).increasing_prefix_length(), 1);
        assert_eq!(iseq(&[0, 1]).increasing_prefix_length(), 2);
    }

    #[test]
    fn polynomial_canonical_form() {
        assert_eq!(
            StatPolynomial::from_coeffs(vec![2, 1, 0, 0]),
            StatPolynomial::from_coeffs(vec![2, 1])
        );
        assert!(StatPolynomial::from_coeffs(vec![0, 0]).is_zero());
        assert_eq!(StatPolynomial::zero().to_string(), "0");
        assert_eq!(StatPolynomial::from_coeffs(vec![2, 1]).to_string(), "2,1");
        assert_eq!("2,1".parse::<StatPolynomial>().unwrap().coeffs(), &[2, 1]);
    }

    #[test]
    fn text_round_trip() {
        let x: IntSequence = "0,1,0".parse().unwrap();
        assert_eq!(x.entries(), &[0, 1, 0]);
        assert_eq!(x.to_string(), "0,1,0");
        assert!("".parse::<IntSequence>().is_err());
        assert!("0,a".parse::<IntSequence>().is_err());
        assert!("0,-1".parse::<IntSequence>().is_err());
        let a: AscentSequence = "0,1,2".parse().unwrap();
        assert_eq!(a.to_string(), "0,1,2");
        assert!("0,2".parse::<AscentSequence>().is_err());
    }
}
