//! The weight-preserving bijection between matrices and ascent sequences.
//!
//! A matrix of weight `n` is taken apart one unit of weight at a time by
//! [`remove`], and rebuilt by [`add`]. Each removal records a label between
//! 0 and the dimension of the smaller matrix; reading the labels off in
//! build order yields exactly an ascent sequence, and every ascent sequence
//! arises this way ([`to_sequence`] / [`from_sequence`]).
//!
//! Removal picks one of three rules, keyed to the first positive entry of
//! the last column (its row `index` and value):
//!
//! - [`RemovalRule::Rem1`]: decrement that entry. Used when the value
//!   exceeds 1, or when it is a lone 1 off the corner whose row has another
//!   positive entry.
//! - [`RemovalRule::Rem2`]: the entry is a 1 in the bottom-right corner;
//!   drop the last row and column.
//! - [`RemovalRule::Rem3`]: the entry is a 1, alone in its row, above the
//!   corner; move the column segment above it into the last column, then
//!   delete its row and column.
//!
//! The addition rules invert them: [`AdditionRule::Add1`] bumps an entry of
//! the last column, [`AdditionRule::Add2`] appends a fresh row and column
//! with a 1 in the corner, and [`AdditionRule::Add3`] splices a new row and
//! column into the middle, splitting the last column.

use crate::matrices::FishburnMatrix;
use crate::sequences::AscentSequence;
use std::fmt;

/// Errors from the removal and addition operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectionError {
    /// Removal is undefined on the weight-1 matrix.
    WeightTooSmall,
    /// Addition labels must lie in `0..=dim`.
    LabelOutOfRange { label: usize, dim: usize },
}

impl fmt::Display for BijectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionError::WeightTooSmall => {
                write!(f, "removal is undefined on the weight-1 matrix")
            }
            BijectionError::LabelOutOfRange { label, dim } => {
                write!(f, "label {label} is out of range 0..={dim}")
            }
        }
    }
}

impl std::error::Error for BijectionError {}

/// Which removal rule fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalRule {
    Rem1,
    Rem2,
    Rem3,
}

impl fmt::Display for RemovalRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RemovalRule::Rem1 => write!(f, "Rem1"),
            RemovalRule::Rem2 => write!(f, "Rem2"),
            RemovalRule::Rem3 => write!(f, "Rem3"),
        }
    }
}

/// Which addition rule fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdditionRule {
    Add1,
    Add2,
    Add3,
}

impl fmt::Display for AdditionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdditionRule::Add1 => write!(f, "Add1"),
            AdditionRule::Add2 => write!(f, "Add2"),
            AdditionRule::Add3 => write!(f, "Add3"),
        }
    }
}

/// Outcome of one removal step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalResult {
    /// The matrix with one unit of weight removed.
    pub matrix: FishburnMatrix,
    /// `min_row_index` of the input, less one. Replaying these labels in
    /// build order reconstructs the input.
    pub label: usize,
    /// The rule that applied.
    pub rule: RemovalRule,
}

/// One step of a build trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildStep {
    /// `None` on the initial weight-1 matrix, otherwise the rule used.
    pub rule: Option<AdditionRule>,
    /// The sequence entry consumed by this step.
    pub label: usize,
    /// The matrix after the step; its weight is the step number plus one.
    pub matrix: FishburnMatrix,
}

/// The full build history of a matrix from its ascent sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildTrace {
    pub steps: Vec<BuildStep>,
}

impl BuildTrace {
    pub fn final_matrix(&self) -> &FishburnMatrix {
        &self
            .steps
            .last()
            .expect("trace has at least one step")
            .matrix
    }
}

/// Removes one unit of weight, returning the smaller matrix together with
/// the label `min_row_index - 1` and the rule that applied.
pub fn remove(a: &FishburnMatrix) -> Result<RemovalResult, BijectionError> {
    if a.weight() < 2 {
        return Err(BijectionError::WeightTooSmall);
    }
    let d = a.dim();
    let idx = a.min_row_index();
    let val = a.last_col_value();
    let grid = a.rows();
    let row_otherwise_zero = (0..d - 1).all(|j| grid[idx - 1][j] == 0);

    let (rule, new_grid) = if val == 1 && idx == d {
        // Drop the last row and column; the corner above stays positive.
        let g = grid[..d - 1]
            .iter()
            .map(|r| r[..d - 1].to_vec())
            .collect::<Vec<_>>();
        (RemovalRule::Rem2, g)
    } else if val == 1 && idx < d && row_otherwise_zero {
        // Move the column segment above the lone 1 into the last column,
        // then delete its row and column.
        let keep = |(j, _): &(usize, &usize)| *j != idx - 1;
        let mut g: Vec<Vec<usize>> = grid
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx - 1)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(keep)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        for (i, row) in g.iter_mut().enumerate().take(idx - 1) {
            // Rows above the deleted one had zeros in the last column.
            row[d - 2] = grid[i][idx - 1];
        }
        (RemovalRule::Rem3, g)
    } else {
        let mut g = grid.to_vec();
        g[idx - 1][d - 1] -= 1;
        (RemovalRule::Rem1, g)
    };

    Ok(RemovalResult {
        matrix: FishburnMatrix::from_grid(new_grid),
        label: idx - 1,
        rule,
    })
}

/// Adds one unit of weight at label `m` in `0..=dim`. The result has
/// `min_row_index` equal to `m + 1`.
pub fn add(b: &FishburnMatrix, m: usize) -> Result<FishburnMatrix, BijectionError> {
    add_with_rule(b, m).map(|(matrix, _)| matrix)
}

pub(crate) fn add_with_rule(
    b: &FishburnMatrix,
    m: usize,
) -> Result<(FishburnMatrix, AdditionRule), BijectionError> {
    let d = b.dim();
    if m > d {
        return Err(BijectionError::LabelOutOfRange { label: m, dim: d });
    }
    let idx = b.min_row_index();
    if m < idx {
        let mut g = b.rows().to_vec();
        g[m][d - 1] += 1;
        Ok((FishburnMatrix::from_grid(g), AdditionRule::Add1))
    } else if m == d {
        let mut g: Vec<Vec<usize>> = b
            .rows()
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.push(0);
                r
            })
            .collect();
        let mut last = vec![0usize; d + 1];
        last[d] = 1;
        g.push(last);
        Ok((FishburnMatrix::from_grid(g), AdditionRule::Add2))
    } else {
        // idx <= m < d: splice in a row and column after position m. The new
        // row carries a lone 1 in the last column; the old last-column
        // entries above it move into the new column.
        let mut g = vec![vec![0usize; d + 1]; d + 1];
        let grid = b.rows();
        for (i, row) in grid.iter().enumerate() {
            for (j, &v) in row.iter().enumerate().skip(i) {
                if v == 0 {
                    continue;
                }
                if j < d - 1 {
                    let ni = if i < m { i } else { i + 1 };
                    let nj = if j < m { j } else { j + 1 };
                    g[ni][nj] = v;
                } else if i < m {
                    g[i][m] = v;
                } else {
                    g[i + 1][d] = v;
                }
            }
        }
        g[m][d] = 1;
        Ok((FishburnMatrix::from_grid(g), AdditionRule::Add3))
    }
}

/// The sequence encoding of a matrix: repeatedly remove, then read the
/// labels off in build order, starting from the single entry 0. The length
/// equals the weight, the ascent count is one less than the dimension, and
/// the last entry is `min_row_index - 1`.
pub fn to_sequence(a: &FishburnMatrix) -> AscentSequence {
    let mut labels = Vec::with_capacity(a.weight());
    let mut cur = a.clone();
    while cur.weight() > 1 {
        let step = remove(&cur).expect("weight is at least 2");
        labels.push(step.label);
        cur = step.matrix;
    }
    let mut entries = vec![0usize];
    entries.extend(labels.into_iter().rev());
    AscentSequence::from_entries(entries).expect("removal labels form an ascent sequence")
}

/// Rebuilds the matrix a sequence encodes, starting from the weight-1
/// matrix and replaying each entry as an addition label.
pub fn from_sequence(x: &AscentSequence) -> FishburnMatrix {
    let mut cur = FishburnMatrix::from_grid(vec![vec![1]]);
    for &m in &x.entries()[1..] {
        cur = add(&cur, m).expect("the ascent bound keeps every label in range");
    }
    cur
}

/// Replays a sequence step by step, recording the rule, label, and
/// intermediate matrix at each step.
///
/// Each entry also determines the rule from the sequence alone: an entry at
/// most its predecessor uses `Add1`, an entry equal to 1 + the ascent count
/// so far uses `Add2`, and anything strictly between uses `Add3`. The replay
/// asserts this correspondence at every step.
pub fn build_trace(x: &AscentSequence) -> BuildTrace {
    let entries = x.entries();
    let unit = FishburnMatrix::from_grid(vec![vec![1]]);
    let mut steps = vec![BuildStep {
        rule: None,
        label: entries[0],
        matrix: unit.clone(),
    }];
    let mut cur = unit;
    for (i, &m) in entries.iter().enumerate().skip(1) {
        let prev = entries[i - 1];
        let ascents_so_far = x.ascents_in_prefix(i).expect("prefix length is in range");
        let expected = if m <= prev {
            AdditionRule::Add1
        } else if m == 1 + ascents_so_far {
            AdditionRule::Add2
        } else {
            AdditionRule::Add3
        };
        let (next, rule) = add_with_rule(&cur, m).expect("label in range");
        assert_eq!(
            rule,
            expected,
            "addition rule disagrees with the sequence case at position {}",
            i + 1
        );
        steps.push(BuildStep {
            rule: Some(rule),
            label: m,
            matrix: next.clone(),
        });
        cur = next;
    }
    BuildTrace { steps }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> FishburnMatrix {
        FishburnMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn aseq(e: &[usize]) -> AscentSequence {
        AscentSequence::from_entries(e.to_vec()).unwrap()
    }

    #[test]
    fn removal_fixture_decrement() {
        let a = mat(&[&[1, 0, 1, 0], &[0, 2, 0, 3], &[0, 0, 1, 4], &[0, 0, 0, 2]]);
        let r = remove(&a).unwrap();
        assert_eq!(r.rule, RemovalRule::Rem1);
        assert_eq!(r.label, 1);
        assert_eq!(
            r.matrix,
            mat(&[&[1, 0, 1, 0], &[0, 2, 0, 2], &[0, 0, 1, 4], &[0, 0, 0, 2],])
        );
    }

    #[test]
    fn removal_fixture_corner() {
        let b = mat(&[&[5, 1, 3, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let r = remove(&b).unwrap();
        assert_eq!(r.rule, RemovalRule::Rem2);
        assert_eq!(r.label, 3);
        assert_eq!(r.matrix, mat(&[&[5, 1, 3], &[0, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn removal_fixture_splice_out() {
        let c = mat(&[
            &[1, 0, 0, 1, 0, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0],
            &[0, 0, 1, 2, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, 0, 1],
        ]);
        let r = remove(&c).unwrap();
        assert_eq!(r.rule, RemovalRule::Rem3);
        assert_eq!(r.label, 3);
        assert_eq!(
            r.matrix,
            mat(&[
                &[1, 0, 0, 0, 0, 1],
                &[0, 1, 0, 1, 0, 1],
                &[0, 0, 1, 1, 1, 2],
                &[0, 0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 0, 1],
                &[0, 0, 0, 0, 0, 1],
            ])
        );
    }

    #[test]
    fn addition_fixture_bump() {
        let a = mat(&[&[1, 0, 1, 0], &[0, 2, 0, 0], &[0, 0, 1, 5], &[0, 0, 0, 1]]);
        let (out, rule) = add_with_rule(&a, 1).unwrap();
        assert_eq!(rule, AdditionRule::Add1);
        assert_eq!(
            out,
            mat(&[&[1, 0, 1, 0], &[0, 2, 0, 1], &[0, 0, 1, 5], &[0, 0, 0, 1],])
        );
    }

    #[test]
    fn addition_fixture_border() {
        let b = mat(&[&[1, 5, 0, 4], &[0, 1, 0, 3], &[0, 0, 1, 2], &[0, 0, 0, 3]]);
        let (out, rule) = add_with_rule(&b, 4).unwrap();
        assert_eq!(rule, AdditionRule::Add2);
        assert_eq!(
            out,
            mat(&[
                &[1, 5, 0, 4, 0],
                &[0, 1, 0, 3, 0],
                &[0, 0, 1, 2, 0],
                &[0, 0, 0, 3, 0],
                &[0, 0, 0, 0, 1],
            ])
        );
    }

    #[test]
    fn addition_fixture_splice_in() {
        let c = mat(&[
            &[1, 0, 0, 0, 6, 0],
            &[0, 1, 0, 1, 0, 7],
            &[0, 0, 1, 1, 1, 2],
            &[0, 0, 0, 0, 3, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, 1],
        ]);
        let (out, rule) = add_with_rule(&c, 3).unwrap();
        assert_eq!(rule, AdditionRule::Add3);
        assert_eq!(
            out,
            mat(&[
                &[1, 0, 0, 0, 0, 6, 0],
                &[0, 1, 0, 7, 1, 0, 0],
                &[0, 0, 1, 2, 1, 1, 0],
                &[0, 0, 0, 0, 0, 0, 1],
                &[0, 0, 0, 0, 0, 3, 0],
                &[0, 0, 0, 0, 0, 0, 1],
                &[0, 0, 0, 0, 0, 0, 1],
            ])
        );
    }

    #[test]
    fn splice_rules_invert_each_other() {
        // The splice-in fixture round-trips back through removal.
        let c = mat(&[
            &[1, 0, 0, 0, 6, 0],
            &[0, 1, 0, 1, 0, 7],
            &[0, 0, 1, 1, 1, 2],
            &[0, 0, 0, 0, 3, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, 1],
        ]);
        let grown = add(&c, 3).unwrap();
        assert_eq!(grown.min_row_index(), 4);
        let r = remove(&grown).unwrap();
        assert_eq!(r.rule, RemovalRule::Rem3);
        assert_eq!((r.matrix, r.label), (c, 3));
    }

    #[test]
    fn removal_rejects_unit_matrix() {
        assert_eq!(remove(&mat(&[&[1]])), Err(BijectionError::WeightTooSmall));
    }

    #[test]
    fn addition_rejects_large_labels() {
        assert_eq!(
            add(&mat(&[&[1]]), 2),
            Err(BijectionError::LabelOutOfRange { label: 2, dim: 1 })
        );
    }

    #[test]
    fn sequence_encoding_examples() {
        assert_eq!(to_sequence(&mat(&[&[3]])), aseq(&[0, 0, 0]));
        let id3 = FishburnMatrix::diagonal(&[1, 1, 1]).unwrap();
        assert_eq!(to_sequence(&id3), aseq(&[0, 1, 2]));
        assert_eq!(to_sequence(&mat(&[&[1, 1], &[0, 1]])), aseq(&[0, 1, 0]));
    }

    #[test]
    fn sequence_decoding_examples() {
        assert_eq!(from_sequence(&aseq(&[0, 0, 1])), mat(&[&[2, 0], &[0, 1]]));
        assert_eq!(from_sequence(&aseq(&[0])), mat(&[&[1]]));
        assert_eq!(from_sequence(&aseq(&[0, 1, 0])), mat(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn trace_records_rules_and_intermediates() {
        let trace = build_trace(&aseq(&[0, 1, 0]));
        assert_eq!(trace.steps.len(), 3);
        assert_eq!(trace.steps[0].rule, None);
        assert_eq!(trace.steps[0].matrix, mat(&[&[1]]));
        assert_eq!(trace.steps[1].rule, Some(AdditionRule::Add2));
        assert_eq!(
            trace.steps[1].matrix,
            FishburnMatrix::diagonal(&[1, 1]).unwrap()
        );
        assert_eq!(trace.steps[2].rule, Some(AdditionRule::Add1));
        assert_eq!(trace.steps[2].matrix, mat(&[&[1, 1], &[0, 1]]));
        assert_eq!(trace.final_matrix(), &from_sequence(&aseq(&[0, 1, 0])));

        let rules: Vec<_> = build_trace(&aseq(&[0, 1, 2]))
            .steps
            .iter()
            .map(|s| s.rule)
            .collect();
        assert_eq!(
            rules,
            vec![None, Some(AdditionRule::Add2), Some(AdditionRule::Add2)]
        );

        let single = build_trace(&aseq(&[0]));
        assert_eq!(single.steps.len(), 1);
        assert_eq!(single.final_matrix(), &mat(&[&[1]]));
    }

    #[test]
    fn weights_track_steps() {
        let trace = build_trace(&aseq(&[0, 1, 0, 1, 3, 1, 1, 2]));
        for (k, step) in trace.steps.iter().enumerate() {
            assert_eq!(step.matrix.weight(), k + 1);
        }
    }
}
