//! Upper-triangular matrices with no zero row or column.
//!
//! A [`FishburnMatrix`] is a square upper-triangular matrix of non-negative
//! integers in which every row and every column holds at least one positive
//! entry. Its *weight* is the sum of all entries; the matrices of weight `n`
//! are exactly the objects in bijection with ascent sequences of length `n`.
//!
//! Stored densely as a full square grid: dimensions stay in the single
//! digits at the scales this crate enumerates, so a packed triangular layout
//! would buy nothing.
//!
//! Row and column indices are 1-based in the public interface.

use crate::sequences::StatPolynomial;
use std::fmt;
use std::str::FromStr;

/// Errors from matrix construction, validation, and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// The grid has no rows.
    Empty,
    /// Row `row` has `found` entries instead of `expected`.
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    /// Entry at 1-based `(row, col)` is negative.
    NegativeEntry { row: usize, col: usize },
    /// A positive entry sits below the diagonal at 1-based `(row, col)`.
    NotUpperTriangular { row: usize, col: usize },
    /// Row `row` (1-based) holds no positive entry.
    ZeroRow(usize),
    /// Column `col` (1-based) holds no positive entry.
    ZeroColumn(usize),
    /// A 1-based row or column index was outside `1..=dim`.
    OutOfRange { index: usize, dim: usize },
    /// Entrywise addition needs equal dimensions.
    DimensionMismatch { left: usize, right: usize },
    /// Text input could not be parsed.
    Parse(String),
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::Empty => write!(f, "matrix must have at least one row"),
            MatrixError::NotSquare {
                row,
                expected,
                found,
            } => write!(
                f,
                "row {row} has {found} entries, expected {expected} (matrix must be square)"
            ),
            MatrixError::NegativeEntry { row, col } => {
                write!(f, "negative entry at ({row},{col})")
            }
            MatrixError::NotUpperTriangular { row, col } => {
                write!(f, "positive entry below the diagonal at ({row},{col})")
            }
            MatrixError::ZeroRow(row) => write!(f, "row {row} has no positive entry"),
            MatrixError::ZeroColumn(col) => write!(f, "column {col} has no positive entry"),
            MatrixError::OutOfRange { index, dim } => {
                write!(f, "index {index} is out of range for dimension {dim}")
            }
            MatrixError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            MatrixError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for MatrixError {}

/// Square upper-triangular matrix of non-negative integers with no zero row
/// or column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FishburnMatrix {
    grid: Vec<Vec<usize>>,
}

impl FishburnMatrix {
    /// Validates a raw grid: square, entries non-negative, upper-triangular,
    /// and no all-zero row or column.
    pub fn validate(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        if rows.is_empty() {
            return Err(MatrixError::Empty);
        }
        let d = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(MatrixError::NotSquare {
                    row: i + 1,
                    expected: d,
                    found: row.len(),
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v < 0 {
                    return Err(MatrixError::NegativeEntry {
                        row: i + 1,
                        col: j + 1,
                    });
                }
                if i > j && v > 0 {
                    return Err(MatrixError::NotUpperTriangular {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.iter().all(|&v| v == 0) {
                return Err(MatrixError::ZeroRow(i + 1));
            }
        }
        for j in 0..d {
            if rows.iter().all(|row| row[j] == 0) {
                return Err(MatrixError::ZeroColumn(j + 1));
            }
        }
        Ok(FishburnMatrix {
            grid: rows
                .iter()
                .map(|row| row.iter().map(|&v| v as usize).collect())
                .collect(),
        })
    }

    /// Internal constructor for grids produced by operations whose closure
    /// properties guarantee validity.
    pub(crate) fn from_grid(grid: Vec<Vec<usize>>) -> Self {
        debug_assert!(
            {
                let signed: Vec<Vec<i64>> = grid
                    .iter()
                    .map(|r| r.iter().map(|&v| v as i64).collect())
                    .collect();
                FishburnMatrix::validate(&signed).is_ok()
            },
            "internal grid violates the matrix invariants: {grid:?}"
        );
        FishburnMatrix { grid }
    }

    /// Diagonal matrix with the given positive diagonal entries.
    pub fn diagonal(entries: &[usize]) -> Result<Self, MatrixError> {
        if entries.is_empty() {
            return Err(MatrixError::Empty);
        }
        if let Some(i) = entries.iter().position(|&v| v == 0) {
            return Err(MatrixError::ZeroRow(i + 1));
        }
        let d = entries.len();
        let mut grid = vec![vec![0usize; d]; d];
        for (i, &v) in entries.iter().enumerate() {
            grid[i][i] = v;
        }
        Ok(FishburnMatrix { grid })
    }

    /// Number of rows (equivalently columns).
    pub fn dim(&self) -> usize {
        self.grid.len()
    }

    /// Sum of all entries.
    pub fn weight(&self) -> usize {
        self.grid.iter().flatten().sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.grid
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Result<usize, MatrixError> {
        let d = self.dim();
        if i == 0 || i > d {
            return Err(MatrixError::OutOfRange { index: i, dim: d });
        }
        if j == 0 || j > d {
            return Err(MatrixError::OutOfRange { index: j, dim: d });
        }
        Ok(self.grid[i - 1][j - 1])
    }

    /// Smallest 1-based row index with a positive entry in the last column.
    /// Always defined: the last column holds a positive entry.
    pub fn min_row_index(&self) -> usize {
        let d = self.dim();
        (0..d)
            .find(|&i| self.grid[i][d - 1] > 0)
            .map(|i| i + 1)
            .expect("last column has a positive entry")
    }

    /// The entry at `(min_row_index, dim)`; always positive.
    pub fn last_col_value(&self) -> usize {
        self.grid[self.min_row_index() - 1][self.dim() - 1]
    }

    /// Sum of row `i` (1-based).
    pub fn row_sum(&self, i: usize) -> Result<usize, MatrixError> {
        if i == 0 || i > self.dim() {
            return Err(MatrixError::OutOfRange {
                index: i,
                dim: self.dim(),
            });
        }
        Ok(self.grid[i - 1].iter().sum())
    }

    /// Sum of column `j` (1-based).
    pub fn col_sum(&self, j: usize) -> Result<usize, MatrixError> {
        if j == 0 || j > self.dim() {
            return Err(MatrixError::OutOfRange {
                index: j,
                dim: self.dim(),
            });
        }
        Ok(self.grid.iter().map(|row| row[j - 1]).sum())
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.grid.iter().map(|row| row.iter().sum()).collect()
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> usize {
        (0..self.dim()).map(|i| self.grid[i][i]).sum()
    }

    /// Reflection in the antidiagonal: entry `(i, j)` moves to
    /// `(d+1-j, d+1-i)`. An involution that preserves weight and dimension.
    pub fn flip(&self) -> FishburnMatrix {
        let d = self.dim();
        let mut grid = vec![vec![0usize; d]; d];
        for (i, row) in grid.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.grid[d - 1 - j][d - 1 - i];
            }
        }
        FishburnMatrix::from_grid(grid)
    }

    /// Number of blocks in the maximal block-diagonal decomposition.
    pub fn blocks(&self) -> usize {
        let d = self.dim();
        let mut count = 1;
        for k in 1..d {
            let crossing = (0..k).any(|i| (k..d).any(|j| self.grid[i][j] > 0));
            if !crossing {
                count += 1;
            }
        }
        count
    }

    /// Polynomial with the sum of row `i` as the coefficient at exponent
    /// `i - 1`.
    pub fn row_sum_polynomial(&self) -> StatPolynomial {
        StatPolynomial::from_coeffs(self.row_sums())
    }

    /// Polynomial with the last-column entry of row `i` as the coefficient
    /// at exponent `i - 1`.
    pub fn last_column_polynomial(&self) -> StatPolynomial {
        let d = self.dim();
        StatPolynomial::from_coeffs(self.grid.iter().map(|row| row[d - 1]).collect())
    }

    /// Number of positive entries.
    pub fn positive_entries(&self) -> usize {
        self.grid.iter().flatten().filter(|&&v| v > 0).count()
    }

    /// Total amount by which entries exceed 1: the sum of `entry - 1` over
    /// all positive entries.
    pub fn excess(&self) -> usize {
        self.grid
            .iter()
            .flatten()
            .map(|&v| v.saturating_sub(1))
            .sum()
    }

    /// All entries 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.grid.iter().flatten().all(|&v| v <= 1)
    }

    /// Positive entries only on the diagonal.
    pub fn is_diagonal(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| i == j || self.grid[i][j] == 0))
    }

    /// Every diagonal entry positive.
    pub fn is_positive_diagonal(&self) -> bool {
        (0..self.dim()).all(|i| self.grid[i][i] > 0)
    }

    /// Positive entries only on the diagonal and superdiagonal.
    pub fn is_bidiagonal(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| j == i || j == i + 1 || self.grid[i][j] == 0))
    }

    /// Value of the rightmost positive entry in the first row.
    pub fn first_row_last_positive(&self) -> usize {
        *self.grid[0]
            .iter()
            .rev()
            .find(|&&v| v > 0)
            .expect("first row has a positive entry")
    }

    /// Entrywise sum; the result carries the combined weight and is again a
    /// valid matrix.
    pub fn matrix_sum(&self, other: &FishburnMatrix) -> Result<FishburnMatrix, MatrixError> {
        if self.dim() != other.dim() {
            return Err(MatrixError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let d = self.dim();
        let grid = (0..d)
            .map(|i| (0..d).map(|j| self.grid[i][j] + other.grid[i][j]).collect())
            .collect();
        Ok(FishburnMatrix::from_grid(grid))
    }
}

impl fmt::Display for FishburnMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for FishburnMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(MatrixError::Empty);
        }
        let rows = trimmed
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|p| {
                        p.trim().parse::<i64>().map_err(|_| {
                            MatrixError::Parse(format!("invalid entry {:?}", p.trim()))
                        })
                    })
                    .collect::<Result<Vec<i64>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        FishburnMatrix::validate(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn mat(rows: &[&[i64]]) -> FishburnMatrix {
        FishburnMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(FishburnMatrix::validate(&[vec![1, 1], vec![0, 1]]).is_ok());
        assert!(FishburnMatrix::validate(&[vec![1]]).is_ok());
        assert_eq!(
            FishburnMatrix::validate(&[vec![0, 1], vec![0, 1]]),
            Err(MatrixError::ZeroColumn(1))
        );
        assert_eq!(
            FishburnMatrix::validate(&[vec![1, 0], vec![0, 0]]),
            Err(MatrixError::ZeroRow(2))
        );
        assert_eq!(
            FishburnMatrix::validate(&[vec![1, 0], vec![1, 1]]),
            Err(MatrixError::NotUpperTriangular { row: 2, col: 1 })
        );
        assert_eq!(
            FishburnMatrix::validate(&[vec![1, -1], vec![0, 1]]),
            Err(MatrixError::NegativeEntry { row: 1, col: 2 })
        );
        assert_eq!(
            FishburnMatrix::validate(&[vec![1, 0]]),
            Err(MatrixError::NotSquare {
                row: 1,
                expected: 1,
                found: 2
            })
        );
        assert_eq!(FishburnMatrix::validate(&[]), Err(MatrixError::Empty));
    }

    #[test]
    fn index_and_value() {
        // Worked 4x4 with last column (0,3,4,2).
        let a = mat(&[&[1, 0, 1, 0], &[0, 2, 0, 3], &[0, 0, 1, 4], &[0, 0, 0, 2]]);
        assert_eq!(a.min_row_index(), 2);
        assert_eq!(a.last_col_value(), 3);
        let unit = mat(&[&[1]]);
        assert_eq!(unit.min_row_index(), 1);
        assert_eq!(unit.last_col_value(), 1);
        let b = mat(&[&[1, 1], &[0, 1]]);
        assert_eq!(b.min_row_index(), 1);
        assert_eq!(b.last_col_value(), 1);
    }

    #[test]
    fn sums_and_trace() {
        let b = mat(&[&[1, 1], &[0, 1]]);
        assert_eq!(b.row_sum(1).unwrap(), 2);
        assert_eq!(b.col_sum(2).unwrap(), 2);
        assert_eq!(mat(&[&[1]]).trace(), 1);
        assert_eq!(b.weight(), 3);
        assert_eq!(
            b.row_sum(3),
            Err(MatrixError::OutOfRange { index: 3, dim: 2 })
        );
        assert_eq!(
            b.col_sum(0),
            Err(MatrixError::OutOfRange { index: 0, dim: 2 })
        );
    }

    #[test]
    fn flip_examples() {
        assert_eq!(mat(&[&[1]]).flip(), mat(&[&[1]]));
        assert_eq!(mat(&[&[2, 0], &[0, 1]]).flip(), mat(&[&[1, 0], &[0, 2]]));
        assert_eq!(mat(&[&[1, 1], &[0, 1]]).flip(), mat(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn block_count() {
        assert_eq!(mat(&[&[1, 0], &[0, 2]]).blocks(), 2);
        assert_eq!(mat(&[&[1, 1], &[0, 1]]).blocks(), 1);
        assert_eq!(mat(&[&[1]]).blocks(), 1);
    }

    #[test]
    fn row_polynomials() {
        let b = mat(&[&[1, 1], &[0, 1]]);
        assert_eq!(b.row_sum_polynomial().coeffs(), &[2, 1]);
        assert_eq!(mat(&[&[1]]).row_sum_polynomial().coeffs(), &[1]);
        assert_eq!(b.last_column_polynomial().coeffs(), &[1, 1]);
        assert_eq!(b.row_sum_polynomial().coeff_sum(), b.weight());
        assert_eq!(
            b.last_column_polynomial().coeff_sum(),
            b.col_sum(b.dim()).unwrap()
        );
    }

    #[test]
    fn positive_and_excess() {
        assert_eq!(mat(&[&[3]]).positive_entries(), 1);
        assert_eq!(mat(&[&[3]]).excess(), 2);
        let id3 = FishburnMatrix::diagonal(&[1, 1, 1]).unwrap();
        assert_eq!(id3.excess(), 0);
        assert_eq!(mat(&[&[1, 1], &[0, 1]]).positive_entries(), 3);
    }

    #[test]
    fn subclass_predicates() {
        let id3 = FishburnMatrix::diagonal(&[1, 1, 1]).unwrap();
        assert!(id3.is_binary());
        assert!(id3.is_diagonal());
        assert!(id3.is_positive_diagonal());
        assert!(id3.is_bidiagonal());
        assert!(!mat(&[&[3]]).is_binary());
        // The worked bidiagonal 5x5 from the partition correspondence.
        let bp = mat(&[
            &[3, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0],
            &[0, 0, 0, 2, 0],
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1],
        ]);
        assert!(bp.is_bidiagonal());
        assert!(!bp.is_positive_diagonal());
        assert!(!bp.is_diagonal());
    }

    #[test]
    fn entrywise_sum() {
        assert_eq!(
            mat(&[&[1]]).matrix_sum(&mat(&[&[1]])).unwrap(),
            mat(&[&[2]])
        );
        assert_eq!(
            mat(&[&[1, 1], &[0, 1]])
                .matrix_sum(&mat(&[&[1, 0], &[0, 2]]))
                .unwrap(),
            mat(&[&[2, 1], &[0, 3]])
        );
        let id2 = FishburnMatrix::diagonal(&[1, 1]).unwrap();
        assert_eq!(
            id2.matrix_sum(&id2).unwrap(),
            FishburnMatrix::diagonal(&[2, 2]).unwrap()
        );
        assert_eq!(
            mat(&[&[1]]).matrix_sum(&id2),
            Err(MatrixError::DimensionMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn first_row_statistic() {
        let a = mat(&[&[1, 0, 1, 0], &[0, 2, 0, 3], &[0, 0, 1, 4], &[0, 0, 0, 2]]);
        assert_eq!(a.first_row_last_positive(), 1);
        assert_eq!(mat(&[&[5, 2], &[0, 1]]).first_row_last_positive(), 2);
    }

    #[test]
    fn text_round_trip() {
        let b = mat(&[&[1, 1], &[0, 1]]);
        assert_eq!(b.to_string(), "1,1;0,1");
        assert_eq!("1,1;0,1".parse::<FishburnMatrix>().unwrap(), b);
        assert_eq!("1".parse::<FishburnMatrix>().unwrap(), mat(&[&[1]]));
        assert!("1,1;0".parse::<FishburnMatrix>().is_err());
        assert!("x".parse::<FishburnMatrix>().is_err());
        assert!("0,1;0,1".parse::<FishburnMatrix>().is_err());
    }
}
