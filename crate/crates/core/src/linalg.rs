//! Dense matrices of arbitrary-precision integers with exact rank over the
//! rationals.
//!
//! Rank is computed by fraction-free (Bareiss) elimination: every division is
//! by the previous pivot and leaves no remainder, so no rational arithmetic
//! and no floating point ever appears. Pivots are the first nonzero entry in
//! each column; with exact arithmetic pivot choice only affects speed.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Result, ShiftError};

/// A dense `rows x cols` integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigInt,
    ) -> ExactMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> ExactMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.column_pivots().len()
    }

    /// Column indices that receive a pivot during left-to-right fraction-free
    /// elimination, in increasing order. Row operations preserve which column
    /// prefixes are independent, so the rank of the first `m` columns equals
    /// the number of pivots below `m` — the profile computations lean on this.
    pub(crate) fn column_pivots(&self) -> Vec<usize> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&p| !m.get(p, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let pivot = m.get(r, c).clone();
            let pivot_row: Vec<BigInt> = ((c + 1)..m.cols).map(|j| m.get(r, j).clone()).collect();
            for i in (r + 1)..m.rows {
                let lead = std::mem::replace(m.get_mut(i, c), BigInt::zero());
                for (offset, j) in ((c + 1)..m.cols).enumerate() {
                    let updated = (&pivot * m.get(i, j) - &lead * &pivot_row[offset]) / &prev;
                    *m.get_mut(i, j) = updated;
                }
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

/// Vertical concatenation; the column counts must agree.
pub fn stack_rows(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.cols != b.cols {
        return Err(ShiftError::ColumnMismatch {
            left: a.cols,
            right: b.cols,
        });
    }
    let mut entries = Vec::with_capacity((a.rows + b.rows) * a.cols);
    entries.extend(a.entries.iter().cloned());
    entries.extend(b.entries.iter().cloned());
    Ok(ExactMatrix {
        rows: a.rows + b.rows,
        cols: a.cols,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn all_ones_has_rank_one() {
        let m = ExactMatrix::from_fn(3, 3, |_, _| BigInt::one());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn vandermonde_is_regular() {
        // Nodes 1, 2, 3: determinant is the product of the node differences,
        // hence nonzero.
        let m = ExactMatrix::from_i64_rows(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn zero_rows_and_empty_matrices() {
        assert_eq!(ExactMatrix::zeros(0, 5).rank(), 0);
        assert_eq!(ExactMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(ExactMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn stack_examples() {
        let id = ExactMatrix::identity(2);
        let zero = ExactMatrix::zeros(1, 2);
        let stacked = stack_rows(&id, &zero).unwrap();
        assert_eq!(stacked.rows(), 3);
        assert_eq!(stacked.rank(), 2);

        let empty = ExactMatrix::zeros(0, 2);
        assert_eq!(stack_rows(&id, &empty).unwrap(), id);

        let dup = stack_rows(&id, &id).unwrap();
        assert_eq!(dup.rank(), id.rank());

        let wide = ExactMatrix::zeros(1, 3);
        assert!(matches!(
            stack_rows(&id, &wide),
            Err(ShiftError::ColumnMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn rank_deficient_with_column_skips() {
        // Second column is a multiple of the first, fourth is a combination.
        let m = ExactMatrix::from_i64_rows(&[&[2, 4, 1, 3], &[4, 8, 0, 4], &[6, 12, 1, 7]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.column_pivots(), vec![0, 2]);
    }

    #[test]
    fn pivot_prefix_counts_match_prefix_ranks() {
        let m =
            ExactMatrix::from_i64_rows(&[&[0, 0, 1, 2, 5], &[0, 0, 2, 4, 11], &[0, 7, 3, 1, 0]]);
        let pivots = m.column_pivots();
        for prefix in 0..=m.cols() {
            let truncated = ExactMatrix::from_fn(m.rows(), prefix, |r, c| m.get(r, c).clone());
            assert_eq!(
                truncated.rank(),
                pivots.iter().filter(|&&c| c < prefix).count(),
                "prefix {prefix}"
            );
        }
    }
}
