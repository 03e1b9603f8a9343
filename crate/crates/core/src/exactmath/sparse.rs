use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Matrix, Rat};

/// Column-sparse rational matrix. Each column holds `(row, value)` pairs
/// sorted by row with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, Rat)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from `(row, col) -> value` accumulations; zero sums are dropped.
    pub fn from_entries(rows: usize, cols: usize, entries: BTreeMap<(usize, usize), Rat>) -> Self {
        let mut columns = vec![Vec::new(); cols];
        // BTreeMap order is (row, col); columns end up sorted by row.
        for ((r, c), v) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of range");
            if !v.is_zero() {
                columns[c].push((r, v));
            }
        }
        SparseMatrix { rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Rat)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.columns[j]
            .binary_search_by_key(&i, |(r, _)| *r)
            .map(|k| self.columns[j][k].1.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    pub fn to_dense(&self) -> Matrix<Rat> {
        let mut m = Matrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn from_dense(m: &Matrix<Rat>) -> Self {
        let columns = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !m.get(i, j).is_zero())
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows(),
            columns,
        }
    }

    /// Applies the matrix to a sparse column.
    fn apply(&self, v: &[(usize, Rat)]) -> Vec<(usize, Rat)> {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (k, x) in v {
            for (i, a) in &self.columns[*k] {
                *acc.entry(*i).or_insert_with(Rat::zero) += a * x;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// `self * rhs`. Panics on a shape mismatch.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), rhs.rows, "inner dimensions differ");
        SparseMatrix {
            rows: self.rows,
            columns: rhs.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }
}
