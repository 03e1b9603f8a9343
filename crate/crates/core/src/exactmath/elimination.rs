//! Rank and kernel computations.
//!
//! Rational matrices go through fraction-free Bareiss elimination: each column
//! is scaled by the lcm of its denominators, then eliminated over ℤ with exact
//! divisions by the previous pivot. Pivot choice is deterministic: leftmost
//! column with a nonzero entry at or below the current row, topmost such row.
//!
//! [`gauss_jordan`] is the plain field-generic path, used for ℚ(t) and for
//! normalizing kernel bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Matrix, Rat};

/// Integer row-echelon form produced by Bareiss elimination.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Nonzero echelon rows, one per pivot.
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    /// Per-column multiplier applied to clear denominators.
    pub col_scale: Vec<BigInt>,
    pub cols: usize,
}

impl Echelon {
    pub fn of(m: &Matrix<Rat>) -> Self {
        let cols = m.cols();
        let col_scale: Vec<BigInt> = (0..cols)
            .map(|j| {
                (0..m.rows()).fold(BigInt::one(), |acc, i| acc.lcm(m.get(i, j).denom()))
            })
            .collect();

        // Zero rows contribute nothing to the rank or the row space.
        let mut a: Vec<Vec<BigInt>> = (0..m.rows())
            .filter(|&i| m.row(i).iter().any(|x| !Zero::is_zero(x)))
            .map(|i| {
                m.row(i)
                    .iter()
                    .zip(&col_scale)
                    .map(|(x, s)| x.numer() * (s / x.denom()))
                    .collect()
            })
            .collect();

        let nrows = a.len();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for col in 0..cols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let (head, tail) = a.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let pv = &pivot_row[col];
            for row in tail.iter_mut() {
                let factor = std::mem::take(&mut row[col]);
                if factor.is_zero() {
                    if !prev.is_one() || !pv.is_one() {
                        for x in row[col + 1..].iter_mut() {
                            if !x.is_zero() {
                                *x = (&*x * pv) / &prev;
                            }
                        }
                    }
                    continue;
                }
                for (x, pr) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                    let v = &*x * pv - &factor * pr;
                    *x = if prev.is_one() { v } else { v / &prev };
                }
            }
            prev = pv.clone();
            pivots.push(col);
            r += 1;
        }
        a.truncate(r);
        Echelon {
            rows: a,
            pivots,
            col_scale,
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Null-space basis by back substitution, one vector per free column,
    /// in the original (unscaled) coordinates.
    fn raw_kernel(&self) -> Vec<Vec<Rat>> {
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rat::zero(); self.cols];
                x[f] = Rat::one();
                for (row, &pc) in self.rows.iter().zip(&self.pivots).rev() {
                    let s = row[pc + 1..]
                        .iter()
                        .zip(&x[pc + 1..])
                        .filter(|(a, b)| !a.is_zero() && !Zero::is_zero(*b))
                        .fold(Rat::zero(), |acc, (a, b)| acc + Rat::from_integer(a.clone()) * b);
                    x[pc] = -s / Rat::from_integer(row[pc].clone());
                }
                // A·D·w = 0 with D = diag(col_scale), so v = D·w.
                x.iter()
                    .zip(&self.col_scale)
                    .map(|(w, s)| w * Rat::from_integer(s.clone()))
                    .collect()
            })
            .collect()
    }
}

/// Exact rank of a rational matrix.
pub fn rank(m: &Matrix<Rat>) -> usize {
    Echelon::of(m).rank()
}

/// Basis of the right null space `{v : m·v = 0}` in normal form: the vectors
/// are the rows of a reduced echelon matrix, so each has leading entry 1, no
/// other vector is nonzero at that index, and they are ordered by leading
/// index.
pub fn kernel_basis(m: &Matrix<Rat>) -> Vec<Vec<Rat>> {
    normalize_basis(m.cols(), &Echelon::of(m).raw_kernel())
}

/// Reduced echelon basis of the span of `vectors` (each of length `len`).
pub fn normalize_basis<F: super::Scalar>(len: usize, vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec());
    assert_eq!(m.cols(), len, "vector length mismatch");
    let (rref, pivots) = gauss_jordan(&m);
    (0..pivots.len()).map(|i| rref.row(i).to_vec()).collect()
}

/// Reduced echelon basis of the row space.
pub fn row_space_basis<F: super::Scalar>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let (rref, pivots) = gauss_jordan(m);
    (0..pivots.len()).map(|i| rref.row(i).to_vec()).collect()
}

/// Reduced row-echelon form over any field, with the pivot columns.
pub fn gauss_jordan<F: super::Scalar>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.to_rows();
    let (nrows, ncols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].inv().expect("pivot is nonzero");
        for x in a[r][col..].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, pr) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !pr.is_zero() {
                    *x = x.sub(&factor.mul(pr));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let out = if nrows == 0 {
        Matrix::zeros(0, ncols)
    } else {
        Matrix::from_rows(a)
    };
    (out, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn identity_rank() {
        assert_eq!(rank(&Matrix::<Rat>::identity(3)), 3);
    }

    #[test]
    fn zero_rank_and_kernel() {
        let z = Matrix::<Rat>::zeros(2, 3);
        assert_eq!(rank(&z), 0);
        let k = kernel_basis(&Matrix::<Rat>::zeros(2, 2));
        assert_eq!(k, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
    }

    #[test]
    fn row_vector_kernel_is_normalized() {
        let k = kernel_basis(&m(&[&[1, 2]]));
        assert_eq!(k, vec![vec![int(1), rat(-1, 2)]]);
    }

    #[test]
    fn fractional_entries() {
        let a = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3), int(1)],
            vec![int(1), rat(2, 3), int(2)],
        ]);
        assert_eq!(rank(&a), 1);
        for v in kernel_basis(&a) {
            assert!(a.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_deficient_with_skipped_columns() {
        let a = m(&[&[0, 1, 2, 3], &[0, 2, 4, 7], &[0, 3, 6, 10], &[1, 0, 0, 0]]);
        assert_eq!(rank(&a), 3);
        let k = kernel_basis(&a);
        assert_eq!(k, vec![vec![int(0), int(1), rat(-1, 2), int(0)]]);
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(rank(&Matrix::<Rat>::zeros(0, 4)), 0);
        assert_eq!(kernel_basis(&Matrix::<Rat>::zeros(0, 2)).len(), 2);
        assert!(kernel_basis(&Matrix::<Rat>::zeros(3, 0)).is_empty());
    }

    #[test]
    fn invert_rational() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.invert().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).invert(), Err(crate::exactmath::ExactError::Singular));
    }
}
