//! Chevalley–Eilenberg cochains with adjoint coefficients.
//!
//! A q-cochain is determined by its values on increasing basis tuples
//! `e_S = (e_{s_1}, …, e_{s_q})`. Coordinates are pairs `(S, k)` meaning
//! `f(e_S) = e_k`, ordered lexicographically by `S` and then `k`. The
//! differential is
//!
//! ```text
//! (df)(x_1..x_{q+1}) = Σ_i (-1)^{i+1} [x_i, f(..x̂_i..)]
//!                    + Σ_{i<j} (-1)^{i+j} f([x_i, x_j], ..x̂_i..x̂_j..)
//! ```
//!
//! which in degree 1 is `[x,f(y)] - [y,f(x)] - f([x,y])`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::exactmath::{kernel_basis, rank, Rat, SparseMatrix};

/// Highest degree for which a CE coboundary matrix is built.
pub const MAX_CE_DEGREE: usize = 3;

/// Coordinates of `Hom(Λ^q V, V)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainSpec {
    degree: usize,
    algebra_dim: usize,
    subsets: Vec<Vec<usize>>,
}

impl CochainSpec {
    pub fn new(algebra_dim: usize, degree: usize) -> Self {
        CochainSpec {
            degree,
            algebra_dim,
            subsets: increasing_tuples(algebra_dim, degree),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    /// `d · C(d, q)`.
    pub fn dim(&self) -> usize {
        self.algebra_dim * self.subsets.len()
    }

    /// Increasing index tuples in lexicographic order.
    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// The `(S, k)` pair at a coordinate.
    pub fn basis_element(&self, coord: usize) -> (&[usize], usize) {
        (&self.subsets[coord / self.algebra_dim], coord % self.algebra_dim)
    }

    fn index_map(&self) -> HashMap<&[usize], usize> {
        self.subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect()
    }
}

/// Strictly increasing length-`q` tuples over `0..d`, lexicographic.
pub(crate) fn increasing_tuples(d: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(q);
    fn rec(d: usize, q: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(d, q, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(d, q, 0, &mut cur, &mut out);
    out
}

/// Matrix of a coboundary map between two fixed cochain coordinate systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoboundaryMatrix<S> {
    pub domain: S,
    pub codomain: S,
    pub matrix: SparseMatrix,
}

impl<S> CoboundaryMatrix<S> {
    pub fn rank(&self) -> usize {
        rank(&self.matrix.to_dense())
    }

    /// `dim ker`, the dimension of the cocycle space.
    pub fn nullity(&self) -> usize {
        self.matrix.cols() - self.rank()
    }

    /// Cocycle basis in kernel normal form.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        kernel_basis(&self.matrix.to_dense())
    }
}

/// Sorts `v` in place and returns the sign of the permutation, or `None`
/// if two entries coincide.
pub(crate) fn sort_with_sign(v: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some(sign)
}

/// The CE differential `d^q : C^q → C^{q+1}` without checking the Lie axioms.
pub(crate) fn ce_coboundary_unchecked(a: &StructureConstants, q: usize) -> CoboundaryMatrix<CochainSpec> {
    let d = a.dim();
    let domain = CochainSpec::new(d, q);
    let codomain = CochainSpec::new(d, q + 1);
    let dom_index = domain.index_map();
    let mut entries: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    let mut add = |row: usize, col: usize, v: Rat| {
        if !v.is_zero() {
            *entries.entry((row, col)).or_insert_with(Rat::zero) += v;
        }
    };

    for (ti, t) in codomain.subsets().iter().enumerate() {
        let row_base = ti * d;
        // Σ_i (-1)^{i+1} [x_i, f(..x̂_i..)]; 0-based i gives sign (-1)^i.
        for i in 0..t.len() {
            let rest: Vec<usize> = t.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &x)| x).collect();
            let col_base = dom_index[rest.as_slice()] * d;
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for k in 0..d {
                if let Some(prod) = a.product(t[i], k) {
                    for (l, g) in prod.iter().enumerate() {
                        if !g.is_zero() {
                            add(row_base + l, col_base + k, g * Rat::from_integer(sign.into()));
                        }
                    }
                }
            }
        }
        // Σ_{i<j} (-1)^{i+j} f([x_i, x_j], rest); the parity of i+j is the
        // same for 0- and 1-based positions.
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let Some(prod) = a.product(t[i], t[j]) else {
                    continue;
                };
                let outer = if (i + j) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != i && p != j)
                    .map(|(_, &x)| x)
                    .collect();
                for (m, g) in prod.iter().enumerate() {
                    if g.is_zero() {
                        continue;
                    }
                    let mut s = Vec::with_capacity(rest.len() + 1);
                    s.push(m);
                    s.extend_from_slice(&rest);
                    let Some(perm) = sort_with_sign(&mut s) else {
                        continue;
                    };
                    let col_base = dom_index[s.as_slice()] * d;
                    let c = g * Rat::from_integer((outer * perm).into());
                    for k in 0..d {
                        add(row_base + k, col_base + k, c.clone());
                    }
                }
            }
        }
    }
    let matrix = SparseMatrix::from_entries(codomain.dim(), domain.dim(), entries);
    CoboundaryMatrix {
        domain,
        codomain,
        matrix,
    }
}

/// Matrix of the CE differential `d^q` with adjoint coefficients, `q ≤ 3`.
pub fn ce_coboundary_matrix(a: &StructureConstants, q: usize) -> Result<CoboundaryMatrix<CochainSpec>> {
    a.require_lie()?;
    if q > MAX_CE_DEGREE {
        return Err(Error::BadParameter(format!(
            "CE coboundary degree {q} exceeds {MAX_CE_DEGREE}"
        )));
    }
    Ok(ce_coboundary_unchecked(a, q))
}

/// `dim H^q(L, L)` for `q ≤ 2`.
pub fn lie_cohomology_dim(a: &StructureConstants, q: usize) -> Result<usize> {
    a.require_lie()?;
    if q > 2 {
        return Err(Error::BadParameter(format!("cohomology degree {q} exceeds 2")));
    }
    let z = ce_coboundary_unchecked(a, q).nullity();
    let b = if q == 0 { 0 } else { ce_coboundary_unchecked(a, q - 1).rank() };
    Ok(z - b)
}

/// `[dim H^0, dim H^1, dim H^2]`, sharing the rank computations.
pub fn lie_cohomology_dims(a: &StructureConstants) -> Result<[usize; 3]> {
    a.require_lie()?;
    let ops: Vec<_> = (0..3).map(|q| ce_coboundary_unchecked(a, q)).collect();
    let ranks: Vec<usize> = ops.iter().map(CoboundaryMatrix::rank).collect();
    let dims: Vec<usize> = ops.iter().map(|o| o.matrix.cols()).collect();
    Ok([
        dims[0] - ranks[0],
        dims[1] - ranks[1] - ranks[0],
        dims[2] - ranks[2] - ranks[1],
    ])
}

/// Derivations as 1-cocycles, in kernel normal form. Coordinate `p·d + k`
/// holds the coefficient of `e_k` in `D e_p`.
pub fn derivations(a: &StructureConstants) -> Result<Vec<Vec<Rat>>> {
    a.require_lie()?;
    Ok(ce_coboundary_unchecked(a, 1).kernel_basis())
}

/// True iff `d^{q+1} ∘ d^q = 0` for every `q < MAX_CE_DEGREE`.
pub fn ce_d_squared_report(a: &StructureConstants) -> Result<bool> {
    a.require_lie()?;
    let ops: Vec<_> = (0..=MAX_CE_DEGREE).map(|q| ce_coboundary_unchecked(a, q)).collect();
    Ok(ops.windows(2).all(|w| w[1].matrix.mul(&w[0].matrix).is_zero()))
}

/// `n² − dim Der`, the dimension of the orbit under base change (with
/// `dim Aut = dim Der` in characteristic zero). Works for any table.
pub fn orbit_dimension(a: &StructureConstants) -> usize {
    a.dim() * a.dim() - a.der_dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cochain_dimensions() {
        let s = CochainSpec::new(4, 2);
        assert_eq!(s.dim(), 4 * 6);
        assert_eq!(s.subsets()[0], vec![0, 1]);
        assert_eq!(s.subsets()[5], vec![2, 3]);
        assert_eq!(s.basis_element(5), (&[0usize, 2][..], 1));
        assert_eq!(CochainSpec::new(3, 0).dim(), 3);
        assert_eq!(CochainSpec::new(3, 4).dim(), 0);
    }

    #[test]
    fn permutation_sign() {
        let mut v = vec![2, 0, 1];
        assert_eq!(sort_with_sign(&mut v), Some(1));
        assert_eq!(v, vec![0, 1, 2]);
        let mut v = vec![1, 0];
        assert_eq!(sort_with_sign(&mut v), Some(-1));
        assert_eq!(sort_with_sign(&mut [1, 3, 1]), None);
    }

    #[test]
    fn abelian_differentials_vanish() {
        let a = catalog::abelian(3).unwrap();
        for q in 0..=3 {
            assert!(ce_coboundary_matrix(&a, q).unwrap().matrix.is_zero());
        }
    }

    #[test]
    fn sl2_d1_rank() {
        let m = ce_coboundary_matrix(&catalog::sl2(), 1).unwrap();
        assert_eq!((m.matrix.rows(), m.matrix.cols()), (9, 9));
        assert_eq!(m.rank(), 6);
    }

    #[test]
    fn heisenberg_d0() {
        let m = ce_coboundary_matrix(&catalog::heisenberg(1).unwrap(), 0).unwrap();
        assert_eq!((m.domain.dim(), m.codomain.dim()), (3, 9));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn cohomology_examples() {
        assert_eq!(lie_cohomology_dim(&catalog::sl2(), 2), Ok(0));
        assert_eq!(lie_cohomology_dim(&catalog::nonabelian2(), 2), Ok(0));
        assert_eq!(lie_cohomology_dim(&catalog::abelian(2).unwrap(), 2), Ok(2));
        assert!(lie_cohomology_dim(&catalog::sl2(), 3).is_err());
    }

    #[test]
    fn not_lie_rejected() {
        let e = ce_coboundary_matrix(&catalog::leibniz_nilpotent2(), 1).unwrap_err();
        assert_eq!(e.code(), "NOT_LIE");
    }

    #[test]
    fn derivation_counts() {
        assert_eq!(derivations(&catalog::abelian(3).unwrap()).unwrap().len(), 9);
        assert_eq!(derivations(&catalog::nonabelian2()).unwrap().len(), 2);
        assert_eq!(derivations(&catalog::sl2()).unwrap().len(), 3);
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(orbit_dimension(&catalog::abelian(4).unwrap()), 0);
        assert_eq!(orbit_dimension(&catalog::sl2()), 6);
        assert_eq!(orbit_dimension(&catalog::heisenberg(1).unwrap()), 3);
    }
}
