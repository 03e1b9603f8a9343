//! Loday cochains `Hom(L^{⊗q}, M)` and their coboundary, with adjoint or
//! trivial coefficients.
//!
//! The differential is specialized mechanically from the general formula
//!
//! ```text
//! (df)(x_1..x_{n+1}) = [x_1, f(x_2..x_{n+1})]
//!                    + Σ_{i=2}^{n+1} (-1)^i [f(x_1..x̂_i..x_{n+1}), x_i]
//!                    + Σ_{i<j} (-1)^{j+1} f(x_1..x_{i-1}, [x_i,x_j], x_{i+1}..x̂_j..x_{n+1})
//! ```
//!
//! For trivial coefficients both actions vanish and only the last sum is
//! kept. Coordinates are pairs `(w, k)` with `w` a word of length `q` in
//! lexicographic order and `k` indexing the module basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::exactmath::{rank, Matrix, Rat, SparseMatrix};
use crate::lie_cohomology::{ce_coboundary_unchecked, CoboundaryMatrix, CochainSpec};

/// Highest degree for which Leibniz cohomology dimensions are reported.
pub const MAX_HL_DEGREE: usize = 3;

/// Default bound on the codomain dimension `(dim M)·d^{q+1}` of a Loday
/// coboundary.
pub const DEFAULT_SIZE_GUARD: usize = 200_000;

/// Resource limits for the tensor cochain complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_cochain_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cochain_dim: DEFAULT_SIZE_GUARD,
        }
    }
}

/// Coefficients of the Loday complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientModule {
    /// `L` itself, both actions given by the bracket.
    Adjoint,
    /// The ground field with both actions zero.
    Trivial,
}

impl CoefficientModule {
    pub fn dim(self, a: &StructureConstants) -> usize {
        match self {
            CoefficientModule::Adjoint => a.dim(),
            CoefficientModule::Trivial => 1,
        }
    }
}

/// Coordinates of `Hom(L^{⊗q}, M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorCochainSpec {
    pub degree: usize,
    pub algebra_dim: usize,
    pub module_dim: usize,
}

impl TensorCochainSpec {
    /// `(dim M)·d^q`, or `None` on overflow.
    pub fn checked_dim(&self) -> Option<usize> {
        u32::try_from(self.degree)
            .ok()
            .and_then(|q| self.algebra_dim.checked_pow(q))
            .and_then(|n| n.checked_mul(self.module_dim))
    }

    pub fn dim(&self) -> usize {
        self.checked_dim().expect("cochain dimension overflows usize")
    }

    pub fn word_count(&self) -> usize {
        self.algebra_dim.pow(self.degree as u32)
    }

    /// Lexicographic rank of a word (first letter most significant).
    pub fn word_index(&self, word: &[usize]) -> usize {
        debug_assert_eq!(word.len(), self.degree);
        word.iter().fold(0, |acc, &c| acc * self.algebra_dim + c)
    }

    pub fn word(&self, mut index: usize) -> Vec<usize> {
        let mut w = vec![0; self.degree];
        for slot in w.iter_mut().rev() {
            *slot = index % self.algebra_dim;
            index /= self.algebra_dim;
        }
        w
    }

    pub fn coordinate(&self, word: &[usize], k: usize) -> usize {
        self.word_index(word) * self.module_dim + k
    }
}

fn guard(a: &StructureConstants, q: usize, m: CoefficientModule, limits: &Limits) -> Result<()> {
    let spec = TensorCochainSpec {
        degree: q + 1,
        algebra_dim: a.dim(),
        module_dim: m.dim(a),
    };
    match spec.checked_dim() {
        Some(n) if n <= limits.max_cochain_dim => Ok(()),
        Some(n) => Err(Error::DimensionTooLarge {
            size: n,
            limit: limits.max_cochain_dim,
        }),
        None => Err(Error::DimensionTooLarge {
            size: usize::MAX,
            limit: limits.max_cochain_dim,
        }),
    }
}

/// Loday differential `d^q` without checking the Leibniz identity or the
/// size guard.
pub(crate) fn loday_coboundary_unchecked(
    a: &StructureConstants,
    q: usize,
    module: CoefficientModule,
) -> CoboundaryMatrix<TensorCochainSpec> {
    let d = a.dim();
    let md = module.dim(a);
    let domain = TensorCochainSpec {
        degree: q,
        algebra_dim: d,
        module_dim: md,
    };
    let codomain = TensorCochainSpec {
        degree: q + 1,
        ..domain
    };
    let adjoint = module == CoefficientModule::Adjoint;
    let mut entries: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    let mut add = |row: usize, col: usize, v: Rat| {
        if !v.is_zero() {
            *entries.entry((row, col)).or_insert_with(Rat::zero) += v;
        }
    };

    for wi in 0..codomain.word_count() {
        let x = codomain.word(wi);
        let row_base = wi * md;
        if adjoint {
            // [x_1, f(x_2..)]
            let col_base = domain.word_index(&x[1..]) * md;
            for k in 0..d {
                if let Some(prod) = a.product(x[0], k) {
                    for (l, g) in prod.iter().enumerate() {
                        add(row_base + l, col_base + k, g.clone());
                    }
                }
            }
            // (-1)^i [f(..x̂_i..), x_i] for 1-based i ≥ 2, i.e. p = i - 1 ≥ 1.
            for p in 1..x.len() {
                let rest: Vec<usize> = x.iter().enumerate().filter(|&(s, _)| s != p).map(|(_, &c)| c).collect();
                let col_base = domain.word_index(&rest) * md;
                let neg = p % 2 == 0;
                for k in 0..d {
                    if let Some(prod) = a.product(k, x[p]) {
                        for (l, g) in prod.iter().enumerate() {
                            add(row_base + l, col_base + k, if neg { -g } else { g.clone() });
                        }
                    }
                }
            }
        }
        // (-1)^{j+1} f(.., [x_i, x_j], .., x̂_j, ..); with 0-based pj the sign is (-1)^pj.
        for pi in 0..x.len() {
            for pj in pi + 1..x.len() {
                let Some(prod) = a.product(x[pi], x[pj]) else {
                    continue;
                };
                let neg = pj % 2 == 1;
                for (m, g) in prod.iter().enumerate() {
                    if g.is_zero() {
                        continue;
                    }
                    let w: Vec<usize> = x
                        .iter()
                        .enumerate()
                        .filter(|&(s, _)| s != pj)
                        .map(|(s, &c)| if s == pi { m } else { c })
                        .collect();
                    let col_base = domain.word_index(&w) * md;
                    let c = if neg { -g } else { g.clone() };
                    for k in 0..md {
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

/// Matrix of the Loday differential `d^q : E^q(L, M) → E^{q+1}(L, M)`.
pub fn loday_coboundary_matrix(
    a: &StructureConstants,
    q: usize,
    module: CoefficientModule,
    limits: &Limits,
) -> Result<CoboundaryMatrix<TensorCochainSpec>> {
    a.require_leibniz()?;
    guard(a, q, module, limits)?;
    Ok(loday_coboundary_unchecked(a, q, module))
}

/// `dim HL^q(L, M)` for `q ≤ 3`.
pub fn leibniz_cohomology_dim(
    a: &StructureConstants,
    q: usize,
    module: CoefficientModule,
    limits: &Limits,
) -> Result<usize> {
    if q > MAX_HL_DEGREE {
        return Err(Error::BadParameter(format!(
            "Leibniz cohomology degree {q} exceeds {MAX_HL_DEGREE}"
        )));
    }
    let z = loday_coboundary_matrix(a, q, module, limits)?.nullity();
    let b = match q {
        0 => 0,
        _ => loday_coboundary_matrix(a, q - 1, module, limits)?.rank(),
    };
    Ok(z - b)
}

/// `[dim HL^0, …, dim HL^qmax]`, computing each rank once.
pub fn leibniz_cohomology_dims(
    a: &StructureConstants,
    module: CoefficientModule,
    qmax: usize,
    limits: &Limits,
) -> Result<Vec<usize>> {
    if qmax > MAX_HL_DEGREE {
        return Err(Error::BadParameter(format!(
            "Leibniz cohomology degree {qmax} exceeds {MAX_HL_DEGREE}"
        )));
    }
    a.require_leibniz()?;
    guard(a, qmax, module, limits)?;
    let mut ranks = Vec::with_capacity(qmax + 1);
    let mut cols = Vec::with_capacity(qmax + 1);
    for q in 0..=qmax {
        let op = loday_coboundary_unchecked(a, q, module);
        cols.push(op.matrix.cols());
        ranks.push(op.rank());
    }
    Ok((0..=qmax)
        .map(|q| cols[q] - ranks[q] - if q == 0 { 0 } else { ranks[q - 1] })
        .collect())
}

/// Antisymmetric extension of a CE 2-cochain to a Loday 2-cochain with
/// adjoint coefficients: `({i,j}, k) ↦ (ij, k) − (ji, k)`.
pub fn skew_embed(a: &StructureConstants, f: &[Rat]) -> Result<Vec<Rat>> {
    a.require_lie()?;
    let d = a.dim();
    let lie = CochainSpec::new(d, 2);
    if f.len() != lie.dim() {
        return Err(Error::DimensionMismatch {
            expected: lie.dim(),
            found: f.len(),
        });
    }
    Ok(skew_embedding_matrix(d).to_dense().mul_vec(f))
}

/// Matrix of [`skew_embed`], `d³ × d·C(d,2)`.
pub fn skew_embedding_matrix(d: usize) -> SparseMatrix {
    let lie = CochainSpec::new(d, 2);
    let tensor = TensorCochainSpec {
        degree: 2,
        algebra_dim: d,
        module_dim: d,
    };
    let mut entries = BTreeMap::new();
    for (si, s) in lie.subsets().iter().enumerate() {
        let (i, j) = (s[0], s[1]);
        for k in 0..d {
            let col = si * d + k;
            entries.insert((tensor.coordinate(&[i, j], k), col), Rat::from_integer(1.into()));
            entries.insert((tensor.coordinate(&[j, i], k), col), Rat::from_integer((-1).into()));
        }
    }
    SparseMatrix::from_entries(tensor.dim(), lie.dim(), entries)
}

/// How degree-2 Lie cohomology sits inside degree-2 Leibniz cohomology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionCheck {
    /// `d_L² ∘ ι` vanishes on Lie 2-cocycles.
    pub cocycles_preserved: bool,
    /// `ι ∘ d¹_CE` lands in the image of the Loday `d¹`.
    pub coboundaries_preserved: bool,
    /// `ι` induces an injection `H² → HL²`.
    pub injective_on_cohomology: bool,
    pub h2: usize,
    pub hl2: usize,
}

/// Verifies that the skew embedding induces `H²(L,L) ⊂ HL²(L,L)`.
pub fn inclusion_check(a: &StructureConstants, limits: &Limits) -> Result<InclusionCheck> {
    a.require_lie()?;
    guard(a, 2, CoefficientModule::Adjoint, limits)?;
    let d = a.dim();
    let iota = skew_embedding_matrix(d);
    let ce1 = ce_coboundary_unchecked(a, 1);
    let ce2 = ce_coboundary_unchecked(a, 2);
    let ld1 = loday_coboundary_unchecked(a, 1, CoefficientModule::Adjoint);
    let ld2 = loday_coboundary_unchecked(a, 2, CoefficientModule::Adjoint);

    let z2 = ce2.kernel_basis();
    let z2_dim = z2.len();
    let b2_rank = ce1.rank();
    let embedded_cocycles = if z2.is_empty() {
        Matrix::zeros(iota.rows(), 0)
    } else {
        iota.to_dense().mul(&Matrix::from_columns(iota.cols(), &z2))
    };
    let cocycles_preserved = ld2
        .matrix
        .mul(&SparseMatrix::from_dense(&embedded_cocycles))
        .is_zero();

    let bl2 = ld1.matrix.to_dense();
    let bl2_rank = rank(&bl2);
    let embedded_boundaries = iota.mul(&ce1.matrix).to_dense();
    let coboundaries_preserved = rank(&bl2.hconcat(&embedded_boundaries)) == bl2_rank;

    // ι(Z²) ∩ BL² has dimension dim B² exactly when the induced map is injective.
    let joint = rank(&bl2.hconcat(&embedded_cocycles));
    let injective_on_cohomology = joint - bl2_rank == z2_dim - b2_rank;

    let hl2 = ld2.nullity() - bl2_rank;
    Ok(InclusionCheck {
        cocycles_preserved,
        coboundaries_preserved,
        injective_on_cohomology,
        h2: z2_dim - b2_rank,
        hl2,
    })
}

/// True iff `d^{q+1} ∘ d^q = 0` for every `q < qmax`.
pub fn d_squared_report(
    a: &StructureConstants,
    module: CoefficientModule,
    qmax: usize,
    limits: &Limits,
) -> Result<bool> {
    a.require_leibniz()?;
    guard(a, qmax, module, limits)?;
    let ops: Vec<_> = (0..=qmax).map(|q| loday_coboundary_unchecked(a, q, module)).collect();
    Ok(ops.windows(2).all(|w| w[1].matrix.mul(&w[0].matrix).is_zero()))
}
