//! Algebras given by structure constants, identity checks, and
//! degeneration-monotone invariants.
//!
//! All indices are zero-based. The product of basis vectors is
//! `[e_i, e_j] = Σ_k γ^k_ij e_k`; only nonzero product vectors are stored.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{kernel_basis, rank, row_space_basis, Matrix, Rat};
use crate::leibniz_cohomology::{loday_coboundary_unchecked, CoefficientModule};

#[derive(Clone, PartialEq, Eq)]
pub struct StructureConstants {
    basis_names: Vec<String>,
    table: BTreeMap<(usize, usize), Vec<Rat>>,
    name: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Antisymmetry,
    Jacobi,
    Leibniz,
}

/// A basis tuple on which an identity fails, with the nonzero defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityWitness {
    pub kind: IdentityKind,
    pub indices: Vec<usize>,
    pub residual: Vec<Rat>,
}

impl fmt::Display for IdentityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            IdentityKind::Antisymmetry => "antisymmetry",
            IdentityKind::Jacobi => "jacobi",
            IdentityKind::Leibniz => "leibniz",
        };
        let idx: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        let res: Vec<String> = self.residual.iter().map(ToString::to_string).collect();
        write!(f, "{kind} fails at ({}), residual [{}]", idx.join(","), res.join(", "))
    }
}

impl StructureConstants {
    /// Abelian algebra on the given basis labels.
    pub fn new(basis_names: Vec<String>) -> Result<Self> {
        if basis_names.is_empty() {
            return Err(Error::InvalidStructure("dimension must be at least 1".into()));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = basis_names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(Error::InvalidStructure(format!("duplicate basis label `{dup}`")));
        }
        Ok(StructureConstants {
            basis_names,
            table: BTreeMap::new(),
            name: None,
        })
    }

    /// Abelian algebra with basis `e1, …, e{dim}`.
    pub fn abelian(dim: usize) -> Result<Self> {
        Self::new((1..=dim).map(|i| format!("e{i}")).collect())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == label)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim() {
            Ok(())
        } else {
            Err(Error::InvalidStructure(format!(
                "basis index {i} out of range for dimension {}",
                self.dim()
            )))
        }
    }

    /// Replaces the product `[e_i, e_j]`. A zero vector removes it.
    pub fn set_product(&mut self, i: usize, j: usize, out: Vec<Rat>) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        if out.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: out.len(),
            });
        }
        if out.iter().all(Zero::is_zero) {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), out);
        }
        Ok(())
    }

    /// Adds `c·e_k` to `[e_i, e_j]`.
    pub fn add_constant(&mut self, i: usize, j: usize, k: usize, c: Rat) -> Result<()> {
        self.check_index(k)?;
        let mut v = self.product_vec(i, j);
        v[k] += c;
        self.set_product(i, j, v)
    }

    /// Sets `[e_i, e_j] = c·e_k` and `[e_j, e_i] = -c·e_k` (adding to what is
    /// already there).
    pub fn add_skew(&mut self, i: usize, j: usize, k: usize, c: Rat) -> Result<()> {
        self.add_constant(i, j, k, c.clone())?;
        self.add_constant(j, i, k, -c)
    }

    /// Nonzero products in `(i, j)` order.
    pub fn products(&self) -> impl Iterator<Item = ((usize, usize), &[Rat])> {
        self.table.iter().map(|(k, v)| (*k, v.as_slice()))
    }

    pub fn product(&self, i: usize, j: usize) -> Option<&[Rat]> {
        self.table.get(&(i, j)).map(Vec::as_slice)
    }

    /// `[e_i, e_j]` as a dense vector.
    pub fn product_vec(&self, i: usize, j: usize) -> Vec<Rat> {
        self.product(i, j)
            .map(<[Rat]>::to_vec)
            .unwrap_or_else(|| vec![Rat::zero(); self.dim()])
    }

    /// The structure constant γ^k_ij.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> Rat {
        self.product(i, j).map_or_else(Rat::zero, |v| v[k].clone())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    /// Bilinear extension `Σ x_i y_j [e_i, e_j]`.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        let mut out = vec![Rat::zero(); self.dim()];
        for ((i, j), p) in &self.table {
            if x[*i].is_zero() || y[*j].is_zero() {
                continue;
            }
            let c = &x[*i] * &y[*j];
            for (o, g) in out.iter_mut().zip(p) {
                if !g.is_zero() {
                    *o += &c * g;
                }
            }
        }
        Ok(out)
    }

    fn br(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        self.bracket(x, y).expect("internal vectors have the algebra dimension")
    }

    fn unit(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim()];
        v[i] = Rat::one();
        v
    }

    /// First failure of the Lie axioms: antisymmetry over pairs `i ≤ j`
    /// first, then Jacobi over triples `i < j < k`, lexicographically.
    pub fn lie_witness(&self) -> Option<IdentityWitness> {
        let d = self.dim();
        for i in 0..d {
            for j in i..d {
                let residual: Vec<Rat> = self
                    .product_vec(i, j)
                    .iter()
                    .zip(self.product_vec(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                if residual.iter().any(|r| !r.is_zero()) {
                    return Some(IdentityWitness {
                        kind: IdentityKind::Antisymmetry,
                        indices: vec![i, j],
                        residual,
                    });
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
                    let t1 = self.br(&x, &self.br(&y, &z));
                    let t2 = self.br(&y, &self.br(&z, &x));
                    let t3 = self.br(&z, &self.br(&x, &y));
                    let residual: Vec<Rat> = (0..d).map(|m| &t1[m] + &t2[m] + &t3[m]).collect();
                    if residual.iter().any(|r| !r.is_zero()) {
                        return Some(IdentityWitness {
                            kind: IdentityKind::Jacobi,
                            indices: vec![i, j, k],
                            residual,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_lie(&self) -> bool {
        self.lie_witness().is_none()
    }

    /// Every basis triple violating
    /// `[x,[y,z]] = [[x,y],z] - [[x,z],y]`, in lexicographic order.
    pub fn leibniz_witnesses(&self) -> Vec<IdentityWitness> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if let Some(w) = self.leibniz_defect(i, j, k) {
                        out.push(w);
                    }
                }
            }
        }
        out
    }

    fn leibniz_defect(&self, i: usize, j: usize, k: usize) -> Option<IdentityWitness> {
        let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
        let lhs = self.br(&x, &self.br(&y, &z));
        let a = self.br(&self.br(&x, &y), &z);
        let b = self.br(&self.br(&x, &z), &y);
        let residual: Vec<Rat> = (0..self.dim()).map(|m| &lhs[m] - &a[m] + &b[m]).collect();
        residual.iter().any(|r| !r.is_zero()).then(|| IdentityWitness {
            kind: IdentityKind::Leibniz,
            indices: vec![i, j, k],
            residual,
        })
    }

    pub fn is_leibniz(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| self.leibniz_defect(i, j, k).is_none())))
    }

    pub fn require_lie(&self) -> Result<()> {
        self.lie_witness().map_or(Ok(()), |w| Err(Error::NotLie(w)))
    }

    pub fn require_leibniz(&self) -> Result<()> {
        match self.leibniz_witnesses().into_iter().next() {
            Some(w) => Err(Error::NotLeibniz(w)),
            None => Ok(()),
        }
    }

    /// Table equality (not isomorphism); basis labels and names are ignored.
    pub fn equal_tables(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.table == other.table
    }

    /// Transport of structure `(g*λ)(x, y) = g λ(g⁻¹x, g⁻¹y)` by a constant
    /// invertible matrix acting on coordinate columns.
    pub fn transport(&self, g: &Matrix<Rat>) -> Result<Self> {
        if g.rows() != self.dim() || g.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: g.rows(),
            });
        }
        let g_inv = g.invert()?;
        // g*λ = g_inv acting in the λ_t convention.
        let constants = conjugated_constants(self, &g_inv, g);
        let mut out = StructureConstants {
            basis_names: self.basis_names.clone(),
            table: BTreeMap::new(),
            name: self.name.clone(),
        };
        for ((i, j, k), c) in constants {
            out.add_constant(i, j, k, c)?;
        }
        Ok(out)
    }

    /// Degeneration-monotone invariants.
    pub fn invariants(&self) -> InvariantVector {
        let d = self.dim();
        let full: Vec<Vec<Rat>> = (0..d).map(|i| self.unit(i)).collect();
        let lcs_dims = series_dims(d, full.clone(), |cur| {
            cur.iter()
                .flat_map(|x| full.iter().map(move |y| (x, y)))
                .map(|(x, y)| self.br(x, y))
                .collect()
        });
        let derived_dims = series_dims(d, full.clone(), |cur| {
            cur.iter()
                .flat_map(|x| cur.iter().map(move |y| (x, y)))
                .map(|(x, y)| self.br(x, y))
                .collect()
        });
        InvariantVector {
            dim: d,
            lcs_dims,
            derived_dims,
            center_dim: self.center_dim(),
            der_dim: self.der_dim(),
            is_lie: self.is_lie(),
            is_leibniz: self.is_leibniz(),
        }
    }

    /// Dimension of the two-sided center `{x : [x,y] = [y,x] = 0 ∀y}`.
    pub fn center_dim(&self) -> usize {
        let d = self.dim();
        // Rows: coefficient k of [x, e_j] and of [e_j, x], as linear forms in x.
        let mut rows = Vec::with_capacity(2 * d * d);
        for j in 0..d {
            for k in 0..d {
                rows.push((0..d).map(|i| self.gamma(i, j, k)).collect::<Vec<_>>());
                rows.push((0..d).map(|i| self.gamma(j, i, k)).collect::<Vec<_>>());
            }
        }
        d - rank(&Matrix::from_rows(rows))
    }

    /// Basis of the derivation algebra in coordinates `D e_p = Σ_k x_{(p,k)} e_k`,
    /// coordinate `p·d + k`, in kernel normal form.
    pub fn derivations(&self) -> Vec<Vec<Rat>> {
        kernel_basis(&self.derivation_equations())
    }

    /// Dimension of the derivation algebra, identified with `dim Aut`.
    pub fn der_dim(&self) -> usize {
        let m = self.derivation_equations();
        m.cols() - rank(&m)
    }

    /// The degree-1 Loday coboundary `(df)(x,y) = [x,f(y)] + [f(x),y] - f([x,y])`,
    /// whose kernel is the derivation algebra for any table.
    fn derivation_equations(&self) -> Matrix<Rat> {
        loday_coboundary_unchecked(self, 1, CoefficientModule::Adjoint)
            .matrix
            .to_dense()
    }
}

/// Dimensions of a descending chain `V_0 = L, V_{k+1} = span(step(V_k))`,
/// stopping at zero or when the dimension stabilizes (the stable value is
/// recorded once more).
fn series_dims(
    d: usize,
    start: Vec<Vec<Rat>>,
    step: impl Fn(&[Vec<Rat>]) -> Vec<Vec<Rat>>,
) -> Vec<usize> {
    let mut dims = vec![start.len()];
    let mut cur = start;
    loop {
        let spanning = step(&cur);
        let next = if spanning.is_empty() {
            Vec::new()
        } else {
            row_space_basis(&Matrix::from_rows(spanning))
        };
        debug_assert!(next.iter().all(|v| v.len() == d));
        let n = next.len();
        let prev = *dims.last().expect("nonempty");
        dims.push(n);
        if n == 0 || n == prev {
            return dims;
        }
        cur = next;
    }
}

/// Structure constants of `λ_g(x, y) = g⁻¹ λ(g x, g y)` over any scalar
/// domain containing ℚ, keyed by `(i, j, k)`; zero constants are omitted.
pub(crate) fn conjugated_constants<F: crate::exactmath::Scalar + From<Rat>>(
    a: &StructureConstants,
    g: &Matrix<F>,
    g_inv: &Matrix<F>,
) -> BTreeMap<(usize, usize, usize), F> {
    let d = a.dim();
    // t[i][j][m] = coefficient of e_m in λ(g e_i, g e_j).
    let mut t = vec![F::zero(); d * d * d];
    for ((p, q), prod) in a.products() {
        for i in 0..d {
            let gpi = g.get(p, i);
            if gpi.is_zero() {
                continue;
            }
            for j in 0..d {
                let gqj = g.get(q, j);
                if gqj.is_zero() {
                    continue;
                }
                let c = gpi.mul(gqj);
                for (m, gamma) in prod.iter().enumerate() {
                    if gamma.is_zero() {
                        continue;
                    }
                    let idx = (i * d + j) * d + m;
                    t[idx] = t[idx].add(&c.mul(&F::from(gamma.clone())));
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for i in 0..d {
        for j in 0..d {
            let v = &t[(i * d + j) * d..(i * d + j + 1) * d];
            if v.iter().all(F::is_zero) {
                continue;
            }
            for k in 0..d {
                let c = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(F::zero(), |acc, (m, x)| acc.add(&g_inv.get(k, m).mul(x)));
                if !c.is_zero() {
                    out.insert((i, j, k), c);
                }
            }
        }
    }
    out
}

impl fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StructureConstants({}", self.name.as_deref().unwrap_or("unnamed"))?;
        for ((i, j), v) in &self.table {
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{c}*{}", self.basis_names[k]))
                .collect();
            write!(
                f,
                "; [{},{}]={}",
                self.basis_names[*i],
                self.basis_names[*j],
                terms.join("+")
            )?;
        }
        write!(f, ")")
    }
}

/// Invariants that can only move one way under degeneration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantVector {
    pub dim: usize,
    /// `L ⊇ [L,L] ⊇ [[L,L],L] ⊇ …` using right multiplication.
    pub lcs_dims: Vec<usize>,
    /// `L ⊇ [L,L] ⊇ [[L,L],[L,L]] ⊇ …`
    pub derived_dims: Vec<usize>,
    /// Two-sided center.
    pub center_dim: usize,
    pub der_dim: usize,
    pub is_lie: bool,
    pub is_leibniz: bool,
}
