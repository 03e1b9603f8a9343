//! Contractions `λ_t(x, y) = g_t⁻¹ λ(g_t x, g_t y)` and their limits at
//! `t = 0`, plus a necessary-condition screen for degenerations.
//!
//! This is the inverse of the base-change convention used by
//! [`StructureConstants::transport`]; both generate the same orbits.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{conjugated_constants, InvariantVector, StructureConstants};
use crate::error::{Error, Result};
use crate::exactmath::{ExactError, Matrix, RatFunc, Scalar};

/// Exponents `a_i` of the diagonal path `g_t = diag(t^{a_1}, …, t^{a_d})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn uniform(d: usize, w: i64) -> Self {
        WeightVector(vec![w; d])
    }

    /// `diag(t^{a_1}, …, t^{a_d})` as a general path.
    pub fn to_path(&self) -> ContractionPath {
        ContractionPath::new(Matrix::diagonal(self.0.iter().map(|&a| RatFunc::t_pow(a)).collect()))
            .expect("monomial diagonal matrices are invertible")
    }
}

/// An invertible matrix over ℚ(t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionPath {
    g: Matrix<RatFunc>,
    g_inv: Matrix<RatFunc>,
}

impl ContractionPath {
    pub fn new(g: Matrix<RatFunc>) -> Result<Self> {
        let g_inv = g.invert().map_err(|e| match e {
            ExactError::Singular | ExactError::NotSquare { .. } => Error::SingularPath,
            other => Error::Exact(other),
        })?;
        Ok(ContractionPath { g, g_inv })
    }

    pub fn matrix(&self) -> &Matrix<RatFunc> {
        &self.g
    }

    pub fn inverse(&self) -> &Matrix<RatFunc> {
        &self.g_inv
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// The limit is abelian.
    Trivial,
    /// Same invariants as the source; isomorphism is not decided.
    ImproperCandidate,
    ProperCandidate,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Trivial => "trivial",
            Classification::ImproperCandidate => "improper_candidate",
            Classification::ProperCandidate => "proper_candidate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionResult {
    pub limit: StructureConstants,
    pub classification: Classification,
    /// `a_i + a_j − a_k` for every nonzero `γ^k_ij` (diagonal route).
    pub exponent_table: Option<BTreeMap<(usize, usize, usize), i64>>,
    /// Nonzero constants of `λ_t` (general route).
    pub path_constants: Option<BTreeMap<(usize, usize, usize), RatFunc>>,
}

fn limit_skeleton(a: &StructureConstants) -> StructureConstants {
    let mut s = StructureConstants::new(a.basis_names().to_vec()).expect("labels already validated");
    if let Some(n) = a.name() {
        s = s.with_name(format!("lim {n}"));
    }
    s
}

/// Generalized Inönü–Wigner contraction: `γ^k_ij ↦ t^{a_i + a_j − a_k} γ^k_ij`.
pub fn contract_diagonal(a: &StructureConstants, w: &WeightVector) -> Result<ContractionResult> {
    if w.0.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: w.0.len(),
        });
    }
    let mut exponents = BTreeMap::new();
    let mut limit = limit_skeleton(a);
    for ((i, j), prod) in a.products() {
        for (k, g) in prod.iter().enumerate() {
            if Zero::is_zero(g) {
                continue;
            }
            let e = w.0[i] + w.0[j] - w.0[k];
            if e < 0 {
                return Err(Error::NoLimit {
                    i,
                    j,
                    k,
                    pole_order: -e,
                });
            }
            if e == 0 {
                limit.add_constant(i, j, k, g.clone())?;
            }
            exponents.insert((i, j, k), e);
        }
    }
    let classification = classify_limit(a, &limit);
    Ok(ContractionResult {
        limit,
        classification,
        exponent_table: Some(exponents),
        path_constants: None,
    })
}

/// Contraction along an arbitrary path in `GL_d(ℚ(t))`.
pub fn contract_path(a: &StructureConstants, p: &ContractionPath) -> Result<ContractionResult> {
    if p.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: p.dim(),
        });
    }
    let constants = conjugated_constants(a, p.matrix(), p.inverse());
    let mut limit = limit_skeleton(a);
    for (&(i, j, k), c) in &constants {
        match c.eval_at_zero() {
            Ok(v) => limit.add_constant(i, j, k, v)?,
            Err(ExactError::PoleAtZero { order }) => {
                return Err(Error::NoLimit {
                    i,
                    j,
                    k,
                    pole_order: order,
                })
            }
            Err(e) => return Err(e.into()),
        }
    }
    let classification = classify_limit(a, &limit);
    Ok(ContractionResult {
        limit,
        classification,
        exponent_table: None,
        path_constants: Some(constants),
    })
}

pub fn classify_limit(a: &StructureConstants, limit: &StructureConstants) -> Classification {
    if limit.is_abelian() {
        Classification::Trivial
    } else if a.equal_tables(limit) || a.invariants() == limit.invariants() {
        Classification::ImproperCandidate
    } else {
        Classification::ProperCandidate
    }
}

/// A necessary condition for `λ → μ` that fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScreenViolation {
    /// `dim Der(λ) < dim Der(μ)` does not hold.
    OrbitDimension { lam: usize, mu: usize },
    LowerCentralSeries { lam: Vec<usize>, mu: Vec<usize> },
    DerivedSeries { lam: Vec<usize>, mu: Vec<usize> },
    /// `dim Z(μ) ≥ dim Z(λ)` does not hold.
    Center { lam: usize, mu: usize },
    LieIdentity,
    LeibnizIdentity,
}

impl ScreenViolation {
    pub fn code(&self) -> &'static str {
        match self {
            ScreenViolation::OrbitDimension { .. } => "orbit_dimension",
            ScreenViolation::LowerCentralSeries { .. } => "lower_central_series",
            ScreenViolation::DerivedSeries { .. } => "derived_series",
            ScreenViolation::Center { .. } => "center",
            ScreenViolation::LieIdentity => "lie_identity",
            ScreenViolation::LeibnizIdentity => "leibniz_identity",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScreenOutcome {
    /// All checks hold. `improper` marks identical tables.
    Pass { improper: bool },
    Fail(Vec<ScreenViolation>),
}

impl ScreenOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, ScreenOutcome::Pass { .. })
    }
}

/// Entrywise `mu ≤ lam`, padding the shorter chain with its stable value.
fn series_dominated(lam: &[usize], mu: &[usize]) -> bool {
    let n = lam.len().max(mu.len());
    let at = |s: &[usize], i: usize| s.get(i).or(s.last()).copied().unwrap_or(0);
    (0..n).all(|i| at(mu, i) <= at(lam, i))
}

/// Necessary conditions for a proper degeneration `lam → mu`.
pub fn screen(lam: &StructureConstants, mu: &StructureConstants) -> Result<ScreenOutcome> {
    if lam.dim() != mu.dim() {
        return Err(Error::DimensionMismatch {
            expected: lam.dim(),
            found: mu.dim(),
        });
    }
    if lam.equal_tables(mu) {
        return Ok(ScreenOutcome::Pass { improper: true });
    }
    Ok(screen_invariants(&lam.invariants(), &mu.invariants()))
}

pub fn screen_invariants(l: &InvariantVector, m: &InvariantVector) -> ScreenOutcome {
    let mut v = Vec::new();
    if l.der_dim >= m.der_dim {
        v.push(ScreenViolation::OrbitDimension {
            lam: l.der_dim,
            mu: m.der_dim,
        });
    }
    if !series_dominated(&l.lcs_dims, &m.lcs_dims) {
        v.push(ScreenViolation::LowerCentralSeries {
            lam: l.lcs_dims.clone(),
            mu: m.lcs_dims.clone(),
        });
    }
    if !series_dominated(&l.derived_dims, &m.derived_dims) {
        v.push(ScreenViolation::DerivedSeries {
            lam: l.derived_dims.clone(),
            mu: m.derived_dims.clone(),
        });
    }
    if m.center_dim < l.center_dim {
        v.push(ScreenViolation::Center {
            lam: l.center_dim,
            mu: m.center_dim,
        });
    }
    if l.is_lie && !m.is_lie {
        v.push(ScreenViolation::LieIdentity);
    }
    if l.is_leibniz && !m.is_leibniz {
        v.push(ScreenViolation::LeibnizIdentity);
    }
    if v.is_empty() {
        ScreenOutcome::Pass { improper: false }
    } else {
        ScreenOutcome::Fail(v)
    }
}

/// `RatFunc` constants of the diagonal path predicted by the exponent table.
pub fn predicted_path_constants(
    a: &StructureConstants,
    exponents: &BTreeMap<(usize, usize, usize), i64>,
) -> BTreeMap<(usize, usize, usize), RatFunc> {
    exponents
        .iter()
        .map(|(&(i, j, k), &e)| ((i, j, k), RatFunc::constant(a.gamma(i, j, k)).mul(&RatFunc::t_pow(e))))
        .collect()
}
