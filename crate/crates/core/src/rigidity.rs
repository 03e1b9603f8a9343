//! Rigidity indicators assembled from cohomology dimensions.
//!
//! Only one-sided statements are made. `H²(L,L) = 0` is sufficient for Lie
//! rigidity and `HL²(L,L) = 0` for Leibniz rigidity. For a Lie algebra,
//! Leibniz rigidity needs `H² = HL²` under the inclusion induced by the skew
//! embedding, so a dimension gap blocks it. Nothing here claims that an
//! algebra is *not* rigid in the Lie variety: open orbits with `H² ≠ 0`
//! exist.
//!
//! `dim Aut` is taken to be `dim Der`, which holds in characteristic zero.

use crate::algebra::StructureConstants;
use crate::error::Result;
use crate::leibniz_cohomology::{
    inclusion_check, leibniz_cohomology_dims, CoefficientModule, InclusionCheck, Limits,
};
use crate::lie_cohomology::lie_cohomology_dims;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityReport {
    pub name: Option<String>,
    pub dim: usize,
    pub is_lie: bool,
    pub is_leibniz: bool,
    /// `dim H^0, H^1, H^2` with adjoint coefficients; Lie algebras only.
    pub h_dims: Option<[usize; 3]>,
    /// `dim HL^0, HL^1, HL^2` with adjoint coefficients.
    pub hl_dims: [usize; 3],
    /// `H²(L,L) = 0`.
    pub absolutely_rigid: bool,
    /// Same condition, read as the sufficient criterion for Lie rigidity.
    pub lie_rigid_sufficient: bool,
    /// `HL²(L,L) = 0`.
    pub leibniz_rigid_sufficient: bool,
    /// Lie algebra with `dim H² ≠ dim HL²`.
    pub leibniz_rigidity_blocked: bool,
    /// Verification of `H² ⊂ HL²` via the skew embedding; Lie algebras only.
    pub inclusion: Option<InclusionCheck>,
    pub der_dim: usize,
    pub orbit_dim: usize,
    /// `n² − dim Der`: the component dimension when
    /// [`Self::component_dim_exact`] is set, otherwise a lower bound for the
    /// dimension of the orbit closure.
    pub component_dim_lower_bound: usize,
    pub component_dim_exact: bool,
}

pub fn analyze(a: &StructureConstants, limits: &Limits) -> Result<RigidityReport> {
    a.require_leibniz()?;
    let is_lie = a.is_lie();
    let hl = leibniz_cohomology_dims(a, CoefficientModule::Adjoint, 2, limits)?;
    let hl_dims = [hl[0], hl[1], hl[2]];
    let (h_dims, inclusion) = if is_lie {
        (Some(lie_cohomology_dims(a)?), Some(inclusion_check(a, limits)?))
    } else {
        (None, None)
    };
    let absolutely_rigid = h_dims.is_some_and(|h| h[2] == 0);
    let leibniz_rigid_sufficient = hl_dims[2] == 0;
    let leibniz_rigidity_blocked = h_dims.is_some_and(|h| h[2] != hl_dims[2]);
    let der_dim = a.der_dim();
    let orbit_dim = a.dim() * a.dim() - der_dim;
    Ok(RigidityReport {
        name: a.name().map(str::to_string),
        dim: a.dim(),
        is_lie,
        is_leibniz: true,
        h_dims,
        hl_dims,
        absolutely_rigid,
        lie_rigid_sufficient: absolutely_rigid,
        leibniz_rigid_sufficient,
        leibniz_rigidity_blocked,
        inclusion,
        der_dim,
        orbit_dim,
        component_dim_lower_bound: orbit_dim,
        component_dim_exact: absolutely_rigid || leibniz_rigid_sufficient,
    })
}

/// `n² − dim Der`; see [`RigidityReport::component_dim_lower_bound`].
pub fn component_dim(a: &StructureConstants) -> usize {
    a.dim() * a.dim() - a.der_dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn sl2_report() {
        let r = analyze(&catalog::sl2(), &Limits::default()).unwrap();
        assert!(r.absolutely_rigid && r.lie_rigid_sufficient && r.leibniz_rigid_sufficient);
        assert!(!r.leibniz_rigidity_blocked);
        assert_eq!(r.orbit_dim, 6);
        assert_eq!(r.h_dims, Some([0, 0, 0]));
        assert_eq!(r.hl_dims[2], 0);
    }

    #[test]
    fn abelian2_report() {
        let r = analyze(&catalog::abelian(2).unwrap(), &Limits::default()).unwrap();
        assert!(!r.absolutely_rigid);
        assert_eq!(r.h_dims.unwrap()[2], 2);
        assert_eq!(r.hl_dims[2], 8);
        assert_eq!(r.orbit_dim, 0);
        assert!(r.leibniz_rigidity_blocked);
        assert!(!r.component_dim_exact);
    }

    #[test]
    fn non_lie_report_has_no_lie_part() {
        let r = analyze(&catalog::leibniz_nilpotent2(), &Limits::default()).unwrap();
        assert!(!r.is_lie);
        assert_eq!(r.h_dims, None);
        assert!(!r.absolutely_rigid && !r.leibniz_rigidity_blocked);
    }

    #[test]
    fn component_dims() {
        assert_eq!(component_dim(&catalog::sl2()), 6);
        assert_eq!(component_dim(&catalog::nonabelian2()), 2);
        assert_eq!(component_dim(&catalog::abelian(3).unwrap()), 0);
    }
}
