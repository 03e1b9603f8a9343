//! Named algebras used as fixtures and oracles, plus stored reference data.

use crate::algebra::{InvariantVector, StructureConstants};
use crate::error::{Error, Result};
use crate::exactmath::int;

/// Largest `3 + (2n+1)` accepted by [`semidirect_sl2`].
pub const SEMIDIRECT_MAX_DIM: usize = 64;

/// Description of a catalog family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Number of integer parameters (0 or 1).
    pub arity: usize,
    pub doc: &'static str,
    /// Declared Lie (otherwise only Leibniz).
    pub lie: bool,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "abelian",
        arity: 1,
        doc: "abelian(d): zero bracket on a d-dimensional space",
        lie: true,
    },
    CatalogEntry {
        name: "nonabelian2",
        arity: 0,
        doc: "nonabelian2: [e1,e2] = e2, the Borel subalgebra of sl2",
        lie: true,
    },
    CatalogEntry {
        name: "heisenberg",
        arity: 1,
        doc: "heisenberg(m): dim 2m+1, [e_i, e_{m+i}] = e_{2m+1}",
        lie: true,
    },
    CatalogEntry {
        name: "sl2",
        arity: 0,
        doc: "sl2: basis (h,e,f), [h,e] = 2e, [h,f] = -2f, [e,f] = h",
        lie: true,
    },
    CatalogEntry {
        name: "gl",
        arity: 1,
        doc: "gl(m): elementary matrices E_ab, [E_ab, E_cd] = δ_bc E_ad - δ_da E_cb",
        lie: true,
    },
    CatalogEntry {
        name: "leibniz_nilpotent2",
        arity: 0,
        doc: "leibniz_nilpotent2: [e1,e1] = e2, a Leibniz algebra that is not Lie",
        lie: false,
    },
    CatalogEntry {
        name: "semidirect_sl2",
        arity: 1,
        doc: "semidirect_sl2(n): sl2 acting on its irreducible (2n+1)-dimensional module, module abelian",
        lie: true,
    },
];

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Builds a catalog algebra by name.
pub fn get(name: &str, params: &[usize]) -> Result<StructureConstants> {
    let e = entry(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    if params.len() != e.arity {
        return Err(Error::BadParameter(format!(
            "{name} takes {} parameter(s), got {}",
            e.arity,
            params.len()
        )));
    }
    match name {
        "abelian" => abelian(params[0]),
        "nonabelian2" => Ok(nonabelian2()),
        "heisenberg" => heisenberg(params[0]),
        "sl2" => Ok(sl2()),
        "gl" => gl(params[0]),
        "leibniz_nilpotent2" => Ok(leibniz_nilpotent2()),
        "semidirect_sl2" => semidirect_sl2(params[0]),
        _ => unreachable!("entry table and constructors agree"),
    }
}

fn named(names: Vec<String>, label: String) -> StructureConstants {
    StructureConstants::new(names)
        .expect("catalog labels are distinct and nonempty")
        .with_name(label)
}

pub fn abelian(d: usize) -> Result<StructureConstants> {
    if d == 0 {
        return Err(Error::BadParameter("abelian(d) needs d >= 1".into()));
    }
    Ok(named((1..=d).map(|i| format!("e{i}")).collect(), format!("abelian({d})")))
}

pub fn nonabelian2() -> StructureConstants {
    let mut a = named(vec!["e1".into(), "e2".into()], "nonabelian2".into());
    a.add_skew(0, 1, 1, int(1)).expect("in range");
    a
}

pub fn heisenberg(m: usize) -> Result<StructureConstants> {
    if m == 0 {
        return Err(Error::BadParameter("heisenberg(m) needs m >= 1".into()));
    }
    let d = 2 * m + 1;
    let mut a = named((1..=d).map(|i| format!("e{i}")).collect(), format!("heisenberg({m})"));
    for i in 0..m {
        a.add_skew(i, m + i, 2 * m, int(1))?;
    }
    Ok(a)
}

pub fn sl2() -> StructureConstants {
    let mut a = named(vec!["h".into(), "e".into(), "f".into()], "sl2".into());
    a.add_skew(0, 1, 1, int(2)).expect("in range");
    a.add_skew(0, 2, 2, int(-2)).expect("in range");
    a.add_skew(1, 2, 0, int(1)).expect("in range");
    a
}

pub fn gl(m: usize) -> Result<StructureConstants> {
    if m == 0 {
        return Err(Error::BadParameter("gl(m) needs m >= 1".into()));
    }
    let idx = |a: usize, b: usize| a * m + b;
    let names = (0..m)
        .flat_map(|a| (0..m).map(move |b| format!("E{}{}", a + 1, b + 1)))
        .collect();
    let mut g = named(names, format!("gl({m})"));
    for (a, b, c, d) in (0..m).flat_map(|a| {
        (0..m).flat_map(move |b| (0..m).flat_map(move |c| (0..m).map(move |d| (a, b, c, d))))
    }) {
        if b == c {
            g.add_constant(idx(a, b), idx(c, d), idx(a, d), int(1))?;
        }
        if d == a {
            g.add_constant(idx(a, b), idx(c, d), idx(c, b), int(-1))?;
        }
    }
    Ok(g)
}

pub fn leibniz_nilpotent2() -> StructureConstants {
    let mut a = named(vec!["e1".into(), "e2".into()], "leibniz_nilpotent2".into());
    a.add_constant(0, 0, 1, int(1)).expect("in range");
    a
}

/// `sl2 ⋉ V` with `V` the irreducible module of dimension `2n+1` (highest
/// weight `2n`), basis `(h, e, f, v0, …, v_{2n})`:
/// `h·v_k = (2n−2k) v_k`, `e·v_k = k(2n−k+1) v_{k−1}`, `f·v_k = v_{k+1}`.
pub fn semidirect_sl2(n: usize) -> Result<StructureConstants> {
    if n == 0 {
        return Err(Error::BadParameter("semidirect_sl2(n) needs n >= 1".into()));
    }
    let dim = 3 + 2 * n + 1;
    if dim > SEMIDIRECT_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            size: dim,
            limit: SEMIDIRECT_MAX_DIM,
        });
    }
    let mut names: Vec<String> = vec!["h".into(), "e".into(), "f".into()];
    names.extend((0..=2 * n).map(|k| format!("v{k}")));
    let mut a = named(names, format!("semidirect_sl2({n})"));
    a.add_skew(0, 1, 1, int(2))?;
    a.add_skew(0, 2, 2, int(-2))?;
    a.add_skew(1, 2, 0, int(1))?;
    let v = |k: usize| 3 + k;
    let top = 2 * n as i64;
    for k in 0..=2 * n {
        let ki = k as i64;
        a.add_skew(0, v(k), v(k), int(top - 2 * ki))?;
        if k > 0 {
            a.add_skew(1, v(k), v(k - 1), int(ki * (top - ki + 1)))?;
        }
        if k < 2 * n {
            a.add_skew(2, v(k), v(k + 1), int(1))?;
        }
    }
    Ok(a)
}

/// Irreducible component counts `r(n)` and open orbit counts `s(n)` of the
/// variety of complex Lie algebras of dimension `n ≤ 7`. Stored, not
/// recomputed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceCounts {
    pub r: [u32; 7],
    pub s: [u32; 7],
}

impl ReferenceCounts {
    /// `r(n)` for `1 ≤ n ≤ 7`.
    pub fn components(&self, n: usize) -> Option<u32> {
        n.checked_sub(1).and_then(|i| self.r.get(i).copied())
    }

    /// `s(n)` for `1 ≤ n ≤ 7`.
    pub fn open_orbits(&self, n: usize) -> Option<u32> {
        n.checked_sub(1).and_then(|i| self.s.get(i).copied())
    }
}

pub fn reference_counts() -> ReferenceCounts {
    ReferenceCounts {
        r: [1, 1, 2, 4, 7, 17, 49],
        s: [1, 1, 1, 2, 3, 6, 14],
    }
}

/// Invariant vectors known in closed form, for cross-checking.
pub fn expected_invariants(name: &str, params: &[usize]) -> Option<InvariantVector> {
    let lie = |dim, lcs_dims: Vec<usize>, derived_dims: Vec<usize>, center_dim, der_dim| InvariantVector {
        dim,
        lcs_dims,
        derived_dims,
        center_dim,
        der_dim,
        is_lie: true,
        is_leibniz: true,
    };
    match (name, params) {
        ("abelian", &[d]) => Some(lie(d, vec![d, 0], vec![d, 0], d, d * d)),
        ("nonabelian2", []) => Some(lie(2, vec![2, 1, 1], vec![2, 1, 0], 0, 2)),
        // dim Der(h_m) = dim sp(2m) + 1 + 2m
        ("heisenberg", &[m]) => Some(lie(2 * m + 1, vec![2 * m + 1, 1, 0], vec![2 * m + 1, 1, 0], 1, 2 * m * m + 3 * m + 1)),
        ("sl2", []) => Some(lie(3, vec![3, 3], vec![3, 3], 0, 3)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_satisfies_its_identity() {
        let fixtures: Vec<(&str, Vec<usize>)> = vec![
            ("abelian", vec![3]),
            ("nonabelian2", vec![]),
            ("heisenberg", vec![1]),
            ("heisenberg", vec![2]),
            ("sl2", vec![]),
            ("gl", vec![2]),
            ("leibniz_nilpotent2", vec![]),
            ("semidirect_sl2", vec![1]),
            ("semidirect_sl2", vec![2]),
        ];
        for (name, params) in fixtures {
            let a = get(name, &params).unwrap();
            assert!(a.is_leibniz(), "{name}");
            assert_eq!(a.is_lie(), entry(name).unwrap().lie, "{name}");
        }
    }

    #[test]
    fn nonabelian2_table() {
        let a = nonabelian2();
        assert_eq!(a.gamma(0, 1, 1), int(1));
        assert_eq!(a.gamma(1, 0, 1), int(-1));
        assert_eq!(a.products().count(), 2);
    }

    #[test]
    fn semidirect_dimensions() {
        assert_eq!(semidirect_sl2(1).unwrap().dim(), 6);
        assert_eq!(semidirect_sl2(2).unwrap().dim(), 8);
        assert!(matches!(semidirect_sl2(0), Err(Error::BadParameter(_))));
        assert!(matches!(semidirect_sl2(40), Err(Error::DimensionTooLarge { .. })));
    }

    #[test]
    fn semidirect_restricts_to_sl2() {
        let a = semidirect_sl2(2).unwrap();
        let s = sl2();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(a.gamma(i, j, k), s.gamma(i, j, k));
                }
                for k in 3..a.dim() {
                    assert_eq!(a.gamma(i, j, k), int(0));
                }
            }
        }
        // module is an abelian ideal
        for i in 3..a.dim() {
            for j in 3..a.dim() {
                assert!(a.product(i, j).is_none());
            }
            for j in 0..a.dim() {
                for k in 0..3 {
                    assert_eq!(a.gamma(i, j, k), int(0));
                    assert_eq!(a.gamma(j, i, k), int(0));
                }
            }
        }
    }

    #[test]
    fn unknown_and_bad_parameters() {
        assert_eq!(get("so3", &[]), Err(Error::UnknownName("so3".into())));
        assert!(matches!(get("sl2", &[2]), Err(Error::BadParameter(_))));
        assert!(matches!(get("abelian", &[0]), Err(Error::BadParameter(_))));
    }

    #[test]
    fn reference_counts_values() {
        let rc = reference_counts();
        assert_eq!(rc.components(3), Some(2));
        assert_eq!(rc.open_orbits(7), Some(14));
        assert_eq!((rc.components(1), rc.open_orbits(1)), (Some(1), Some(1)));
        assert_eq!(rc.components(8), None);
        assert_eq!(rc.components(0), None);
    }

    #[test]
    fn closed_form_invariants() {
        for (name, params) in [("abelian", vec![2]), ("nonabelian2", vec![]), ("heisenberg", vec![1]), ("heisenberg", vec![2]), ("sl2", vec![])] {
            let a = get(name, &params).unwrap();
            assert_eq!(Some(a.invariants()), expected_invariants(name, &params), "{name}{params:?}");
        }
    }
}
