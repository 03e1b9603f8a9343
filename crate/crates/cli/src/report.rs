//! JSON and text renderings of command results. JSON objects have sorted
//! keys; text output is one `key: value` fact per line.

use std::fmt::Write as _;

use liealg_core::algebra::InvariantVector;
use liealg_core::catalog::CatalogEntry;
use liealg_core::degeneration::{ContractionResult, ScreenOutcome, ScreenViolation};
use liealg_core::exactmath::{Rat, Scalar};
use liealg_core::rigidity::RigidityReport;
use liealg_core::{IdentityKind, IdentityWitness, StructureConstants};
use serde_json::{json, Value};

use crate::algebra_file::AlgebraFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// A rendered command result.
pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dims(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// `2*e - 1/2*f`, or `0`.
pub fn format_vector(names: &[String], v: &[Rat]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate().filter(|(_, c)| !Scalar::is_zero(*c)) {
        let neg = c < &Rat::zero();
        let mag = if neg { Scalar::neg(c) } else { c.clone() };
        let sign = match (out.is_empty(), neg) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sign);
        if !Scalar::is_zero(&Scalar::sub(&mag, &Rat::one())) {
            let _ = write!(out, "{mag}*");
        }
        out.push_str(&names[k]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn table_lines(a: &StructureConstants) -> String {
    let names = a.basis_names();
    let mut s = String::new();
    for ((i, j), v) in a.products() {
        if v.iter().any(|c| !Scalar::is_zero(c)) {
            let _ = writeln!(s, "  [{},{}] = {}", names[i], names[j], format_vector(names, v));
        }
    }
    if s.is_empty() {
        s.push_str("  (all products zero)\n");
    }
    s
}

fn algebra_value(a: &StructureConstants) -> Value {
    serde_json::to_value(AlgebraFile::from_structure(a)).expect("serializable")
}

fn label(a: &StructureConstants) -> String {
    a.name().unwrap_or("(unnamed)").to_string()
}

fn witness_value(a: &StructureConstants, w: &IdentityWitness) -> Value {
    let kind = match w.kind {
        IdentityKind::Antisymmetry => "antisymmetry",
        IdentityKind::Jacobi => "jacobi",
        IdentityKind::Leibniz => "leibniz",
    };
    json!({
        "kind": kind,
        "indices": w.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "labels": w.indices.iter().map(|&i| a.basis_names()[i].clone()).collect::<Vec<_>>(),
        "residual": w.residual.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn check(a: &StructureConstants) -> Report {
    let lie = a.lie_witness();
    let leibniz = a.leibniz_witnesses();
    let json = json!({
        "command": "check",
        "name": a.name(),
        "dim": a.dim(),
        "is_lie": lie.is_none(),
        "is_leibniz": leibniz.is_empty(),
        "lie_witness": lie.as_ref().map(|w| witness_value(a, w)),
        "leibniz_witnesses": leibniz.iter().map(|w| witness_value(a, w)).collect::<Vec<_>>(),
    });
    let mut text = format!("algebra: {} (dim {})\n", label(a), a.dim());
    let _ = writeln!(text, "lie: {}", yes(lie.is_none()));
    if let Some(w) = &lie {
        let _ = writeln!(text, "  {w}");
    }
    let _ = writeln!(text, "leibniz: {}", yes(leibniz.is_empty()));
    for w in &leibniz {
        let _ = writeln!(text, "  {w}");
    }
    Report { json, text }
}

fn invariants_value(v: &InvariantVector) -> Value {
    json!({
        "dim": v.dim,
        "lcs_dims": v.lcs_dims,
        "derived_dims": v.derived_dims,
        "center_dim": v.center_dim,
        "der_dim": v.der_dim,
        "orbit_dim": v.dim * v.dim - v.der_dim,
        "is_lie": v.is_lie,
        "is_leibniz": v.is_leibniz,
    })
}

fn invariants_text(v: &InvariantVector) -> String {
    format!(
        "lower central series dims: {}\nderived series dims: {}\ncenter dim: {}\nder dim: {}\norbit dim: {}\nlie: {}\nleibniz: {}\n",
        dims(&v.lcs_dims),
        dims(&v.derived_dims),
        v.center_dim,
        v.der_dim,
        v.dim * v.dim - v.der_dim,
        yes(v.is_lie),
        yes(v.is_leibniz),
    )
}

pub fn invariants(a: &StructureConstants) -> Report {
    let v = a.invariants();
    let mut json = invariants_value(&v);
    json["command"] = json!("invariants");
    json["name"] = json!(a.name());
    let text = format!("algebra: {} (dim {})\n{}", label(a), a.dim(), invariants_text(&v));
    Report { json, text }
}

pub fn cohom(a: &StructureConstants, theory: &str, coeff: &str, degree: usize, dim: usize) -> Report {
    let json = json!({
        "command": "cohom",
        "name": a.name(),
        "theory": theory,
        "coeff": coeff,
        "degree": degree,
        "dim": dim,
    });
    let sym = if theory == "lie" { "H" } else { "HL" };
    let text = format!("algebra: {} (dim {})\n{sym}^{degree}({coeff}): {dim}\n", label(a), a.dim());
    Report { json, text }
}

pub fn rigidity(r: &RigidityReport) -> Report {
    let inclusion = r.inclusion.as_ref().map(|c| {
        json!({
            "cocycles_preserved": c.cocycles_preserved,
            "coboundaries_preserved": c.coboundaries_preserved,
            "injective_on_cohomology": c.injective_on_cohomology,
        })
    });
    let json = json!({
        "command": "rigidity",
        "name": r.name,
        "dim": r.dim,
        "is_lie": r.is_lie,
        "is_leibniz": r.is_leibniz,
        "h_dims": r.h_dims,
        "hl_dims": r.hl_dims,
        "h2": r.h_dims.map(|h| h[2]),
        "hl2": r.hl_dims[2],
        "absolutely_rigid": r.absolutely_rigid,
        "lie_rigid_sufficient": r.lie_rigid_sufficient,
        "leibniz_rigid_sufficient": r.leibniz_rigid_sufficient,
        "leibniz_rigidity_blocked": r.leibniz_rigidity_blocked,
        "inclusion": inclusion,
        "der_dim": r.der_dim,
        "orbit_dim": r.orbit_dim,
        "component_dim_lower_bound": r.component_dim_lower_bound,
        "component_dim_exact": r.component_dim_exact,
    });
    let mut t = format!(
        "algebra: {} (dim {})\nlie: {}\nleibniz: {}\n",
        r.name.as_deref().unwrap_or("(unnamed)"),
        r.dim,
        yes(r.is_lie),
        yes(r.is_leibniz)
    );
    match r.h_dims {
        Some(h) => {
            let _ = writeln!(t, "H^0 H^1 H^2 (adjoint): {}", dims(&h));
        }
        None => t.push_str("H^0 H^1 H^2 (adjoint): n/a (not Lie)\n"),
    }
    let _ = writeln!(t, "HL^0 HL^1 HL^2 (adjoint): {}", dims(&r.hl_dims));
    let _ = writeln!(
        t,
        "absolutely rigid (H^2 = 0; sufficient for Lie rigidity, not necessary): {}",
        yes(r.absolutely_rigid)
    );
    let _ = writeln!(
        t,
        "Leibniz rigid by sufficient test (HL^2 = 0): {}",
        yes(r.leibniz_rigid_sufficient)
    );
    let _ = writeln!(
        t,
        "Leibniz rigidity blocked (necessary condition H^2 = HL^2 fails): {}",
        yes(r.leibniz_rigidity_blocked)
    );
    if let Some(c) = &r.inclusion {
        let ok = c.cocycles_preserved && c.coboundaries_preserved && c.injective_on_cohomology;
        let _ = writeln!(t, "H^2 -> HL^2 inclusion verified: {}", yes(ok));
    }
    let _ = writeln!(t, "der dim: {}", r.der_dim);
    let _ = writeln!(t, "orbit dim: {}", r.orbit_dim);
    let kind = if r.component_dim_exact {
        "component dimension"
    } else {
        "lower bound"
    };
    let _ = writeln!(t, "n^2 - der dim: {} ({kind})", r.component_dim_lower_bound);
    Report { json, text: t }
}

pub fn contraction(source: &StructureConstants, r: &ContractionResult) -> Report {
    let names = source.basis_names();
    let triple = |i: usize, j: usize, k: usize| (names[i].clone(), names[j].clone(), names[k].clone());
    let exponents = r.exponent_table.as_ref().map(|t| {
        t.iter()
            .map(|(&(i, j, k), e)| {
                let (l, rr, o) = triple(i, j, k);
                json!({"left": l, "right": rr, "out": o, "exponent": e})
            })
            .collect::<Vec<_>>()
    });
    let constants = r.path_constants.as_ref().map(|t| {
        t.iter()
            .map(|(&(i, j, k), v)| {
                let (l, rr, o) = triple(i, j, k);
                json!({"left": l, "right": rr, "out": o, "value": v.to_string()})
            })
            .collect::<Vec<_>>()
    });
    let route = if r.exponent_table.is_some() { "diagonal" } else { "path" };
    let json = json!({
        "command": "contract",
        "route": route,
        "classification": r.classification.as_str(),
        "limit": algebra_value(&r.limit),
        "exponents": exponents,
        "path_constants": constants,
    });
    let mut t = format!("source: {} (dim {})\nroute: {route}\n", label(source), source.dim());
    let _ = writeln!(t, "classification: {}", r.classification.as_str());
    t.push_str("limit:\n");
    t.push_str(&table_lines(&r.limit));
    if let Some(ex) = &r.exponent_table {
        t.push_str("exponents:\n");
        for (&(i, j, k), e) in ex {
            let _ = writeln!(t, "  [{},{}] -> {}: t^{e}", names[i], names[j], names[k]);
        }
    }
    if let Some(pc) = &r.path_constants {
        t.push_str("path constants:\n");
        for (&(i, j, k), v) in pc {
            let _ = writeln!(t, "  [{},{}] -> {}: {v}", names[i], names[j], names[k]);
        }
    }
    Report { json, text: t }
}

fn violation_value(v: &ScreenViolation) -> Value {
    let (lam, mu) = match v {
        ScreenViolation::OrbitDimension { lam, mu } | ScreenViolation::Center { lam, mu } => (json!(lam), json!(mu)),
        ScreenViolation::LowerCentralSeries { lam, mu } | ScreenViolation::DerivedSeries { lam, mu } => {
            (json!(lam), json!(mu))
        }
        ScreenViolation::LieIdentity | ScreenViolation::LeibnizIdentity => (json!(true), json!(false)),
    };
    json!({"condition": v.code(), "lam": lam, "mu": mu})
}

pub fn screen(lam: &StructureConstants, mu: &StructureConstants, o: &ScreenOutcome) -> Report {
    let (outcome, improper, violations) = match o {
        ScreenOutcome::Pass { improper } => ("pass", *improper, Vec::new()),
        ScreenOutcome::Fail(v) => ("fail", false, v.iter().map(violation_value).collect()),
    };
    let json = json!({
        "command": "screen",
        "lam": lam.name(),
        "mu": mu.name(),
        "outcome": outcome,
        "improper": improper,
        "violations": violations,
    });
    let mut t = format!("screen: {} -> {}\noutcome: {outcome}", label(lam), label(mu));
    if improper {
        t.push_str(" (identical tables, improper)");
    }
    t.push('\n');
    if let ScreenOutcome::Fail(v) = o {
        for x in v {
            let _ = writeln!(t, "  violated: {}", x.code());
        }
    }
    t.push_str("note: passing is necessary, not sufficient, for a degeneration\n");
    Report { json, text: t }
}

pub fn catalog_list(entries: &[CatalogEntry]) -> Report {
    let json = json!({
        "command": "catalog_list",
        "entries": entries.iter().map(|e| json!({
            "name": e.name,
            "arity": e.arity,
            "lie": e.lie,
            "doc": e.doc,
        })).collect::<Vec<_>>(),
    });
    let mut t = String::new();
    for e in entries {
        let _ = writeln!(t, "{}", e.doc);
    }
    Report { json, text: t }
}

pub fn catalog_show(e: &CatalogEntry, params: &[usize], a: &StructureConstants) -> Report {
    let v = a.invariants();
    let json = json!({
        "command": "catalog_show",
        "name": e.name,
        "params": params,
        "doc": e.doc,
        "algebra": algebra_value(a),
        "invariants": invariants_value(&v),
    });
    let mut t = format!("{}\nalgebra: {} (dim {})\nbasis: {}\n", e.doc, label(a), a.dim(), a.basis_names().join(" "));
    t.push_str("products:\n");
    t.push_str(&table_lines(a));
    t.push_str(&invariants_text(&v));
    Report { json, text: t }
}
