//! JSON algebra files.
//!
//! ```json
//! {
//!   "basis": ["h", "e", "f"],
//!   "dim": 3,
//!   "flags": { "skew_complete": true },
//!   "name": "sl2",
//!   "products": [
//!     { "left": "h", "out": { "e": "2" }, "right": "e" },
//!     { "left": "h", "out": { "f": "-2" }, "right": "f" },
//!     { "left": "e", "out": { "h": "1" }, "right": "f" }
//!   ]
//! }
//! ```
//!
//! Coefficients are strings `-?[0-9]+(/[1-9][0-9]*)?`. With `skew_complete`
//! every product whose left label precedes the right one in `basis` is also
//! entered with the opposite sign for the swapped pair.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use liealg_core::exactmath::{Rat, Scalar};
use liealg_core::StructureConstants;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub basis: Vec<String>,
    pub dim: usize,
    #[serde(default)]
    pub flags: Flags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub products: Vec<ProductRecord>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    #[serde(default)]
    pub skew_complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductRecord {
    pub left: String,
    pub out: BTreeMap<String, String>,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FileError {
    /// Malformed JSON or a field with the wrong shape.
    Parse { locus: String, message: String },
    DuplicateProduct { left: String, right: String },
    UnknownLabel { locus: String, label: String },
    Invalid(String),
}

impl FileError {
    pub fn code(&self) -> &'static str {
        match self {
            FileError::Parse { .. } | FileError::Invalid(_) => "PARSE_ERROR",
            FileError::DuplicateProduct { .. } => "DUPLICATE_PRODUCT",
            FileError::UnknownLabel { .. } => "UNKNOWN_LABEL",
        }
    }
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Parse { locus, message } => write!(f, "{locus}: {message}"),
            FileError::DuplicateProduct { left, right } => write!(f, "product [{left},{right}] given twice"),
            FileError::UnknownLabel { locus, label } => write!(f, "{locus}: unknown basis label `{label}`"),
            FileError::Invalid(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for FileError {}

fn parse_err(locus: impl Into<String>, message: impl Into<String>) -> FileError {
    FileError::Parse {
        locus: locus.into(),
        message: message.into(),
    }
}

pub(crate) fn json_error(e: &serde_json::Error) -> FileError {
    parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string())
}

/// Strict rational literal: optional minus, digits, optional `/` and a
/// denominator without leading zero.
pub fn parse_rational(s: &str) -> Option<Rat> {
    let body = s.strip_prefix('-').unwrap_or(s);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) {
        return None;
    }
    if let Some(d) = den {
        if !digits(d) || d.starts_with('0') {
            return None;
        }
    }
    s.parse().ok()
}

pub fn parse_algebra(bytes: &[u8]) -> Result<StructureConstants, FileError> {
    let file: AlgebraFile = serde_json::from_slice(bytes).map_err(|e| json_error(&e))?;
    file.to_structure()
}

impl AlgebraFile {
    pub fn to_structure(&self) -> Result<StructureConstants, FileError> {
        if self.dim != self.basis.len() {
            return Err(parse_err(
                "dim",
                format!("dim is {} but basis has {} labels", self.dim, self.basis.len()),
            ));
        }
        let mut a = StructureConstants::new(self.basis.clone()).map_err(|e| parse_err("basis", e.to_string()))?;
        if let Some(n) = &self.name {
            a = a.with_name(n.clone());
        }
        let index: HashMap<&str, usize> = self.basis.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let lookup = |locus: String, label: &str| {
            index.get(label).copied().ok_or_else(|| FileError::UnknownLabel {
                locus,
                label: label.to_string(),
            })
        };

        let mut entries: BTreeMap<(usize, usize), Vec<Rat>> = BTreeMap::new();
        let mut insert = |i: usize, j: usize, v: Vec<Rat>| {
            if entries.insert((i, j), v).is_some() {
                return Err(FileError::DuplicateProduct {
                    left: self.basis[i].clone(),
                    right: self.basis[j].clone(),
                });
            }
            Ok(())
        };
        for (p, rec) in self.products.iter().enumerate() {
            let i = lookup(format!("products[{p}].left"), &rec.left)?;
            let j = lookup(format!("products[{p}].right"), &rec.right)?;
            let mut v = vec![Rat::zero(); self.dim];
            for (label, coeff) in &rec.out {
                let k = lookup(format!("products[{p}].out"), label)?;
                v[k] = parse_rational(coeff).ok_or_else(|| {
                    parse_err(format!("products[{p}].out.{label}"), format!("`{coeff}` is not a rational literal"))
                })?;
            }
            if self.flags.skew_complete && i < j {
                insert(j, i, v.iter().map(Scalar::neg).collect())?;
            }
            insert(i, j, v)?;
        }
        for ((i, j), v) in entries {
            a.set_product(i, j, v).map_err(|e| FileError::Invalid(e.to_string()))?;
        }
        Ok(a)
    }

    /// Canonical form: full table in `(left, right)` basis order, zero
    /// coefficients dropped, `skew_complete` off.
    pub fn from_structure(a: &StructureConstants) -> Self {
        let names = a.basis_names();
        let products = a
            .products()
            .map(|((i, j), v)| ProductRecord {
                left: names[i].clone(),
                out: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !Scalar::is_zero(*c))
                    .map(|(k, c)| (names[k].clone(), c.to_string()))
                    .collect(),
                right: names[j].clone(),
            })
            .filter(|r| !r.out.is_empty())
            .collect();
        AlgebraFile {
            basis: names.to_vec(),
            dim: a.dim(),
            flags: Flags::default(),
            name: a.name().map(str::to_string),
            products,
        }
    }
}

pub fn render_algebra(a: &StructureConstants) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_structure(a)).expect("serializable");
    s.push('\n');
    s
}
