//! Exact computations on finite-dimensional Lie and Leibniz algebras given
//! by rational structure constants: identity checks, Chevalley–Eilenberg and
//! Loday cohomology dimensions, rigidity indicators, orbit dimensions, and
//! contractions over ℚ(t).

pub mod algebra;
pub mod catalog;
pub mod degeneration;
pub mod error;
pub mod exactmath;
pub mod leibniz_cohomology;
pub mod lie_cohomology;
pub mod rigidity;

pub use algebra::{IdentityKind, IdentityWitness, InvariantVector, StructureConstants};
pub use error::{Error, Result};
