//! Rank-metric codes over GF(q^m), σ-subspace polynomial families, and
//! constructive witnesses against efficient list decoding.

// Parameter ranges are kept in the `a + 1 <= b` form they are stated in.
#![allow(clippy::int_plus_one, clippy::too_many_arguments)]

pub mod analyze;
pub mod bounds;
pub mod codes;
pub mod error;
pub mod families;
pub mod field;
pub mod lift;
pub mod linalg;
pub mod recipe;
pub mod sigma_poly;
pub mod subspace;
pub mod witness;

/// Version stamped into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldParams, FieldSpec};
