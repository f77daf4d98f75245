//! Exact computations with finite dimensional path algebras, their module
//! categories, the bounded homotopy category of projectives, and silting
//! mutation: classification, mutation, completion, torsion-class
//! constructions, and enumeration of silting quivers.
//!
//! Everything is computed over an exact field (the rationals or a prime
//! field); there is no floating point anywhere, and identical inputs
//! produce byte-identical outputs.

pub mod algebra;
pub mod complex;
pub mod error;
pub mod fdalg;
pub mod field;
pub mod matrix;
pub mod knit;
pub mod naka;
pub mod presets;
pub mod quiver;
pub mod rep;

pub use algebra::{build, build_algebra, Algebra, SymmetryStatus};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use quiver::{AlgebraPresentation, Quiver, VertexId};
