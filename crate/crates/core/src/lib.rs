//! Exact Moore-Penrose, Drazin and group inverses in rings with involution,
//! with executable checks of the existence theorems for expressions in two
//! projections.
//!
//! Rings come in two flavours: matrix rings over exact fields
//! ([`MatrixRing`] over ℚ, ℚ(i) and GF(p)) and finite structure-constant
//! algebras over GF(2) ([`StructureConstantAlgebra`]). Both implement
//! [`StarRing`] and [`InverseEngine`], so every theorem battery in
//! [`theorems`] runs unchanged on either.

pub mod algebra;
pub mod campaign;
pub mod commands;
pub mod context;
pub mod error;
pub mod format;
pub mod matrix;
pub mod ring;
pub mod scalar;
pub mod sources;
pub mod theorems;

pub use algebra::{example26_algebra, AlgebraElement, StructureConstantAlgebra};
pub use context::ProjectionPairContext;
pub use error::{AlgebraError, ContextError, MatrixError, ParseError, SourceError, TheoremError};
pub use format::AnyMatrix;
pub use matrix::{Matrix, MatrixRing};
pub use ring::{is_ep, is_projection, verify_drazin, verify_mp, El, InverseEngine, StarRing};
pub use scalar::{Fp, GaussianRational, Modulus, Rational, Scalar};
pub use sources::TrialSpec;
pub use theorems::{run_theorem, TheoremId, TheoremVerdict};
