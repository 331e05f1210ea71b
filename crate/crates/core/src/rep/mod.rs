//! Representation schemes: coordinates, traces, lifted derivations and the
//! Poisson bracket on trace functions.

pub mod dimension;
pub mod gl;
pub mod matrix;
pub mod poisson;
pub mod poly;
pub mod scheme;

pub use dimension::DimensionVector;
pub use gl::gl_transform;
pub use matrix::{PolyMatrix, RatMatrix};
pub use poisson::{bracket_with_polynomial, poisson_bracket, TraceExpression};
pub use poly::{Monomial, Polynomial, Var};
pub use scheme::{
    evaluate, generic_matrix, idempotent_matrix, lift_derivation, trace, LiftedDerivation,
    RepSpace,
};
