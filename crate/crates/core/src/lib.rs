//! Exact computations with the necklace Lie bracket.
//!
//! The crate models the path algebra of a doubled quiver over the rationals,
//! its cyclic quotient (necklaces) with the necklace Lie bracket, the
//! deformed preprojective relation, and the coordinate ring of the
//! representation scheme together with the Poisson bracket it induces on
//! trace functions.
//!
//! ```
//! use necklace_core::{parse_quiver, parse_path, NecklaceElement};
//!
//! let quiver = parse_quiver("vertices 1; arrows a: 1 -> 1;").unwrap();
//! let a = parse_path("a", &quiver).unwrap();
//! let a_star = parse_path("a*", &quiver).unwrap();
//! let x = NecklaceElement::from_path(&quiver, &a);
//! let y = NecklaceElement::from_path(&quiver, &a_star);
//! assert_eq!(x.bracket(&y).to_string(), "−1·e_1");
//! ```
// `len` counts arrows or terms; emptiness is `is_zero` / `is_trivial`.
#![allow(clippy::len_without_is_empty)]

pub mod algebra;
pub mod derivation;
pub mod dsl;
pub mod error;
pub mod necklace;
pub mod path;
pub mod preprojective;
pub mod quiver;
pub mod random;
pub mod rational;
pub mod rep;
pub mod verify;

pub use algebra::AlgebraElement;
pub use derivation::{derivation_apply, derivation_dp, necklace_bracket};
pub use dsl::{parse_path, parse_quiver};
pub use error::{Error, Result};
pub use necklace::{enumerate_necklaces, project, Necklace, NecklaceElement};
pub use path::Path;
pub use preprojective::{check_moment_invariance, deformed_relation, moment_element, Weight};
pub use quiver::{double, Arrow, ArrowData, BaseArrow, DoubledQuiver, Quiver, QuiverRef};
pub use rational::Rational;
pub use rep::{
    evaluate, gl_transform, idempotent_matrix, lift_derivation, poisson_bracket, trace,
    DimensionVector, PolyMatrix, Polynomial, RatMatrix, TraceExpression, Var,
};
