//! Exact algebra for Murasugi polynomials of periodic knots.
//!
//! The pipeline runs from a two-component link (braid word or group
//! presentation) through Fox calculus to the two-variable Alexander
//! polynomial `Δ_L(x, y)`, projects it into `Z[Z/p × Z]`, and decides
//! whether the result factors as `a(g,t)·a(g^-1,t^-1)` up to `±g^r t^s`
//! with `a(g,1) = 1`.

pub mod braid;
pub mod dense;
pub mod error;
pub mod factor;
pub mod fox;
pub mod group_ring;
pub mod intpoly;
pub mod laurent;
pub mod matrix;
pub mod norm;
pub mod presentation;
pub mod text;

pub use braid::{BraidWord, LinkInfo};
pub use error::{Error, Result};
pub use group_ring::{GroupRingElem, UnitGR};
pub use laurent::{LaurentPoly1, LaurentPoly2, UnitMonomial2, Variable};
pub use matrix::Matrix;
pub use presentation::{GroupPresentation, Letter, Word};
