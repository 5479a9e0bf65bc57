//! Exact computations around the braid group action on complexes of
//! projective modules over the zigzag ring, bigraded intersection numbers of
//! curves on the punctured disc, and the Burau representation as a
//! decategorified cross-check.
//!
//! The three pillars:
//!
//! * [`algebra`] and [`complexes`]: the graded ring `A_m`, bounded complexes
//!   of shifted projectives, Gaussian-elimination reduction, and Hom-space
//!   Poincaré polynomials over the integers.
//! * [`braid`]: the twist functors and their inverses, braid-word
//!   application, Grothendieck classes, Temperley-Lieb object checks.
//! * [`curves`]: admissible bigraded curves in normal form, half-twists via
//!   string rewriting, bigraded and geometric intersection numbers, the
//!   curve-to-complex map, and identity detection for braid words.
//!
//! [`burau`] supplies the exact Laurent-matrix oracle, and [`json`] the
//! machine-readable output forms.

pub mod algebra;
pub mod braid;
pub mod burau;
pub mod complexes;
pub mod curves;
pub mod error;
pub mod json;
pub mod poly;
pub mod snf;
pub mod suites;

pub use algebra::{AlgebraElement, AlgebraSpec, Coefficients, Path};
pub use braid::BraidWord;
pub use burau::LaurentMatrix;
pub use complexes::{HomPoincare, ProjComplex, Summand};
pub use curves::{BigradedNormalCurve, KString, KStringType};
pub use error::Error;
pub use poly::{BigradedPoly, HalfInt, LaurentPoly};
