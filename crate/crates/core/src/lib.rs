//! Exact-plus-numerical engine for a family of one-dimensional Schrödinger
//! models with gapped spectra, built from generalized Hermite polynomials
//! and the rational solutions of the fourth Painlevé equation.
//!
//! The exact layer (rational polynomial arithmetic, the H_{p,q} family,
//! Painlevé IV certification, spectra, the orthogonal polynomial families
//! and their ladder algebra) never touches floating point; the numerical
//! layer independently cross-checks it with adaptive quadrature and a
//! finite-difference eigensolver.

pub mod algebra;
pub mod error;
pub mod exact;
pub mod genhermite;
pub mod model;
pub mod numverify;
pub mod operators;
pub mod output;
pub mod painleve;
pub mod ppoly;

pub use error::ExactError;
pub use exact::{Polynomial, RationalFunction};
