//! Independent floating-point verification of the exact layer.
//!
//! Nothing here feeds back into the exact computations: adaptive quadrature
//! reproduces orthogonality and norm ratios of the polynomial families, and
//! a finite-difference eigensolver reproduces the gapped spectrum from the
//! potential alone. Tolerances come from the error models of the methods
//! (composite Simpson and second-order central differences), not from the
//! quantities being checked.

pub mod fdsolve;
pub mod quad;
pub mod suite;

pub use fdsolve::{eigenfunction_residual, fd_spectrum, FdSolverConfig};
pub use quad::{gram_matrix, inner_product, Quadrature, QuadratureConfig};
pub use suite::{run_suite, CheckResult, SuiteKind, SuiteReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumVerifyError {
    /// The adaptive quadrature hit its depth cap before meeting tolerance.
    #[error("quadrature did not converge within depth {depth}")]
    NonConvergence { depth: u32 },
}
