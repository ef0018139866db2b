//! Error types shared by the exact-arithmetic layer.

use crate::exact::Polynomial;
use num_rational::BigRational;
use thiserror::Error;

/// Failures of exact polynomial / rational-function arithmetic.
///
/// Every variant indicates either a violated caller contract or a broken
/// algebraic invariant upstream; none of them is a recoverable runtime
/// condition in a correct pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExactError {
    /// Polynomial division left a nonzero remainder where an exact quotient
    /// was required.
    #[error("inexact polynomial division, remainder {remainder}")]
    InexactDivision { remainder: Polynomial },

    /// Division by the zero rational function.
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,

    /// Logarithmic derivative of the zero polynomial.
    #[error("logarithmic derivative of the zero polynomial")]
    ZeroPolynomial,

    /// Evaluation of a rational function at a zero of its denominator.
    #[error("evaluation at a pole: denominator vanishes at x = {at}")]
    PoleEvaluation { at: BigRational },
}
