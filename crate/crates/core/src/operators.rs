//! Exact application of the factored ladder operators.
//!
//! Every state this engine manipulates has the form
//!
//! ```text
//! psi(x) = exp(sigma x^2 / 2) * R(x),     sigma = -1 or +1,
//! ```
//!
//! with `R` a rational function. A first-order operator `±d/dx + G(x)`
//! with `G` a superpotential maps that form to the same form:
//!
//! ```text
//! ( d/dx + G) psi = exp(sigma x^2/2) ( sigma x R + R' + G R)
//! (-d/dx + G) psi = exp(sigma x^2/2) (-sigma x R - R' + G R)
//! ```
//!
//! so the whole third-order ladder action reduces to exact rational
//! arithmetic. The raising operator factors as (d/dx + W) after two
//! lowering-type factors (-d/dx + W1), (-d/dx + W2); the lowering operator
//! factors as (-d/dx + W) first, then (d/dx + W2), (d/dx + W1).

use crate::exact::{Polynomial, RationalFunction};
use crate::painleve::{superpotentials, Superpotentials};

/// Sign of the gaussian exponent x^2/2 carried by a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussianSign {
    Decaying,
    Growing,
}

impl GaussianSign {
    fn as_i64(self) -> i64 {
        match self {
            GaussianSign::Decaying => -1,
            GaussianSign::Growing => 1,
        }
    }
}

/// A state exp(sigma x^2/2) R(x).
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    pub sign: GaussianSign,
    pub rational: RationalFunction,
}

impl GaussianState {
    pub fn new(sign: GaussianSign, rational: RationalFunction) -> Self {
        GaussianState { sign, rational }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }
}

/// One first-order factor `d_sign * d/dx + g`.
#[derive(Debug, Clone)]
pub struct FirstOrderOp {
    pub d_sign: i64,
    pub g: RationalFunction,
}

impl FirstOrderOp {
    pub fn raising(g: RationalFunction) -> Self {
        FirstOrderOp { d_sign: 1, g }
    }

    pub fn lowering(g: RationalFunction) -> Self {
        FirstOrderOp { d_sign: -1, g }
    }

    /// Applies the factor to a gaussian state, staying in exact arithmetic.
    pub fn apply(&self, state: &GaussianState) -> GaussianState {
        let sigma = state.rational.mul_poly(&Polynomial::from_int_coeffs(&[
            0,
            self.d_sign * state.sign.as_i64(),
        ]));
        let deriv = state.rational.derivative();
        let deriv = if self.d_sign == 1 { deriv } else { -deriv };
        let rational = &(&sigma + &deriv) + &(&self.g * &state.rational);
        GaussianState::new(state.sign, rational)
    }
}

/// The two third-order ladder operators of one model, as ordered lists of
/// first-order factors (applied left to right).
pub struct LadderOperators {
    raising_factors: Vec<FirstOrderOp>,
    lowering_factors: Vec<FirstOrderOp>,
}

impl LadderOperators {
    pub fn for_model(p: u32, q: u32) -> Self {
        let Superpotentials { w1, w2, w_full, .. } = superpotentials(p, q);
        let w1 = w1.as_rational_function();
        let w2 = w2.as_rational_function();
        let w = w_full.as_rational_function();
        LadderOperators {
            raising_factors: vec![
                FirstOrderOp::lowering(w1.clone()),
                FirstOrderOp::lowering(w2.clone()),
                FirstOrderOp::raising(w.clone()),
            ],
            lowering_factors: vec![
                FirstOrderOp::lowering(w),
                FirstOrderOp::raising(w2),
                FirstOrderOp::raising(w1),
            ],
        }
    }

    pub fn raise(&self, state: &GaussianState) -> GaussianState {
        self.raising_factors
            .iter()
            .fold(state.clone(), |s, op| op.apply(&s))
    }

    pub fn lower(&self, state: &GaussianState) -> GaussianState {
        self.lowering_factors
            .iter()
            .fold(state.clone(), |s, op| op.apply(&s))
    }
}
