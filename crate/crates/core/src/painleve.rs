//! Rational solutions of the fourth Painlevé equation
//!
//! ```text
//! w'' = (w')^2 / (2w) + (3/2) w^3 + 4x w^2 + 2(x^2 - alpha) w + beta / w
//! ```
//!
//! in the -1/x and -2x hierarchies, written in terms of generalized Hermite
//! polynomials, together with the Bäcklund identities and the first-order
//! superpotential factorization data used by the spectral modules.
//!
//! Certification is exact throughout: a solution claim is checked by
//! returning the residual rational function (zero iff the claim holds), so
//! a failure is directly diagnosable instead of a bare boolean.

use crate::exact::poly::rat_i64;
use crate::exact::{log_derivative, Polynomial, RationalFunction};
use crate::genhermite::gh;
use num_rational::BigRational;
use serde::Serialize;

/// The three solution families of the -1/x and -2x hierarchies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PivFamily {
    /// w = (ln H_{p+1,q}/H_{p,q})'
    One,
    /// w = (ln H_{p,q}/H_{p,q+1})'
    Two,
    /// w = -2x + (ln H_{p,q+1}/H_{p+1,q})'
    Three,
}

impl PivFamily {
    pub fn index(self) -> u8 {
        match self {
            PivFamily::One => 1,
            PivFamily::Two => 2,
            PivFamily::Three => 3,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(PivFamily::One),
            2 => Some(PivFamily::Two),
            3 => Some(PivFamily::Three),
            _ => None,
        }
    }
}

/// Parameter pair (alpha, beta) of the fourth Painlevé equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivParams {
    pub alpha: BigRational,
    pub beta: BigRational,
}

/// A certified rational solution: `piv_residual(&w, &params)` is the zero
/// rational function for every value this module constructs.
#[derive(Debug, Clone)]
pub struct PivSolution {
    pub w: RationalFunction,
    pub params: PivParams,
    pub family: PivFamily,
    pub p: u32,
    pub q: u32,
}

fn logd(p: u32, q: u32) -> RationalFunction {
    log_derivative(&gh(p, q)).expect("generalized Hermite polynomials are nonzero")
}

/// Builds the hierarchy solution in log-derivative form, with the family's
/// (alpha, beta).
pub fn make_w(family: PivFamily, p: u32, q: u32) -> PivSolution {
    let (pi, qi) = (p as i64, q as i64);
    let (w, alpha, beta) = match family {
        PivFamily::One => (
            &logd(p + 1, q) - &logd(p, q),
            rat_i64(2 * pi + qi + 1),
            rat_i64(-2 * qi * qi),
        ),
        PivFamily::Two => (
            &logd(p, q) - &logd(p, q + 1),
            rat_i64(-(pi + 2 * qi + 1)),
            rat_i64(-2 * pi * pi),
        ),
        PivFamily::Three => (
            &(&RationalFunction::from_poly(Polynomial::from_int_coeffs(&[0, -2]))
                + &logd(p, q + 1))
                - &logd(p + 1, q),
            rat_i64(qi - pi),
            rat_i64(-2 * (pi + qi + 1) * (pi + qi + 1)),
        ),
    };
    PivSolution {
        w,
        params: PivParams { alpha, beta },
        family,
        p,
        q,
    }
}

/// The same solutions in product form. Agrees exactly with `make_w`
/// wherever both are defined (the proportionality constant is 1). The
/// degenerate prefactors 2q = 0 (family one) and 2p = 0 (family two) give
/// the zero function, matching the log-derivative form.
pub fn make_w_ratio(family: PivFamily, p: u32, q: u32) -> RationalFunction {
    let assemble = |a: &Polynomial, b: &Polynomial, c: &Polynomial, d: &Polynomial, k: i64| {
        RationalFunction::new((a * b).scale(&rat_i64(k)), c * d)
            .expect("generalized Hermite denominators are nonzero")
    };
    match family {
        PivFamily::One => {
            if q == 0 {
                return RationalFunction::zero();
            }
            assemble(
                &gh(p + 1, q - 1),
                &gh(p, q + 1),
                &gh(p, q),
                &gh(p + 1, q),
                2 * q as i64,
            )
        }
        PivFamily::Two => {
            if p == 0 {
                return RationalFunction::zero();
            }
            assemble(
                &gh(p + 1, q),
                &gh(p - 1, q + 1),
                &gh(p, q + 1),
                &gh(p, q),
                -2 * p as i64,
            )
        }
        PivFamily::Three => assemble(
            &gh(p + 1, q + 1),
            &gh(p, q),
            &gh(p + 1, q),
            &gh(p, q + 1),
            -1,
        ),
    }
}

/// Residual of the fourth Painlevé equation cleared of denominators:
///
/// ```text
/// 2 w w'' - (w')^2 - 3 w^4 - 8x w^3 - 4 (x^2 - alpha) w^2 - 2 beta
/// ```
///
/// Zero iff `w` solves the equation at `params`.
pub fn piv_residual(w: &RationalFunction, params: &PivParams) -> RationalFunction {
    assert!(!w.is_zero(), "residual of the zero function");
    let wp = w.derivative();
    let wpp = wp.derivative();
    let w2 = w * w;
    let w3 = &w2 * w;
    let x = RationalFunction::x();
    let x2_minus_alpha = &(&x * &x) - &RationalFunction::constant(params.alpha.clone());
    let mut r = (w * &wpp).mul_poly(&Polynomial::from_int_coeffs(&[2]));
    r = &r - &(&wp * &wp);
    r = &r - &(&w3 * w).mul_poly(&Polynomial::from_int_coeffs(&[3]));
    r = &r - &(&x * &w3).mul_poly(&Polynomial::from_int_coeffs(&[8]));
    r = &r - &(&x2_minus_alpha * &w2).mul_poly(&Polynomial::from_int_coeffs(&[4]));
    &r - &RationalFunction::constant(rat_i64(2) * &params.beta)
}

/// Residuals of one Bäcklund identity against its two stated right-hand
/// sides; the contract is that both are identically zero.
#[derive(Debug, Clone)]
pub struct BacklundResidual {
    pub vs_product_form: RationalFunction,
    pub vs_log_form: RationalFunction,
}

impl BacklundResidual {
    pub fn both_zero(&self) -> bool {
        self.vs_product_form.is_zero() && self.vs_log_form.is_zero()
    }
}

/// The regular hierarchy solution w = (ln H_{p+1,2q}/H_{p,2q})' that the
/// spectral construction is built on; both its generalized Hermite indices
/// are even in the second slot, so it is free of real poles. Parameters
/// specialize to alpha = 2p + 2q + 1, beta = -8 q^2.
pub fn regular_w(p: u32, q: u32) -> PivSolution {
    let mut sol = make_w(PivFamily::One, p, 2 * q);
    sol.params = PivParams {
        alpha: rat_i64(2 * p as i64 + 2 * q as i64 + 1),
        beta: rat_i64(-8 * (q as i64) * (q as i64)),
    };
    sol
}

fn second_log_derivative(p: &Polynomial) -> RationalFunction {
    log_derivative(p).expect("nonzero polynomial").derivative()
}

fn two_xw_plus_w2(w: &RationalFunction) -> RationalFunction {
    &w.mul_poly(&Polynomial::from_int_coeffs(&[0, 2])) + &(w * w)
}

/// w' - (2xw + w^2) for the regular solution, minus each of its two closed
/// forms: the product form -8q H_{p+1,2q+1} H_{p+1,2q-1} / H_{p+1,2q}^2 + 4q
/// and the log form 2 (ln H_{p+1,2q})'' - 4q.
pub fn backlund_minus(p: u32, q: u32) -> BacklundResidual {
    assert!(q >= 1, "the product form needs the index 2q - 1");
    let w = regular_w(p, q).w;
    let lhs = &w.derivative() - &two_xw_plus_w2(&w);
    let fourq = RationalFunction::constant(rat_i64(4 * q as i64));
    let prod = RationalFunction::new(
        (&*gh(p + 1, 2 * q + 1) * &*gh(p + 1, 2 * q - 1)).scale(&rat_i64(-8 * q as i64)),
        gh(p + 1, 2 * q).pow(2),
    )
    .expect("nodeless denominator");
    let rhs_prod = &prod + &fourq;
    let rhs_log = &second_log_derivative(&gh(p + 1, 2 * q))
        .mul_poly(&Polynomial::from_int_coeffs(&[2]))
        - &fourq;
    BacklundResidual {
        vs_product_form: &lhs - &rhs_prod,
        vs_log_form: &lhs - &rhs_log,
    }
}

/// w' + (2xw + w^2) for the regular solution, minus each of its two closed
/// forms: the product form 8q H_{p,2q+1} H_{p,2q-1} / H_{p,2q}^2 - 4q and
/// the log form -2 (ln H_{p,2q})'' + 4q.
pub fn backlund_plus(p: u32, q: u32) -> BacklundResidual {
    assert!(q >= 1, "the product form needs the index 2q - 1");
    let w = regular_w(p, q).w;
    let lhs = &w.derivative() + &two_xw_plus_w2(&w);
    let fourq = RationalFunction::constant(rat_i64(4 * q as i64));
    let prod = RationalFunction::new(
        (&*gh(p, 2 * q + 1) * &*gh(p, 2 * q - 1)).scale(&rat_i64(8 * q as i64)),
        gh(p, 2 * q).pow(2),
    )
    .expect("nodeless denominator");
    let rhs_prod = &prod - &fourq;
    let rhs_log =
        &fourq - &second_log_derivative(&gh(p, 2 * q)).mul_poly(&Polynomial::from_int_coeffs(&[2]));
    BacklundResidual {
        vs_product_form: &lhs - &rhs_prod,
        vs_log_form: &lhs - &rhs_log,
    }
}

/// The second-order factorization coefficient
///
/// ```text
/// B(x) = w^2/4 - w'/2 - w''/(2w) + (w')^2/(4 w^2) + d/w^2 .
/// ```
pub fn compute_b(w: &RationalFunction, d: &BigRational) -> RationalFunction {
    assert!(!w.is_zero(), "B(x) needs a nonzero w");
    let wp = w.derivative();
    let wpp = wp.derivative();
    let quarter = BigRational::new(1.into(), 4.into());
    let half = BigRational::new(1.into(), 2.into());
    let w2 = w * w;
    let t1 = w2.mul_poly(&Polynomial::constant(quarter.clone()));
    let t2 = wp.mul_poly(&Polynomial::constant(half.clone()));
    let t3 = wpp
        .mul_poly(&Polynomial::constant(half))
        .div(w)
        .expect("w nonzero");
    let t4 = (&wp * &wp)
        .mul_poly(&Polynomial::constant(quarter))
        .div(&w2)
        .expect("w nonzero");
    let t5 = RationalFunction::constant(d.clone())
        .div(&w2)
        .expect("w nonzero");
    &(&(&(&t1 - &t2) - &t3) + &t4) + &t5
}

/// A superpotential of the form `linear * x + rational part`.
#[derive(Debug, Clone, PartialEq)]
pub struct Superpotential {
    pub linear: BigRational,
    pub rational: RationalFunction,
}

impl Superpotential {
    fn new(linear: i64, rational: RationalFunction) -> Self {
        Superpotential {
            linear: rat_i64(linear),
            rational,
        }
    }

    pub fn as_rational_function(&self) -> RationalFunction {
        &RationalFunction::from_poly(Polynomial::monomial(self.linear.clone(), 1)) + &self.rational
    }
}

/// The three first-order factorization coefficients of one model:
///
/// ```text
/// W1 = x + (ln H_{p+1,2q-1}/H_{p+1,2q})'
/// W2 = -x + (ln H_{p,2q}/H_{p+1,2q-1})'
/// W  = -x + (ln H_{p,2q}/H_{p+1,2q})'  = -(x + w)
/// ```
///
/// They satisfy W1 + W2 = -w and W1 W2 + W2' = B(w, -4q^2) exactly, which
/// certifies the second-order factor against its first-order split. For
/// q = 0 everything degenerates to the harmonic forms W = -x, W1 = x,
/// W2 = -x.
#[derive(Debug, Clone)]
pub struct Superpotentials {
    pub w: RationalFunction,
    pub w1: Superpotential,
    pub w2: Superpotential,
    pub w_full: Superpotential,
}

pub fn superpotentials(p: u32, q: u32) -> Superpotentials {
    if q == 0 {
        return Superpotentials {
            w: RationalFunction::zero(),
            w1: Superpotential::new(1, RationalFunction::zero()),
            w2: Superpotential::new(-1, RationalFunction::zero()),
            w_full: Superpotential::new(-1, RationalFunction::zero()),
        };
    }
    let w = regular_w(p, q).w;
    let w1 = Superpotential::new(1, &logd(p + 1, 2 * q - 1) - &logd(p + 1, 2 * q));
    let w2 = Superpotential::new(-1, &logd(p, 2 * q) - &logd(p + 1, 2 * q - 1));
    let w_full = Superpotential::new(-1, &logd(p, 2 * q) - &logd(p + 1, 2 * q));
    Superpotentials { w, w1, w2, w_full }
}
