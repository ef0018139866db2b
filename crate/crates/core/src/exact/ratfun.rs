//! Reduced rational functions over the rational-coefficient polynomials.
//!
//! Canonical form: the denominator is monic and coprime to the numerator,
//! so equality is plain syntactic equality of the two polynomials.

use crate::error::ExactError;
use crate::exact::Polynomial;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num/den` in reduced, monic-denominator form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZeroFunction);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.divexact(&g)?, den.divexact(&g)?)
        };
        let lead_inv = den.leading().recip();
        Ok(RationalFunction {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Polynomial::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    /// The monomial `x` as a rational function.
    pub fn x() -> Self {
        RationalFunction::from_poly(Polynomial::x())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(numerator)` when the reduced denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RationalFunction) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZeroFunction);
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Derivative by the quotient rule, reduced.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RationalFunction::new(num, den).expect("nonzero denominator squared")
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        if p.is_zero() || self.is_zero() {
            return RationalFunction::zero();
        }
        let g = self.den.gcd(p);
        RationalFunction {
            num: &self.num * &p.divexact(&g).expect("gcd divides"),
            den: self.den.divexact(&g).expect("gcd divides"),
        }
    }

    /// Exact evaluation; fails on a pole.
    pub fn eval_rat(&self, x: &BigRational) -> Result<BigRational, ExactError> {
        let d = self.den.eval_rat(x);
        if d.is_zero() {
            return Err(ExactError::PoleEvaluation { at: x.clone() });
        }
        Ok(self.num.eval_rat(x) / d)
    }

    /// Float evaluation via Horner on both parts.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Reduce through gcds of the parts that can actually share factors;
        // with both inputs reduced the result below is already canonical.
        let d = self.den.gcd(&rhs.den);
        if d.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return RationalFunction { num, den };
        }
        let e1 = self.den.divexact(&d).expect("gcd divides");
        let e2 = rhs.den.divexact(&d).expect("gcd divides");
        let t = &(&self.num * &e2) + &(&rhs.num * &e1);
        if t.is_zero() {
            return RationalFunction::zero();
        }
        let g = t.gcd(&d);
        let num = t.divexact(&g).expect("gcd divides");
        let den = &e1 * &rhs.den.divexact(&g).expect("gcd divides denominator");
        RationalFunction { num, den }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // Cross-cancel before multiplying; with both inputs reduced the
        // result is already canonical.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.divexact(&g1).expect("gcd divides");
        let n2 = rhs.num.divexact(&g2).expect("gcd divides");
        let d1 = self.den.divexact(&g2).expect("gcd divides");
        let d2 = rhs.den.divexact(&g1).expect("gcd divides");
        RationalFunction {
            num: &n1 * &n2,
            den: &d1 * &d2,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_rf {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_rf!(Add, add);
forward_owned_rf!(Sub, sub);
forward_owned_rf!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

/// Logarithmic derivative `p'/p`, reduced. Fails on the zero polynomial.
pub fn log_derivative(p: &Polynomial) -> Result<RationalFunction, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    RationalFunction::new(p.derivative(), p.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::rat_i64;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = rf(&[1], &[0, 1]);
        let b = rf(&[0, 1], &[1]);
        assert_eq!(&a * &b, RationalFunction::one());
    }

    #[test]
    fn division_by_zero_function() {
        let a = rf(&[1], &[0, 1]);
        assert_eq!(
            a.div(&RationalFunction::zero()).unwrap_err(),
            ExactError::DivisionByZeroFunction
        );
    }

    #[test]
    fn log_derivative_cases() {
        // (2x)'/(2x) = 1/x
        assert_eq!(log_derivative(&p(&[0, 2])).unwrap(), rf(&[1], &[0, 1]));
        // (4x^2 + 2)'/(4x^2 + 2) = 4x / (2x^2 + 1)
        assert_eq!(
            log_derivative(&p(&[2, 0, 4])).unwrap(),
            rf(&[0, 4], &[1, 0, 2])
        );
        assert!(log_derivative(&Polynomial::one()).unwrap().is_zero());
        assert_eq!(
            log_derivative(&Polynomial::zero()).unwrap_err(),
            ExactError::ZeroPolynomial
        );
    }

    #[test]
    fn pole_evaluation_is_an_error() {
        let a = rf(&[1], &[0, 1]);
        assert!(matches!(
            a.eval_rat(&rat_i64(0)),
            Err(ExactError::PoleEvaluation { .. })
        ));
        assert_eq!(a.eval_rat(&rat_i64(2)).unwrap(), rat_i64(1) / rat_i64(2));
    }

    #[test]
    fn reduction_is_canonical() {
        // (8x^2 + 4) / (8x^3 - 4x) reduces to (2x^2 + 1)/(2x^3 - x), monic den.
        let r = rf(&[4, 0, 8], &[0, -4, 0, 8]);
        let twice = RationalFunction::new(r.num().clone(), r.den().clone()).unwrap();
        assert_eq!(r, twice);
        assert_eq!(r.den().leading(), rat_i64(1));
        assert!(r.num().gcd(r.den()).is_one());
    }

    #[test]
    fn polynomial_detection() {
        let r = rf(&[0, 0, 2], &[0, 1]);
        assert_eq!(r.as_polynomial().unwrap(), &p(&[0, 2]));
        assert!(rf(&[1], &[0, 1]).as_polynomial().is_none());
    }
}
