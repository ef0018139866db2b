//! Dense univariate polynomials with arbitrary-precision rational coefficients.
//!
//! The coefficient vector is stored lowest power first and kept canonical:
//! no trailing zero coefficient, so the zero polynomial is the empty vector
//! and `degree` of zero is `None` rather than a number.

use crate::error::ExactError;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub fn rat_i64(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients, lowest power first, trimming
    /// trailing zeros into canonical form.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// Convenience constructor from integer coefficients, lowest power first.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat_i64(c)).collect())
    }

    /// `c * x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let lead = self.leading();
        self.scale(&lead.recip())
    }

    /// First formal derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_i64(k as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    /// `order`-th formal derivative.
    pub fn derivative_n(&self, order: u32) -> Polynomial {
        let mut p = self.clone();
        for _ in 0..order {
            p = p.derivative();
        }
        p
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = q * div + r` and `deg r < deg div`. Panics on zero divisor.
    pub fn div_rem(&self, div: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        if self.degree().is_none_or(|d| d < dd) {
            return (Polynomial::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dn = rem.len() - 1;
        let lead_inv = div.leading().recip();
        let mut quot = vec![BigRational::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in div.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + j] = &rem[k + j] - t;
                }
            }
            quot[k] = c;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Exact division. Fails with `InexactDivision` if the remainder is
    /// nonzero; an inexact quotient in this codebase always means a broken
    /// algebraic identity upstream, never an expected condition.
    pub fn divexact(&self, div: &Polynomial) -> Result<Polynomial, ExactError> {
        assert!(!div.is_zero(), "exact polynomial division by zero");
        let (q, r) = self.div_rem(div);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::InexactDivision { remainder: r })
        }
    }

    /// Monic greatest common divisor via a primitive pseudo-remainder
    /// sequence over the integers, which keeps coefficient growth in check.
    /// Panics if both inputs are zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = int_primitive(self);
        let mut b = int_primitive(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive_vec(r);
        }
        Polynomial::new(a.into_iter().map(BigRational::from_integer).collect()).monic()
    }

    /// Content: the positive rational `c` such that `self / c` has coprime
    /// integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Divides out the content, preserving the sign of the leading
    /// coefficient: the result has coprime integer coefficients.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        self.scale(&self.content().recip())
    }

    /// True when the polynomial divides `other` exactly.
    pub fn divides(&self, other: &Polynomial) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.div_rem(self).1.is_zero()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Float evaluation: compensated Horner on the exact coefficients
    /// converted at call time. The FMA-based error compensation keeps the
    /// result accurate even for the large alternating integer coefficients
    /// this family produces, where plain Horner loses digits to
    /// cancellation. No cached float shadow copies.
    pub fn eval_f64(&self, x: f64) -> f64 {
        fn two_sum(a: f64, b: f64) -> (f64, f64) {
            let s = a + b;
            let t = s - a;
            (s, (a - (s - t)) + (b - t))
        }
        let mut acc = 0.0f64;
        let mut err = 0.0f64;
        for c in self.coeffs.iter().rev() {
            let p = acc * x;
            let round_p = acc.mul_add(x, -p);
            let (s, round_s) = two_sum(p, c.to_f64().unwrap_or(f64::NAN));
            err = err.mul_add(x, round_p + round_s);
            acc = s;
        }
        acc + err
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Polynomial::new(coeffs)
    }

    fn format_with(&self, f: &mut fmt::Formatter<'_>, latex: bool) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else if latex {
                    write!(f, "\\frac{{{}}}{{{}}}", a.numer(), a.denom())?;
                } else {
                    write!(f, "({}/{})", a.numer(), a.denom())?;
                }
            }
            match (k, latex) {
                (0, _) => {}
                (1, _) => write!(f, "x")?,
                (_, true) => write!(f, "x^{{{}}}", k)?,
                (_, false) => write!(f, "x^{}", k)?,
            }
        }
        Ok(())
    }

    pub fn to_latex(&self) -> String {
        struct Latex<'a>(&'a Polynomial);
        impl fmt::Display for Latex<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.format_with(f, true)
            }
        }
        Latex(self).to_string()
    }

    /// The coefficient wire format: `"num/den"` strings, lowest power first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    pub fn from_coeff_strings(strings: &[String]) -> Result<Polynomial, String> {
        let coeffs = strings
            .iter()
            .map(|s| BigRational::from_str(s).map_err(|e| format!("bad coefficient {s:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.format_with(f, false)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self
                .coeffs
                .get(k)
                .cloned()
                .unwrap_or_else(BigRational::zero);
            if let Some(b) = rhs.coeffs.get(k) {
                c += b;
            }
            coeffs.push(c);
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Integer image of a polynomial with the content divided out, dense and
/// lowest power first; empty for zero.
fn int_primitive(p: &Polynomial) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let c = p.content();
    p.coeffs
        .iter()
        .map(|a| {
            let t = a / &c;
            debug_assert!(t.is_integer());
            t.numer().clone()
        })
        .collect()
}

fn int_primitive_vec(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` over the integers; the quotient steps are
/// premultiplied by the leading coefficient of `b`, so everything stays in
/// the integers. Only used inside the gcd loop where a scalar factor is
/// irrelevant.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    if db == 0 {
        return Vec::new();
    }
    let lb = &b[db];
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bj;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Sign of a rational, as -1, 0, or 1.
pub(crate) fn sign(r: &BigRational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for s in self.coeff_strings() {
            seq.serialize_element(&s)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;
        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = Polynomial;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of \"num/den\" coefficient strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Polynomial, A::Error> {
                let mut strings = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    strings.push(s);
                }
                Polynomial::from_coeff_strings(&strings).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(CoeffVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let q = Polynomial::new(vec![rat_i64(1), rat_i64(0), rat_i64(0)]);
        assert_eq!(q.degree(), Some(0));
        assert!(Polynomial::new(vec![BigRational::zero()]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn monomial_product() {
        // (2x) * (2x) = 4x^2
        assert_eq!(&p(&[0, 2]) * &p(&[0, 2]), p(&[0, 0, 4]));
    }

    #[test]
    fn add_of_degree_two_pair() {
        // (4x^2 + 2) + (4x^2 - 2) = 8x^2
        assert_eq!(&p(&[2, 0, 4]) + &p(&[-2, 0, 4]), p(&[0, 0, 8]));
    }

    #[test]
    fn self_subtraction_is_zero() {
        let a = p(&[3, -1, 7, 2]);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn divexact_divides_out_factor() {
        // (4x^2 - 2)(2x) / (2x) = 4x^2 - 2
        let prod = &p(&[-2, 0, 4]) * &p(&[0, 2]);
        assert_eq!(prod.divexact(&p(&[0, 2])).unwrap(), p(&[-2, 0, 4]));
    }

    #[test]
    fn divexact_reports_remainder() {
        // 16x^4 + 12 = (4x^2 + 2)(4x^2 - 2) + 16
        let err = p(&[12, 0, 0, 0, 16]).divexact(&p(&[2, 0, 4])).unwrap_err();
        match err {
            ExactError::InexactDivision { remainder } => {
                assert_eq!(remainder, p(&[16]));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn divexact_zero_numerator() {
        assert!(Polynomial::zero().divexact(&p(&[1, 2])).unwrap().is_zero());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, 2]).derivative(), p(&[2]));
        // d^2/dx^2 (16x^4 + 12) = 192x^2
        assert_eq!(p(&[12, 0, 0, 0, 16]).derivative_n(2), p(&[0, 0, 192]));
        assert!(p(&[5]).derivative().is_zero());
    }

    #[test]
    fn gcd_cases() {
        // gcd(x^2, x^3) = x^2
        assert_eq!(p(&[0, 0, 1]).gcd(&p(&[0, 0, 0, 1])), p(&[0, 0, 1]));
        // gcd(4x^2 - 2, 2x) = 1
        assert_eq!(p(&[-2, 0, 4]).gcd(&p(&[0, 2])), Polynomial::one());
        // gcd(p, 0) = monic(p)
        assert_eq!(
            p(&[-2, 0, 4]).gcd(&Polynomial::zero()),
            p(&[-2, 0, 4]).monic()
        );
    }

    #[test]
    fn evaluation() {
        // (16x^4 + 12)(1) = 28
        assert_eq!(p(&[12, 0, 0, 0, 16]).eval_rat(&rat_i64(1)), rat_i64(28));
        // p(0) = constant term
        assert_eq!(p(&[7, 3, 1]).eval_rat(&rat_i64(0)), rat_i64(7));
        assert_eq!(p(&[12, 0, 0, 0, 16]).eval_f64(1.0), 28.0);
    }

    #[test]
    fn primitive_part_preserves_sign() {
        assert_eq!(
            p(&[-96, 0, -128, 0, 0, -128]).primitive_part(),
            p(&[-3, 0, -4, 0, 0, -4])
        );
        assert_eq!(p(&[12, 0, 0, 0, 16]).content(), rat_i64(4));
    }

    #[test]
    fn coeff_string_round_trip() {
        let q = Polynomial::new(vec![rat_i64(3) / rat_i64(2), rat_i64(-5)]);
        let strings = q.coeff_strings();
        assert_eq!(strings, vec!["3/2".to_string(), "-5/1".to_string()]);
        assert_eq!(Polynomial::from_coeff_strings(&strings).unwrap(), q);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[12, 0, 0, 0, 16]).to_string(), "16x^4 + 12");
        assert_eq!(p(&[0, -3, 0, 0, -4, -4]).to_string(), "-4x^5 - 4x^4 - 3x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[12, 0, 0, 0, 16]).to_latex(), "16x^{4} + 12");
    }
}
