//! One Hamiltonian of the family: potential, weight function, gapped
//! spectrum, ladder constants, relative norms and zero-mode polynomials.
//!
//! The model at indices (p, q) is H = -d^2/dx^2 + V with
//!
//! ```text
//! V_{p,q}(x) = x^2 + 4q - 1 - 2 (ln H_{p+1,2q})''
//! ```
//!
//! (the bilinear reduction of x^2 - (w' - 2xw - w^2) - 1 through the
//! Bäcklund identity for w' - (2xw + w^2); both routes are kept and tested
//! against each other). Its discrete spectrum is the union of a finite
//! ladder E = 2n, n = 0..p, and an infinite ladder E = 2n + 2p + 4q + 2,
//! separated by a gap of width 4q + 2.
//!
//! Eigenvalues are exact integers throughout; no float ever enters an
//! exact-layer comparison. The absolute normalizations are irrational
//! integrals and deliberately live in the numerical layer; only relative
//! squared norms are exact data here.

use crate::exact::poly::rat_i64;
use crate::exact::{log_derivative, Polynomial, RationalFunction};
use crate::genhermite::gh;
use crate::operators::GaussianSign;
use num_rational::BigRational;
use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    /// Finite-sequence data requested beyond its truncation point.
    #[error("level n = {n} is beyond the finite sequence (n <= {max})")]
    OutOfSequence { n: u32, max: u32 },
}

/// Which of the two eigenvalue sequences a quantity belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sequence {
    /// The (p+1)-dimensional ladder E = 2n, n = 0..p.
    Finite,
    /// The infinite ladder E = 2n + 2p + 4q + 2.
    Infinite,
}

impl Sequence {
    /// Conventional index: 1 for the finite sequence, 2 for the infinite.
    pub fn index(self) -> u8 {
        match self {
            Sequence::Finite => 1,
            Sequence::Infinite => 2,
        }
    }

    pub fn from_index(j: u8) -> Option<Self> {
        match j {
            1 => Some(Sequence::Finite),
            2 => Some(Sequence::Infinite),
            _ => None,
        }
    }
}

/// The index pair (p, q) identifying one Hamiltonian of the family,
/// with its derived constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModelParams {
    pub p: u32,
    pub q: u32,
}

impl ModelParams {
    pub fn new(p: u32, q: u32) -> Self {
        ModelParams { p, q }
    }

    /// Painlevé parameter alpha = 2p + 2q + 1 of the underlying solution.
    pub fn alpha(&self) -> i64 {
        2 * self.p as i64 + 2 * self.q as i64 + 1
    }

    /// Painlevé parameter beta = -8 q^2.
    pub fn beta(&self) -> i64 {
        -8 * (self.q as i64).pow(2)
    }

    /// Integration constant gamma = 2p + 2q.
    pub fn gamma(&self) -> i64 {
        2 * self.p as i64 + 2 * self.q as i64
    }

    /// Integration constant d = -4 q^2.
    pub fn d(&self) -> i64 {
        -4 * (self.q as i64).pow(2)
    }

    /// First root of the ladder cubic: eps1 = 2p + 4q.
    pub fn eps1(&self) -> i64 {
        2 * self.p as i64 + 4 * self.q as i64
    }

    /// Second root of the ladder cubic: eps2 = 2p.
    pub fn eps2(&self) -> i64 {
        2 * self.p as i64
    }

    /// Width 4q + 2 of the spectral gap between the two ladders.
    pub fn gap_width(&self) -> i64 {
        4 * self.q as i64 + 2
    }

    /// The nodeless polynomial H_{p+1,2q} entering weight and potential.
    pub fn weight_denominator(&self) -> Arc<Polynomial> {
        gh(self.p + 1, 2 * self.q)
    }
}

/// The potential split into its exact parts: x^2 + (4q - 1) plus a reduced
/// rational function with no real poles.
#[derive(Debug, Clone)]
pub struct Potential {
    /// Constant shift of the quadratic part: V = x^2 + shift + rational.
    pub quadratic_shift: i64,
    /// -2 (ln H_{p+1,2q})'', reduced.
    pub rational_part: RationalFunction,
}

impl Potential {
    pub fn as_rational_function(&self) -> RationalFunction {
        &RationalFunction::from_poly(Polynomial::from_int_coeffs(&[self.quadratic_shift, 0, 1]))
            + &self.rational_part
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        x * x + self.quadratic_shift as f64 + self.rational_part.eval_f64(x)
    }
}

pub fn potential(params: &ModelParams) -> Potential {
    let h = params.weight_denominator();
    let log_second = log_derivative(&h)
        .expect("weight denominator is nonzero")
        .derivative();
    Potential {
        quadratic_shift: 4 * params.q as i64 - 1,
        rational_part: log_second.mul_poly(&Polynomial::from_int_coeffs(&[-2])),
    }
}

/// The weight function exp(-x^2/2) / H_{p+1,2q}; its square is the
/// orthogonality weight of the polynomial eigenfamilies.
#[derive(Debug, Clone)]
pub struct WeightFunction {
    pub rational_part: RationalFunction,
}

impl WeightFunction {
    pub fn eval_f64(&self, x: f64) -> f64 {
        (-x * x / 2.0).exp() * self.rational_part.eval_f64(x)
    }

    pub fn eval_squared_f64(&self, x: f64) -> f64 {
        let r = self.rational_part.eval_f64(x);
        (-x * x).exp() * r * r
    }
}

pub fn weight(params: &ModelParams) -> WeightFunction {
    let h = params.weight_denominator();
    WeightFunction {
        rational_part: RationalFunction::new(Polynomial::one(), (*h).clone())
            .expect("weight denominator is nonzero"),
    }
}

/// One rung of the gapped spectrum with its exact ladder data.
#[derive(Debug, Clone)]
pub struct SpectralPoint {
    pub seq: Sequence,
    pub n: u32,
    pub energy: i64,
    /// Squared lowering constant C^2_n at this level (0 at a sequence foot).
    pub csq: BigRational,
    /// Relative squared norm N^2_n / N^2_0 within the sequence.
    pub rel_norm_sq: BigRational,
}

/// Exact eigenvalue at level n of a sequence.
pub fn energy(params: &ModelParams, seq: Sequence, n: u32) -> i64 {
    match seq {
        Sequence::Finite => {
            assert!(n <= params.p, "finite sequence ends at n = p");
            2 * n as i64
        }
        Sequence::Infinite => 2 * n as i64 + 2 * params.p as i64 + 4 * params.q as i64 + 2,
    }
}

/// Squared ladder constant C^2_n: the lowering operator maps level n to
/// level n-1 with coefficient C_n, and
///
/// ```text
/// finite:   C^2_n = 8 n (p + 2q - n + 1)(p - n + 1),  0 <= n <= p + 1,
/// infinite: C^2_n = 8 n (n + 2q)(n + p + 2q + 1).
/// ```
///
/// Both feet give 0 (C_0 = 0), and so does the finite-sequence ceiling
/// C_{p+1}, which is the truncation of that ladder.
pub fn ladder_csq(params: &ModelParams, seq: Sequence, n: u32) -> BigRational {
    let (p, q, n) = (params.p as i64, params.q as i64, n as i64);
    match seq {
        Sequence::Finite => {
            assert!(n <= p + 1, "finite ladder constants end at n = p + 1");
            rat_i64(8 * n * (p + 2 * q - n + 1) * (p - n + 1))
        }
        Sequence::Infinite => rat_i64(8 * n * (n + 2 * q) * (n + p + 2 * q + 1)),
    }
}

fn pochhammer(a: i64, n: u32) -> BigRational {
    let mut acc = BigRational::from_integer(1.into());
    for k in 0..n as i64 {
        acc *= rat_i64(a + k);
    }
    acc
}

fn factorial(n: u32) -> BigRational {
    let mut acc = BigRational::from_integer(1.into());
    for k in 1..=n as i64 {
        acc *= rat_i64(k);
    }
    acc
}

/// Relative squared norm N^2_n / N^2_0 through rising-factorial products:
///
/// ```text
/// finite:   2^{3n} n! (-p)_n (-p - 2q)_n
/// infinite: 2^{3n} n! (2q + 1)_n (2q + p + 2)_n
/// ```
///
/// Telescoping against `ladder_csq` holds exactly:
/// rel(n+1) / rel(n) = C^2_{n+1}.
pub fn rel_norm_sq(params: &ModelParams, seq: Sequence, n: u32) -> Result<BigRational, ModelError> {
    let (p, q) = (params.p as i64, params.q as i64);
    if seq == Sequence::Finite && n > params.p {
        return Err(ModelError::OutOfSequence { n, max: params.p });
    }
    let two_pow = BigRational::from_integer(num_bigint::BigInt::from(1) << (3 * n));
    let tail = match seq {
        Sequence::Finite => pochhammer(-p, n) * pochhammer(-p - 2 * q, n),
        Sequence::Infinite => pochhammer(2 * q + 1, n) * pochhammer(2 * q + p + 2, n),
    };
    Ok(two_pow * factorial(n) * tail)
}

/// The finite ladder (n = 0..p) followed by the first `nmax + 1` rungs of
/// the infinite one, with exact ladder data attached.
pub fn spectrum(params: &ModelParams, nmax: u32) -> Vec<SpectralPoint> {
    let mut points = Vec::new();
    for n in 0..=params.p {
        points.push(SpectralPoint {
            seq: Sequence::Finite,
            n,
            energy: energy(params, Sequence::Finite, n),
            csq: ladder_csq(params, Sequence::Finite, n),
            rel_norm_sq: rel_norm_sq(params, Sequence::Finite, n).expect("n <= p"),
        });
    }
    for n in 0..=nmax {
        points.push(SpectralPoint {
            seq: Sequence::Infinite,
            n,
            energy: energy(params, Sequence::Infinite, n),
            csq: ladder_csq(params, Sequence::Infinite, n),
            rel_norm_sq: rel_norm_sq(params, Sequence::Infinite, n).expect("infinite sequence"),
        });
    }
    points
}

/// The three finite-norm anchor states, as their polynomial parts (the
/// common factor exp(-x^2/2)/H_{p+1,2q} is the weight function).
#[derive(Debug, Clone)]
pub struct ZeroModePolys {
    /// Ground state polynomial H_{p,2q}, energy 0; nodeless.
    pub ground: Arc<Polynomial>,
    /// Top of the finite sequence, H_{p,2q+1}, energy 2p; p simple zeros.
    pub finite_top: Arc<Polynomial>,
    /// Foot of the infinite sequence, H_{p+1,2q+1}, energy 2p + 4q + 2;
    /// p + 1 simple zeros.
    pub infinite_anchor: Arc<Polynomial>,
}

pub fn zero_mode_polys(params: &ModelParams) -> ZeroModePolys {
    ZeroModePolys {
        ground: gh(params.p, 2 * params.q),
        finite_top: gh(params.p, 2 * params.q + 1),
        infinite_anchor: gh(params.p + 1, 2 * params.q + 1),
    }
}

/// A kernel member of one ladder operator that is not square-integrable:
/// exp(+x^2/2) poly / H_{p+1,2q}.
#[derive(Debug, Clone)]
pub struct NonNormalizableMode {
    pub poly: Arc<Polynomial>,
    pub sign: GaussianSign,
    pub energy: i64,
}

/// The growing-gaussian kernel members of the two third-order ladder
/// operators. Of the six formal kernel slots per model, five are
/// gaussian-rational (the three finite-norm anchors plus these two); the
/// sixth sits at the formal energy -2 and is not expressible in
/// gaussian-rational form (in the harmonic limit q = 0 its siblings involve
/// the error function), so only its energy is reported.
#[derive(Debug, Clone)]
pub struct NonNormalizableModes {
    /// Lowering-operator kernel member H_{p+2,2q-1}, energy 2p + 2.
    pub lowering_kernel: NonNormalizableMode,
    /// Raising-operator kernel member H_{p+1,2q-1}, energy 2p + 4q.
    pub raising_kernel: NonNormalizableMode,
    /// The remaining root of the ladder cubic, always -2.
    pub formal_third_energy: i64,
}

pub fn nonnormalizable_modes(params: &ModelParams) -> NonNormalizableModes {
    assert!(
        params.q >= 1,
        "the q = 0 limit has no rational kernel members"
    );
    let (p, q) = (params.p, params.q);
    NonNormalizableModes {
        lowering_kernel: NonNormalizableMode {
            poly: gh(p + 2, 2 * q - 1),
            sign: GaussianSign::Growing,
            energy: 2 * p as i64 + 2,
        },
        raising_kernel: NonNormalizableMode {
            poly: gh(p + 1, 2 * q - 1),
            sign: GaussianSign::Growing,
            energy: 2 * p as i64 + 4 * q as i64,
        },
        formal_third_energy: -2,
    }
}

/// Residual of the eigen-equation H psi = E psi for a state
/// psi = exp(sigma x^2/2) S / H_{p+1,2q}, cleared of denominators.
/// Identically zero iff the state is an exact eigenfunction at `energy`.
pub fn eigen_residual(
    params: &ModelParams,
    sign: GaussianSign,
    s: &Polynomial,
    energy: i64,
) -> Polynomial {
    let h = params.weight_denominator();
    let hp = h.derivative();
    let hpp = hp.derivative();
    let e_shift = match sign {
        // h S'' - 2 (x h + h') S' + (h'' + 2x h' + (E - 4q) h) S
        GaussianSign::Decaying => energy - 4 * params.q as i64,
        // h S'' + 2 (x h - h') S' + (h'' - 2x h' + (E - 4q + 2) h) S
        GaussianSign::Growing => energy - 4 * params.q as i64 + 2,
    };
    let x = Polynomial::x();
    let (first_order, cross) = match sign {
        GaussianSign::Decaying => (
            (&(&x * &*h) + &hp).scale(&rat_i64(-2)),
            (&x * &hp).scale(&rat_i64(2)),
        ),
        GaussianSign::Growing => (
            (&(&x * &*h) - &hp).scale(&rat_i64(2)),
            (&x * &hp).scale(&rat_i64(-2)),
        ),
    };
    let zeroth = &(&hpp + &cross) + &h.scale(&rat_i64(e_shift));
    &(&(&*h * &s.derivative_n(2)) + &(&first_order * &s.derivative())) + &(&zeroth * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::real_root_count;
    use crate::painleve::regular_w;

    #[test]
    fn derived_constants() {
        let m = ModelParams::new(2, 1);
        assert_eq!(m.alpha(), 7);
        assert_eq!(m.beta(), -8);
        assert_eq!(m.gamma(), 6);
        assert_eq!(m.d(), -4);
        assert_eq!(m.eps1(), 8);
        assert_eq!(m.eps2(), 4);
        assert_eq!(m.gap_width(), 6);
    }

    #[test]
    fn harmonic_limit_potential() {
        let v = potential(&ModelParams::new(0, 0));
        assert_eq!(v.quadratic_shift, -1);
        assert!(v.rational_part.is_zero());
        assert_eq!(
            v.as_rational_function(),
            RationalFunction::from_poly(Polynomial::from_int_coeffs(&[-1, 0, 1]))
        );
    }

    #[test]
    fn potential_reference_value() {
        // (1,1): V = x^2 + 3 + (128x^6 - 288x^2)/(4x^4 + 3)^2.
        let v = potential(&ModelParams::new(1, 1));
        assert_eq!(v.quadratic_shift, 3);
        let den = Polynomial::from_int_coeffs(&[3, 0, 0, 0, 4]).pow(2);
        let num = Polynomial::from_int_coeffs(&[0, 0, -288, 0, 0, 0, 128]);
        assert_eq!(v.rational_part, RationalFunction::new(num, den).unwrap());
    }

    #[test]
    fn potential_agrees_with_painleve_route() {
        // x^2 - (w' - 2xw - w^2) - 1 must equal the bilinear-form potential.
        for p in 0..=3u32 {
            for q in 0..=2u32 {
                let params = ModelParams::new(p, q);
                let direct = potential(&params).as_rational_function();
                let w = regular_w(p, q).w;
                let x = RationalFunction::x();
                let via_w = if w.is_zero() {
                    &(&x * &x) - &RationalFunction::constant(rat_i64(1))
                } else {
                    let paren = &w.derivative()
                        - &(&w.mul_poly(&Polynomial::from_int_coeffs(&[0, 2])) + &(&w * &w));
                    &(&(&x * &x) - &paren) - &RationalFunction::constant(rat_i64(1))
                };
                assert_eq!(direct, via_w, "({p},{q})");
            }
        }
    }

    #[test]
    fn potential_rational_part_has_no_real_poles() {
        for p in 0..=4u32 {
            for q in 0..=3u32 {
                let v = potential(&ModelParams::new(p, q));
                if !v.rational_part.is_zero() {
                    assert_eq!(real_root_count(v.rational_part.den()), 0, "({p},{q})");
                }
            }
        }
    }

    #[test]
    fn spectrum_reference_layouts() {
        let pts = spectrum(&ModelParams::new(2, 1), 2);
        let finite: Vec<i64> = pts
            .iter()
            .filter(|s| s.seq == Sequence::Finite)
            .map(|s| s.energy)
            .collect();
        assert_eq!(finite, vec![0, 2, 4]);
        let infinite: Vec<i64> = pts
            .iter()
            .filter(|s| s.seq == Sequence::Infinite)
            .map(|s| s.energy)
            .collect();
        assert_eq!(infinite, vec![10, 12, 14]);

        // Degenerate (0,0): merged oscillator ladder with formal gap 2.
        let params = ModelParams::new(0, 0);
        assert_eq!(params.gap_width(), 2);
        let pts = spectrum(&params, 2);
        let all: Vec<i64> = pts.iter().map(|s| s.energy).collect();
        assert_eq!(all, vec![0, 2, 4, 6]);

        // (1,2): {0, 2} then {12, 14, ...}.
        let pts = spectrum(&ModelParams::new(1, 2), 1);
        let all: Vec<i64> = pts.iter().map(|s| s.energy).collect();
        assert_eq!(all, vec![0, 2, 12, 14]);
    }

    #[test]
    fn gap_structure() {
        for p in 0..=4u32 {
            for q in 0..=3u32 {
                let params = ModelParams::new(p, q);
                let top_finite = energy(&params, Sequence::Finite, p);
                let foot_infinite = energy(&params, Sequence::Infinite, 0);
                assert_eq!(foot_infinite - top_finite, params.gap_width(), "({p},{q})");
            }
        }
    }

    #[test]
    fn ladder_constant_reference_values() {
        let m = ModelParams::new(2, 1);
        // C^2_1 in the finite sequence: 8 * 1 * 4 * 2 = 64.
        assert_eq!(ladder_csq(&m, Sequence::Finite, 1), rat_i64(64));
        // Feet and ceiling vanish.
        assert_eq!(ladder_csq(&m, Sequence::Finite, 0), rat_i64(0));
        assert_eq!(ladder_csq(&m, Sequence::Finite, 3), rat_i64(0));
        assert_eq!(ladder_csq(&m, Sequence::Infinite, 0), rat_i64(0));
        // C^2_1 in the infinite sequence: 8 * 1 * 3 * 6 = 144.
        assert_eq!(ladder_csq(&m, Sequence::Infinite, 1), rat_i64(144));
    }

    #[test]
    fn norm_reference_values_and_errors() {
        let m = ModelParams::new(2, 1);
        assert_eq!(rel_norm_sq(&m, Sequence::Finite, 0).unwrap(), rat_i64(1));
        assert_eq!(rel_norm_sq(&m, Sequence::Finite, 1).unwrap(), rat_i64(64));
        assert_eq!(
            rel_norm_sq(&m, Sequence::Finite, 3),
            Err(ModelError::OutOfSequence { n: 3, max: 2 })
        );
        assert_eq!(rel_norm_sq(&m, Sequence::Infinite, 0).unwrap(), rat_i64(1));
    }

    #[test]
    fn norms_telescope_through_ladder_constants() {
        for p in 0..=4u32 {
            for q in 0..=3u32 {
                let m = ModelParams::new(p, q);
                for n in 0..p {
                    let ratio = rel_norm_sq(&m, Sequence::Finite, n + 1).unwrap()
                        / rel_norm_sq(&m, Sequence::Finite, n).unwrap();
                    assert_eq!(
                        ratio,
                        ladder_csq(&m, Sequence::Finite, n + 1),
                        "({p},{q}) n={n}"
                    );
                }
                for n in 0..6 {
                    let ratio = rel_norm_sq(&m, Sequence::Infinite, n + 1).unwrap()
                        / rel_norm_sq(&m, Sequence::Infinite, n).unwrap();
                    assert_eq!(
                        ratio,
                        ladder_csq(&m, Sequence::Infinite, n + 1),
                        "({p},{q}) n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn ladder_cubic_identity() {
        // C^2_{n+1} = (E + 2)(E - eps1)(E - eps2) at E = E_n, both sequences.
        for p in 0..=4u32 {
            for q in 0..=3u32 {
                let m = ModelParams::new(p, q);
                let cubic = |e: i64| rat_i64((e + 2) * (e - m.eps1()) * (e - m.eps2()));
                for n in 0..=p {
                    let e = energy(&m, Sequence::Finite, n);
                    assert_eq!(
                        ladder_csq(&m, Sequence::Finite, n + 1),
                        cubic(e),
                        "finite ({p},{q}) n={n}"
                    );
                }
                for n in 0..8 {
                    let e = energy(&m, Sequence::Infinite, n);
                    assert_eq!(
                        ladder_csq(&m, Sequence::Infinite, n + 1),
                        cubic(e),
                        "infinite ({p},{q}) n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn zero_mode_reference_polynomials() {
        let zm = zero_mode_polys(&ModelParams::new(2, 1));
        assert_eq!(*zm.ground, Polynomial::from_int_coeffs(&[12, 0, 0, 0, 16]));
        assert_eq!(
            *zm.finite_top,
            Polynomial::from_int_coeffs(&[-72, 0, 144, 0, 96, 0, 64])
        );
        let zm = zero_mode_polys(&ModelParams::new(0, 0));
        assert_eq!(*zm.ground, Polynomial::one());
    }

    #[test]
    fn zero_mode_nodal_structure() {
        for p in 0..=3u32 {
            for q in 0..=2u32 {
                let zm = zero_mode_polys(&ModelParams::new(p, q));
                assert_eq!(real_root_count(&zm.ground), 0, "ground ({p},{q})");
                assert_eq!(real_root_count(&zm.finite_top), p as usize, "top ({p},{q})");
                assert_eq!(
                    real_root_count(&zm.infinite_anchor),
                    p as usize + 1,
                    "anchor ({p},{q})"
                );
            }
        }
    }

    #[test]
    fn weight_is_positive() {
        use num_traits::Signed;
        for p in 0..=4u32 {
            for q in 0..=3u32 {
                let h = ModelParams::new(p, q).weight_denominator();
                assert_eq!(real_root_count(&h), 0, "({p},{q})");
                assert!(h.coeff(0).is_positive(), "({p},{q})");
            }
        }
    }

    #[test]
    fn anchor_states_satisfy_the_eigen_equation_exactly() {
        for p in 0..=3u32 {
            for q in 0..=2u32 {
                let m = ModelParams::new(p, q);
                let zm = zero_mode_polys(&m);
                for (s, e) in [
                    (&zm.ground, 0),
                    (&zm.finite_top, m.eps2()),
                    (&zm.infinite_anchor, m.eps1() + 2),
                ] {
                    assert!(
                        eigen_residual(&m, GaussianSign::Decaying, s, e).is_zero(),
                        "({p},{q}) E={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn wrong_energy_leaves_a_residual() {
        let m = ModelParams::new(2, 1);
        let zm = zero_mode_polys(&m);
        assert!(!eigen_residual(&m, GaussianSign::Decaying, &zm.ground, 2).is_zero());
    }

    #[test]
    fn growing_kernel_modes_are_exact_eigenfunctions() {
        for p in 0..=3u32 {
            for q in 1..=2u32 {
                let m = ModelParams::new(p, q);
                let modes = nonnormalizable_modes(&m);
                for mode in [&modes.lowering_kernel, &modes.raising_kernel] {
                    assert_eq!(mode.sign, GaussianSign::Growing);
                    assert!(
                        eigen_residual(&m, mode.sign, &mode.poly, mode.energy).is_zero(),
                        "({p},{q}) E={}",
                        mode.energy
                    );
                }
            }
        }
    }

    #[test]
    fn nonnormalizable_reference_values() {
        let modes = nonnormalizable_modes(&ModelParams::new(1, 1));
        // Lowering kernel at (1,1): H_{3,1} = 8x^3 - 12x with E = 2p+2 = 4.
        assert_eq!(
            *modes.lowering_kernel.poly,
            Polynomial::from_int_coeffs(&[0, -12, 0, 8])
        );
        assert_eq!(modes.lowering_kernel.energy, 4);
        // Raising kernel at (1,1): H_{2,1} = 4x^2 - 2 with E = 2p+4q = 6.
        assert_eq!(
            *modes.raising_kernel.poly,
            Polynomial::from_int_coeffs(&[-2, 0, 4])
        );
        assert_eq!(modes.raising_kernel.energy, 6);
        assert_eq!(modes.formal_third_energy, -2);
    }
}
