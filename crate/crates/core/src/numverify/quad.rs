//! Adaptive Simpson quadrature for the orthogonality integrals.
//!
//! The weight mu^2 = exp(-x^2)/H_{p+1,2q}^2 is nonclassical, so no
//! weight-specific quadrature family applies; plain adaptive Simpson on a
//! truncated interval is accurate here because the integrands are entire
//! up to gaussian decay. Integrands are evaluated by Horner on the exact
//! coefficients, converted at call time.

use super::NumVerifyError;
use crate::model::{weight, ModelParams, Sequence};
use crate::ppoly::ppoly;
use std::sync::Arc;

/// Truncation half-width, relative tolerance and recursion cap for one
/// adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    pub half_width: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl QuadratureConfig {
    pub fn new(half_width: f64, rel_tol: f64, max_depth: u32) -> Self {
        assert!(half_width > 0.0, "half-width must be positive");
        assert!(
            rel_tol > 0.0 && rel_tol <= 1e-6,
            "relative tolerance must lie in (0, 1e-6]"
        );
        QuadratureConfig {
            half_width,
            rel_tol,
            max_depth,
        }
    }

    /// Widens the interval until every listed eigenstate has decayed below
    /// 1e-12 of its own peak at the endpoints.
    pub fn auto(params: &ModelParams, states: &[(Sequence, u32)]) -> Self {
        let mut l = 6.0f64;
        let polys: Vec<Arc<crate::exact::Polynomial>> = states
            .iter()
            .map(|&(seq, n)| ppoly(params, seq, n).expect("state exists"))
            .collect();
        let mu = weight(params);
        'widen: loop {
            for poly in &polys {
                let phi = |x: f64| (mu.eval_f64(x) * poly.eval_f64(x)).abs();
                let peak = (0..=200)
                    .map(|i| phi(-l + 2.0 * l * i as f64 / 200.0))
                    .fold(0.0f64, f64::max);
                if phi(l).max(phi(-l)) > 1e-12 * peak {
                    l += 0.5;
                    continue 'widen;
                }
            }
            return QuadratureConfig::new(l, 5e-13, 60);
        }
    }
}

/// An integral value with the accumulated error estimate of the adaptive
/// subdivision.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    max_depth: u32,
) -> Result<Quadrature, NumVerifyError> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let diff = left + right - whole;
    if diff.abs() <= 15.0 * tol {
        return Ok(Quadrature {
            value: left + right + diff / 15.0,
            error_estimate: diff.abs() / 15.0,
        });
    }
    if depth >= max_depth {
        return Err(NumVerifyError::NonConvergence { depth });
    }
    let l = adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, max_depth)?;
    let r = adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, max_depth)?;
    Ok(Quadrature {
        value: l.value + r.value,
        error_estimate: l.error_estimate + r.error_estimate,
    })
}

/// Adaptive Simpson integration of `f` over [-L, L] with a tolerance
/// relative to the integral of |f|. The recursion is seeded with a uniform
/// initial partition so localized structure cannot hide between the first
/// probe points (a symmetric integrand vanishing at the origin and the
/// endpoints would otherwise fool the two-level error estimate).
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    cfg: &QuadratureConfig,
) -> Result<Quadrature, NumVerifyError> {
    let l = cfg.half_width;
    // Coarse scale estimate of |f| to anchor the relative tolerance; the
    // orthogonality integrals are near-cancellations, so tolerance must not
    // be relative to the (tiny) result itself.
    let panels = 256;
    let dx = 2.0 * l / panels as f64;
    let mut scale = 0.0;
    for i in 0..panels {
        let x0 = -l + i as f64 * dx;
        scale += 0.5 * (f(x0).abs() + f(x0 + dx).abs()) * dx;
    }
    let tol = cfg.rel_tol * scale.max(f64::MIN_POSITIVE);

    let seeds = 64;
    let width = 2.0 * l / seeds as f64;
    let mut total = Quadrature {
        value: 0.0,
        error_estimate: 0.0,
    };
    for i in 0..seeds {
        let a = -l + i as f64 * width;
        let b = a + width;
        let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
        let whole = simpson(fa, fm, fb, b - a);
        let part = adapt(
            &f,
            a,
            b,
            fa,
            fm,
            fb,
            whole,
            tol / seeds as f64,
            0,
            cfg.max_depth,
        )?;
        total.value += part.value;
        total.error_estimate += part.error_estimate;
    }
    Ok(total)
}

/// The orthogonality inner product of two family members:
/// integral of mu^2 P_a P_b over the truncated line.
pub fn inner_product(
    params: &ModelParams,
    a: (Sequence, u32),
    b: (Sequence, u32),
    cfg: &QuadratureConfig,
) -> Result<Quadrature, NumVerifyError> {
    let pa = ppoly(params, a.0, a.1).expect("family entry exists");
    let pb = ppoly(params, b.0, b.1).expect("family entry exists");
    let mu = weight(params);
    integrate(
        |x| mu.eval_squared_f64(x) * pa.eval_f64(x) * pb.eval_f64(x),
        cfg,
    )
}

/// Full Gram matrix of a list of states under the squared-weight inner
/// product.
pub fn gram_matrix(
    params: &ModelParams,
    states: &[(Sequence, u32)],
    cfg: &QuadratureConfig,
) -> Result<Vec<Vec<Quadrature>>, NumVerifyError> {
    let mut rows: Vec<Vec<Quadrature>> = Vec::with_capacity(states.len());
    for (i, &a) in states.iter().enumerate() {
        let mut row = Vec::with_capacity(states.len());
        for (j, &b) in states.iter().enumerate() {
            if j < i {
                row.push(rows[j][i]);
            } else {
                row.push(inner_product(params, a, b, cfg)?);
            }
        }
        rows.push(row);
    }
    Ok(rows)
}
