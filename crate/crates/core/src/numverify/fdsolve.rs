//! Finite-difference eigensolver for the model Hamiltonians.
//!
//! The operator -d^2/dx^2 + V on [-L, L] with Dirichlet ends becomes a
//! symmetric tridiagonal matrix on a uniform interior grid; its lowest
//! eigenvalues are found by bisection on the Sturm count of the shifted
//! LDL^T factorization, which is deterministic and needs no dependencies.
//! Second-order central differences give an O(dx^2) eigenvalue error,
//! which is what the default tolerances are calibrated to.

use crate::model::{energy, potential, weight, ModelParams, Sequence};
use crate::ppoly::ppoly;

/// Grid geometry for one finite-difference solve.
#[derive(Debug, Clone, Copy)]
pub struct FdSolverConfig {
    pub half_width: f64,
    pub grid_points: usize,
    pub eig_count: usize,
}

impl FdSolverConfig {
    pub fn new(half_width: f64, grid_points: usize, eig_count: usize) -> Self {
        assert!(grid_points >= 500, "grid too coarse for the error model");
        assert!(half_width > 0.0 && eig_count > 0);
        FdSolverConfig {
            half_width,
            grid_points,
            eig_count,
        }
    }

    /// Default grid with the half-width widened automatically: beyond the
    /// classical turning point of the largest tracked eigenvalue, and far
    /// enough out that the anchor eigenstates have decayed below 1e-12 of
    /// their peaks.
    pub fn auto(params: &ModelParams, eig_count: usize) -> Self {
        let e_max = energy(params, Sequence::Infinite, eig_count as u32) as f64;
        let mut l = (e_max + 16.0).sqrt() + 3.0;
        let mu = weight(params);
        let zm = crate::model::zero_mode_polys(params);
        let states = [&zm.ground, &zm.finite_top, &zm.infinite_anchor];
        'widen: loop {
            for poly in states {
                let phi = |x: f64| (mu.eval_f64(x) * poly.eval_f64(x)).abs();
                let peak = (0..=200)
                    .map(|i| phi(-l + 2.0 * l * i as f64 / 200.0))
                    .fold(0.0f64, f64::max);
                if phi(l).max(phi(-l)) > 1e-12 * peak {
                    l += 0.5;
                    continue 'widen;
                }
            }
            return FdSolverConfig::new(l, 4000, eig_count);
        }
    }
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `shift`,
/// by the sign count of the LDL^T pivots.
fn count_below(diag: &[f64], off_sq: f64, shift: f64) -> usize {
    let mut count = 0;
    let mut pivot = diag[0] - shift;
    if pivot < 0.0 {
        count += 1;
    }
    for &d in &diag[1..] {
        let prev = if pivot == 0.0 {
            f64::MIN_POSITIVE
        } else {
            pivot
        };
        pivot = d - shift - off_sq / prev;
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `eig_count` lowest eigenvalues of -d^2/dx^2 + V discretized on the
/// interior of [-L, L].
pub fn fd_spectrum(params: &ModelParams, cfg: &FdSolverConfig) -> Vec<f64> {
    let v = potential(params);
    let n = cfg.grid_points;
    let dx = 2.0 * cfg.half_width / (n as f64 + 1.0);
    let mut diag = Vec::with_capacity(n);
    for i in 0..n {
        let x = -cfg.half_width + (i as f64 + 1.0) * dx;
        diag.push(2.0 / (dx * dx) + v.eval_f64(x));
    }
    let off = -1.0 / (dx * dx);
    let off_sq = off * off;

    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &d in &diag {
        lo = lo.min(d - 2.0 * off.abs());
        hi = hi.max(d + 2.0 * off.abs());
    }

    let mut eigs = Vec::with_capacity(cfg.eig_count);
    for k in 0..cfg.eig_count {
        let mut a = lo;
        let mut b = hi;
        for _ in 0..80 {
            let m = 0.5 * (a + b);
            if count_below(&diag, off_sq, m) > k {
                b = m;
            } else {
                a = m;
            }
        }
        eigs.push(0.5 * (a + b));
    }
    eigs
}

/// Pointwise residual max |(-phi'' + V phi - E phi)| / max |phi| on the
/// interior grid, with phi = mu P sampled exactly and phi'' from the
/// five-point stencil (O(dx^4)). Small iff the analytic eigenpair holds
/// numerically.
pub fn eigenfunction_residual(
    params: &ModelParams,
    seq: Sequence,
    n: u32,
    cfg: &FdSolverConfig,
) -> f64 {
    let poly = ppoly(params, seq, n).expect("family entry exists");
    let mu = weight(params);
    let v = potential(params);
    let e = energy(params, seq, n) as f64;
    let npts = cfg.grid_points;
    let dx = 2.0 * cfg.half_width / (npts as f64 - 1.0);
    let phi: Vec<f64> = (0..npts)
        .map(|i| {
            let x = -cfg.half_width + i as f64 * dx;
            mu.eval_f64(x) * poly.eval_f64(x)
        })
        .collect();
    let peak = phi.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let mut worst = 0.0f64;
    for i in 2..npts - 2 {
        let x = -cfg.half_width + i as f64 * dx;
        let second = (-phi[i - 2] + 16.0 * phi[i - 1] - 30.0 * phi[i] + 16.0 * phi[i + 1]
            - phi[i + 2])
            / (12.0 * dx * dx);
        let r = -second + (v.eval_f64(x) - e) * phi[i];
        worst = worst.max(r.abs());
    }
    worst / peak
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_reference_spectrum() {
        // (0,0) is the oscillator shifted to E = 0, 2, 4, ...
        let m = ModelParams::new(0, 0);
        let cfg = FdSolverConfig::new(10.0, 4000, 5);
        let eigs = fd_spectrum(&m, &cfg);
        for (k, e) in eigs.iter().enumerate() {
            assert!((e - 2.0 * k as f64).abs() < 2e-3, "level {k}: got {e}");
        }
    }

    #[test]
    fn gapped_spectrum_reference() {
        // (1,1): {0, 2} then {8, 10}.
        let m = ModelParams::new(1, 1);
        let cfg = FdSolverConfig::auto(&m, 4);
        let eigs = fd_spectrum(&m, &cfg);
        let expected = [0.0, 2.0, 8.0, 10.0];
        for (e, want) in eigs.iter().zip(expected) {
            assert!((e - want).abs() < 5e-3, "got {e}, want {want}");
        }
    }

    #[test]
    fn refinement_is_stable() {
        // Doubling the grid moves each reported eigenvalue by < 1e-3.
        let m = ModelParams::new(2, 1);
        let coarse = fd_spectrum(&m, &FdSolverConfig::new(9.0, 2000, 5));
        let fine = fd_spectrum(&m, &FdSolverConfig::new(9.0, 4000, 5));
        for (a, b) in coarse.iter().zip(&fine) {
            assert!((a - b).abs() < 1e-3, "{a} vs {b}");
        }
    }

    #[test]
    fn no_spurious_state_in_the_gap() {
        let m = ModelParams::new(2, 1);
        let cfg = FdSolverConfig::auto(&m, 8);
        let eigs = fd_spectrum(&m, &cfg);
        for e in &eigs {
            assert!(
                !(4.1..=9.9).contains(e),
                "spurious eigenvalue {e} inside the gap (4, 10)"
            );
        }
    }

    #[test]
    fn deeper_family_member_passes_the_stencil_test() {
        // (2,2), infinite sequence, n = 1: a degree-17 polynomial state.
        let m = ModelParams::new(2, 2);
        let cfg = FdSolverConfig::new(10.0, 8000, 1);
        let r = eigenfunction_residual(&m, Sequence::Infinite, 1, &cfg);
        assert!(r < 1e-4, "residual {r}");
    }

    #[test]
    #[should_panic(expected = "grid too coarse")]
    fn coarse_grids_are_rejected() {
        let _ = FdSolverConfig::new(8.0, 100, 3);
    }

    #[test]
    fn analytic_eigenpairs_pass_the_stencil_test() {
        let m = ModelParams::new(2, 1);
        let cfg = FdSolverConfig::new(9.0, 8000, 1);
        let r = eigenfunction_residual(&m, Sequence::Finite, 0, &cfg);
        assert!(r < 1e-5, "residual {r}");
        let r = eigenfunction_residual(&m, Sequence::Infinite, 1, &cfg);
        assert!(r < 1e-4, "residual {r}");
    }

    #[test]
    fn wrong_energy_fails_the_stencil_test() {
        let m = ModelParams::new(2, 1);
        let cfg = FdSolverConfig::new(9.0, 4000, 1);
        let poly = ppoly(&m, Sequence::Finite, 0).unwrap();
        let mu = weight(&m);
        let v = potential(&m);
        let e = 1.0; // true energy is 0
        let npts = cfg.grid_points;
        let dx = 2.0 * cfg.half_width / (npts as f64 - 1.0);
        let phi: Vec<f64> = (0..npts)
            .map(|i| {
                let x = -cfg.half_width + i as f64 * dx;
                mu.eval_f64(x) * poly.eval_f64(x)
            })
            .collect();
        let peak = phi.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        let mut worst = 0.0f64;
        for i in 2..npts - 2 {
            let x = -cfg.half_width + i as f64 * dx;
            let second = (-phi[i - 2] + 16.0 * phi[i - 1] - 30.0 * phi[i] + 16.0 * phi[i + 1]
                - phi[i + 2])
                / (12.0 * dx * dx);
            worst = worst.max((-second + (v.eval_f64(x) - e) * phi[i]).abs());
        }
        assert!(worst / peak > 1e-1);
    }
}
