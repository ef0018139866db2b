//! Named verification checks for one model, aggregated for the command-line
//! `verify` subcommand. Exact checks report the number of violated
//! identities (tolerance 0); numeric checks report the worst measured
//! deviation against its tolerance.

use super::{eigenfunction_residual, fd_spectrum, gram_matrix, FdSolverConfig, QuadratureConfig};
use crate::algebra::{check_su11, check_su2};
use crate::model::{
    eigen_residual, energy, ladder_csq, nonnormalizable_modes, rel_norm_sq, zero_mode_polys,
    ModelParams, Sequence,
};
use crate::operators::GaussianSign;
use crate::painleve::{backlund_minus, backlund_plus, piv_residual, regular_w};
use crate::ppoly::{ode_residual, ppoly, raise_oracle};
use num_traits::ToPrimitive;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One named check: what was measured and against which tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: CheckStatus,
    pub measured: f64,
    pub tolerance: f64,
}

impl CheckResult {
    fn exact(name: &str, violations: usize) -> Self {
        CheckResult {
            check: name.to_string(),
            status: if violations == 0 {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            measured: violations as f64,
            tolerance: 0.0,
        }
    }

    fn numeric(name: &str, measured: f64, tolerance: f64) -> Self {
        CheckResult {
            check: name.to_string(),
            status: if measured <= tolerance {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            measured,
            tolerance,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Exact,
    Numeric,
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub p: u32,
    pub q: u32,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }
}

fn exact_checks(params: &ModelParams, out: &mut Vec<CheckResult>) {
    let (p, q) = (params.p, params.q);

    // The regular hierarchy solution solves its nonlinear equation.
    if q >= 1 {
        let sol = regular_w(p, q);
        let bad = usize::from(!piv_residual(&sol.w, &sol.params).is_zero());
        out.push(CheckResult::exact("painleve-residual", bad));

        let bad = usize::from(!backlund_minus(p, q).both_zero())
            + usize::from(!backlund_plus(p, q).both_zero());
        out.push(CheckResult::exact("backlund-identities", bad));
    }

    // Anchor eigenstates solve the eigen-equation at their exact energies.
    let zm = zero_mode_polys(params);
    let mut bad = 0;
    for (s, e) in [
        (&zm.ground, 0),
        (&zm.finite_top, params.eps2()),
        (&zm.infinite_anchor, params.eps1() + 2),
    ] {
        if !eigen_residual(params, GaussianSign::Decaying, s, e).is_zero() {
            bad += 1;
        }
    }
    out.push(CheckResult::exact("anchor-eigenstates", bad));

    if q >= 1 {
        let modes = nonnormalizable_modes(params);
        let mut bad = 0;
        for mode in [&modes.lowering_kernel, &modes.raising_kernel] {
            if !eigen_residual(params, mode.sign, &mode.poly, mode.energy).is_zero() {
                bad += 1;
            }
        }
        out.push(CheckResult::exact("growing-kernel-eigenstates", bad));

        // Polynomial families: differential equation and raising oracle.
        let mut ode_bad = 0;
        let mut oracle_bad = 0;
        for seq in [Sequence::Finite, Sequence::Infinite] {
            let top = match seq {
                Sequence::Finite => p,
                Sequence::Infinite => 3,
            };
            for n in 0..=top {
                if !ode_residual(params, seq, n)
                    .map(|r| r.is_zero())
                    .unwrap_or(false)
                {
                    ode_bad += 1;
                }
                // Raising from the finite top must annihilate; the infinite
                // sequence is only raised below the generation ceiling.
                if n < top || seq == Sequence::Finite {
                    let raised = raise_oracle(params, seq, n);
                    let target = ppoly(params, seq, n + 1);
                    match (raised, target) {
                        (Ok(a), Ok(b)) if a == *b => {}
                        _ => oracle_bad += 1,
                    }
                }
            }
        }
        out.push(CheckResult::exact("family-differential-equation", ode_bad));
        out.push(CheckResult::exact("family-raising-oracle", oracle_bad));
    }

    // Ladder cubic and norm telescoping.
    let mut bad = 0;
    let cubic =
        |e: i64| crate::exact::poly::rat_i64((e + 2) * (e - params.eps1()) * (e - params.eps2()));
    for n in 0..=p {
        if ladder_csq(params, Sequence::Finite, n + 1) != cubic(energy(params, Sequence::Finite, n))
        {
            bad += 1;
        }
    }
    for n in 0..6 {
        if ladder_csq(params, Sequence::Infinite, n + 1)
            != cubic(energy(params, Sequence::Infinite, n))
        {
            bad += 1;
        }
        let ratio = rel_norm_sq(params, Sequence::Infinite, n + 1).unwrap()
            / rel_norm_sq(params, Sequence::Infinite, n).unwrap();
        if ratio != ladder_csq(params, Sequence::Infinite, n + 1) {
            bad += 1;
        }
    }
    out.push(CheckResult::exact("ladder-cubic-and-norms", bad));

    // Deformed algebra closure.
    let su2_ok = check_su2(params).map(|r| r.pass()).unwrap_or(false);
    out.push(CheckResult::exact("su2-closure", usize::from(!su2_ok)));
    let su11_ok = check_su11(params, 10).map(|r| r.pass()).unwrap_or(false);
    out.push(CheckResult::exact("su11-closure", usize::from(!su11_ok)));

    // Nodal structure of the anchors.
    use crate::genhermite::real_zero_count;
    let mut bad = 0;
    if real_zero_count(&zm.ground) != 0 {
        bad += 1;
    }
    if real_zero_count(&zm.finite_top) != p as usize {
        bad += 1;
    }
    if real_zero_count(&zm.infinite_anchor) != p as usize + 1 {
        bad += 1;
    }
    out.push(CheckResult::exact("anchor-nodal-structure", bad));
}

fn numeric_checks(params: &ModelParams, out: &mut Vec<CheckResult>) {
    let (p, q) = (params.p, params.q);

    // Finite-difference spectrum against the analytic ladders, within the
    // O(dx^2) error budget of the discretization.
    let count = p as usize + 5;
    let cfg = FdSolverConfig::auto(params, count);
    let eigs = fd_spectrum(params, &cfg);
    let mut analytic: Vec<f64> = (0..=p)
        .map(|n| energy(params, Sequence::Finite, n) as f64)
        .collect();
    for n in 0..(count as u32 - p) {
        analytic.push(energy(params, Sequence::Infinite, n) as f64);
    }
    analytic.truncate(eigs.len());
    let worst = eigs
        .iter()
        .zip(&analytic)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    out.push(CheckResult::numeric("fd-spectrum", worst, 5e-3));

    // No spurious state inside the open gap (shrunk by the margin 0.1).
    if q >= 1 {
        let gap = (params.eps2() as f64 + 0.1, (params.eps1() + 2) as f64 - 0.1);
        let spurious = eigs.iter().filter(|e| **e > gap.0 && **e < gap.1).count();
        out.push(CheckResult::exact("fd-gap-purity", spurious));
    }

    if q >= 1 {
        // Gram matrix of the first family members: off-diagonals vanish to
        // 1e-9 relative, diagonal ratios match the exact norms to 1e-7.
        let mut states = Vec::new();
        for n in 0..=p.min(4) {
            states.push((Sequence::Finite, n));
        }
        for n in 0..=4 {
            states.push((Sequence::Infinite, n));
        }
        let qcfg = QuadratureConfig::auto(params, &states);
        match gram_matrix(params, &states, &qcfg) {
            Ok(gram) => {
                let mut worst_off = 0.0f64;
                for i in 0..states.len() {
                    for j in 0..i {
                        let scale = (gram[i][i].value * gram[j][j].value).sqrt();
                        worst_off = worst_off.max(gram[i][j].value.abs() / scale);
                    }
                }
                out.push(CheckResult::numeric("gram-orthogonality", worst_off, 1e-9));

                let mut worst_ratio = 0.0f64;
                for seq in [Sequence::Finite, Sequence::Infinite] {
                    let base = states
                        .iter()
                        .position(|&(s, n)| s == seq && n == 0)
                        .unwrap();
                    for (i, &(s, n)) in states.iter().enumerate() {
                        if s != seq || n == 0 {
                            continue;
                        }
                        let exact = rel_norm_sq(params, seq, n).unwrap().to_f64().unwrap();
                        let got = gram[i][i].value / gram[base][base].value;
                        worst_ratio = worst_ratio.max((got - exact).abs() / exact);
                    }
                }
                out.push(CheckResult::numeric("gram-norm-ratios", worst_ratio, 1e-7));
            }
            Err(_) => {
                out.push(CheckResult::numeric(
                    "gram-orthogonality",
                    f64::INFINITY,
                    1e-9,
                ));
            }
        }

        // Stencil residual of one analytic eigenpair per sequence.
        let rcfg = FdSolverConfig::new(cfg.half_width, 8000, 1);
        let r1 = eigenfunction_residual(params, Sequence::Finite, 0, &rcfg);
        let r2 = eigenfunction_residual(params, Sequence::Infinite, 1, &rcfg);
        out.push(CheckResult::numeric(
            "eigenfunction-stencil",
            r1.max(r2),
            1e-4,
        ));
    }
}

/// Runs the selected checks for one model and aggregates the outcome.
pub fn run_suite(params: &ModelParams, kind: SuiteKind) -> SuiteReport {
    let mut checks = Vec::new();
    if kind != SuiteKind::Numeric {
        exact_checks(params, &mut checks);
    }
    if kind != SuiteKind::Exact {
        numeric_checks(params, &mut checks);
    }
    SuiteReport {
        p: params.p,
        q: params.q,
        checks,
    }
}
