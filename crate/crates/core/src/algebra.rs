//! Deformed ladder operators and their su(2) / su(1,1) realizations on the
//! two eigenvalue sequences.
//!
//! Rescaling the third-order ladder operators by a function of the
//! Hamiltonian, minus = f(H) A and plus = A^dagger f(H), turns the finite
//! sequence into an su(2) multiplet and (with a second function g) the
//! infinite sequence into an su(1,1) one:
//!
//! ```text
//! [f(2n)]^2 = 1 / (8 (p + 2q - n)),   [g(2n)]^2 = 1 / (8 (n + 1)),
//! minus |n,fin> = sqrt(n (p + 1 - n)) |n-1,fin>,
//! minus |n,inf> = sqrt(n (n + 2q))    |n-1,inf>,
//! ```
//!
//! with zero-operator eigenvalues n - p/2 (su(2)) and n + q + 1/2
//! (su(1,1)). The shifts come out of an exact finite-difference match:
//! a0 = -p/2, b0 = q + 1/2, a1 = b1 = 0, and the zero operator is the
//! number operator plus that shift in both cases (the su(2) commutator
//! [minus, plus] = -2 zero forces the n - p/2 eigenvalue; placing the
//! shift with the opposite sign does not survive the exact commutator
//! check).
//!
//! Every individual ladder matrix element is an irrational square root, so
//! the representation stores squared elements and every check below is
//! arranged to live in products and squares that are rational. Nothing in
//! this module touches floating point.

use crate::exact::poly::rat_i64;
use crate::exact::Polynomial;
use crate::model::{energy, ModelParams, Sequence};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    /// The finite-difference match did not produce the expected polynomial
    /// shape.
    #[error("inconsistent polynomial match: {detail}")]
    InconsistentMatch { detail: String },

    /// A representation was requested at an impossible dimension.
    #[error("dimension {got} invalid: {why}")]
    DimensionMismatch { got: u32, why: String },
}

/// Which deformed ladder pair a value describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    /// su(2) pair acting on the finite sequence.
    SuTwo,
    /// su(1,1) pair acting on the infinite sequence.
    SuOneOne,
}

/// One deformed ladder: the squared deformation values on the eigenvalues
/// where they act, plus the constants of the zero-operator shift.
#[derive(Debug, Clone)]
pub struct DeformedLadder {
    pub kind: LadderKind,
    /// Squared deformation value keyed by the eigenvalue it is evaluated
    /// at: [f(E)]^2 = 1/(8(p + 2q - E/2)) or [g(E)]^2 = 1/(8(E/2 + 1)).
    pub fsq_at: BTreeMap<i64, BigRational>,
    /// Additive shift of the zero operator: -p/2 for su(2), q + 1/2 for
    /// su(1,1).
    pub shift: BigRational,
    /// The constant term of the finite-difference match; always 0.
    pub shift_const: BigRational,
}

/// Solves the finite-difference conditions for the deformation functions
/// by exact polynomial matching in the level index. The left-hand sides
/// collapse to -n^2 + (p+1) n (su(2) side) and n^2 + 2q n (su(1,1) side);
/// matching against -n^2 - (2 a0 - 1) n + a1 and n^2 + (2 b0 - 1) n + b1
/// forces a0 = -p/2, a1 = 0 and b0 = q + 1/2, b1 = 0.
pub fn solve_fg(params: &ModelParams) -> Result<(DeformedLadder, DeformedLadder), AlgebraError> {
    let (p, q) = (params.p as i64, params.q as i64);
    let nvar = Polynomial::x();

    // su(2) side: [f(2n-2)]^2 * 8 n (n - p - 1)(n - p - 2q - 1) with
    // [f(2m)]^2 = 1/(8 (p + 2q - m)) at m = n - 1, so the denominator is
    // p + 2q - n + 1 = -(n - p - 2q - 1): one cubic factor cancels exactly.
    let cubic_f = &(&nvar * &Polynomial::from_int_coeffs(&[-p - 1, 1]))
        * &Polynomial::from_int_coeffs(&[-p - 2 * q - 1, 1]);
    let denom_f = Polynomial::from_int_coeffs(&[p + 2 * q + 1, -1]);
    let lhs_f = cubic_f
        .divexact(&denom_f)
        .map_err(|e| AlgebraError::InconsistentMatch {
            detail: format!("su(2) cancellation failed: {e}"),
        })?;
    // lhs_f = -n^2 + (p+1) n; match -n^2 - (2 a0 - 1) n + a1.
    if lhs_f.degree() != Some(2) || lhs_f.leading() != rat_i64(-1) {
        return Err(AlgebraError::InconsistentMatch {
            detail: format!("su(2) side is not a negated monic quadratic: {lhs_f}"),
        });
    }
    let a0 = (rat_i64(1) - lhs_f.coeff(1)) / rat_i64(2);
    let a1 = lhs_f.coeff(0);

    // su(1,1) side: [g(2n+2p+4q)]^2 * 8 n (n + 2q)(n + p + 2q + 1) with
    // [g(2m)]^2 = 1/(8 (m + 1)) at m = n + p + 2q: again one factor cancels.
    let cubic_g = &(&nvar * &Polynomial::from_int_coeffs(&[2 * q, 1]))
        * &Polynomial::from_int_coeffs(&[p + 2 * q + 1, 1]);
    let denom_g = Polynomial::from_int_coeffs(&[p + 2 * q + 1, 1]);
    let lhs_g = cubic_g
        .divexact(&denom_g)
        .map_err(|e| AlgebraError::InconsistentMatch {
            detail: format!("su(1,1) cancellation failed: {e}"),
        })?;
    // lhs_g = n^2 + 2q n; match n^2 + (2 b0 - 1) n + b1.
    if lhs_g.degree() != Some(2) || lhs_g.leading() != rat_i64(1) {
        return Err(AlgebraError::InconsistentMatch {
            detail: format!("su(1,1) side is not a monic quadratic: {lhs_g}"),
        });
    }
    let b0 = (lhs_g.coeff(1) + rat_i64(1)) / rat_i64(2);
    let b1 = lhs_g.coeff(0);

    let mut fsq = BTreeMap::new();
    for n in 0..params.p {
        // f is needed at levels 0..p-1 (both the raising action from n and
        // the lowering action into n use f there); positive on that range.
        fsq.insert(
            energy(params, Sequence::Finite, n),
            rat_i64(1) / rat_i64(8 * (p + 2 * q - n as i64)),
        );
    }
    let mut gsq = BTreeMap::new();
    for n in 0..=8u32 {
        let e = energy(params, Sequence::Infinite, n);
        gsq.insert(e, rat_i64(1) / rat_i64(8 * (e / 2 + 1)));
    }

    Ok((
        DeformedLadder {
            kind: LadderKind::SuTwo,
            fsq_at: fsq,
            shift: a0,
            shift_const: a1,
        },
        DeformedLadder {
            kind: LadderKind::SuOneOne,
            fsq_at: gsq,
            shift: b0,
            shift_const: b1,
        },
    ))
}

/// Matrix representation of one deformed ladder triple on a basis of
/// sequence states. The raising matrix is the transpose of the lowering
/// one; both have irrational entries, so they are stored through their
/// element squares (which preserves the zero pattern), while the zero
/// operator is an exactly rational diagonal.
#[derive(Debug, Clone)]
pub struct SequenceMatrixRep {
    pub kind: LadderKind,
    pub dim: u32,
    /// minus_sq[i][j] = (lowering matrix element i <- j)^2; the only
    /// nonzero entries sit at (n-1, n).
    pub minus_sq: Vec<Vec<BigRational>>,
    /// Diagonal of the zero operator.
    pub zero_diag: Vec<BigRational>,
}

impl SequenceMatrixRep {
    /// (raising matrix element i <- j)^2: transpose of the lowering squares.
    pub fn plus_sq(&self, i: usize, j: usize) -> BigRational {
        self.minus_sq[j][i].clone()
    }

    /// Squared subdiagonal element at column n (the action n -> n-1).
    fn hop_sq(&self, n: usize) -> BigRational {
        if n == 0 || n >= self.dim as usize {
            BigRational::zero()
        } else {
            self.minus_sq[n - 1][n].clone()
        }
    }
}

/// Builds the representation: the su(2) one must live on the full finite
/// sequence (dim = p + 1); the su(1,1) one is a truncation of the infinite
/// sequence and needs dim >= 2.
pub fn matrix_rep(
    params: &ModelParams,
    kind: LadderKind,
    dim: u32,
) -> Result<SequenceMatrixRep, AlgebraError> {
    let (p, q) = (params.p as i64, params.q as i64);
    match kind {
        LadderKind::SuTwo => {
            if dim != params.p + 1 {
                return Err(AlgebraError::DimensionMismatch {
                    got: dim,
                    why: format!(
                        "the finite multiplet has dimension p + 1 = {}",
                        params.p + 1
                    ),
                });
            }
        }
        LadderKind::SuOneOne => {
            if dim < 2 {
                return Err(AlgebraError::DimensionMismatch {
                    got: dim,
                    why: "a truncation needs at least two states".to_string(),
                });
            }
        }
    }
    let d = dim as usize;
    let mut minus_sq = vec![vec![BigRational::zero(); d]; d];
    let mut zero_diag = Vec::with_capacity(d);
    for n in 0..d {
        let ni = n as i64;
        let (hop, z) = match kind {
            LadderKind::SuTwo => (
                rat_i64(ni * (p + 1 - ni)),
                rat_i64(ni) - rat_i64(p) / rat_i64(2),
            ),
            LadderKind::SuOneOne => (
                rat_i64(ni * (ni + 2 * q)),
                rat_i64(ni) + rat_i64(q) + rat_i64(1) / rat_i64(2),
            ),
        };
        if n > 0 {
            minus_sq[n - 1][n] = hop;
        }
        zero_diag.push(z);
    }
    Ok(SequenceMatrixRep {
        kind,
        dim,
        minus_sq,
        zero_diag,
    })
}

/// Exact residuals of the commutation relations on one representation.
/// For the bidiagonal ladder structure the commutator [minus, plus] is
/// diagonal with entries hop^2(n+1) - hop^2(n), and the ladder relations
/// [zero, plus] = plus, [zero, minus] = -minus reduce to
/// hop^2(n+1) (zero(n+1) - zero(n) - 1)^2 = 0, all rational.
#[derive(Debug, Clone)]
pub struct CommutatorReport {
    pub kind: LadderKind,
    /// Rows actually checked (the last row of a truncation is excluded for
    /// su(1,1), where the cut makes [minus, plus] wrong by construction).
    pub rows_checked: usize,
    /// Per-row residual of [minus, plus] -/+ 2 zero.
    pub minus_plus_residuals: Vec<BigRational>,
    /// Per-transition squared residual of [zero, plus] - plus.
    pub zero_ladder_residuals: Vec<BigRational>,
    /// Per-row value of the Casimir combination; must be constant.
    pub casimir_values: Vec<BigRational>,
}

impl CommutatorReport {
    pub fn pass(&self) -> bool {
        self.minus_plus_residuals.iter().all(|r| r.is_zero())
            && self.zero_ladder_residuals.iter().all(|r| r.is_zero())
            && self.casimir_values.windows(2).all(|w| w[0] == w[1])
    }

    pub fn casimir(&self) -> Option<&BigRational> {
        self.casimir_values.first()
    }
}

fn commutator_report(rep: &SequenceMatrixRep, interior_only: bool) -> CommutatorReport {
    let d = rep.dim as usize;
    let rows = if interior_only { d - 1 } else { d };
    let sign = match rep.kind {
        LadderKind::SuTwo => rat_i64(-2),
        LadderKind::SuOneOne => rat_i64(2),
    };
    let mut minus_plus = Vec::new();
    let mut zero_ladder = Vec::new();
    let mut casimir = Vec::new();
    for n in 0..rows {
        let commutator_nn = rep.hop_sq(n + 1) - rep.hop_sq(n);
        minus_plus.push(commutator_nn - &sign * &rep.zero_diag[n]);
        if n + 1 < d {
            let step = &rep.zero_diag[n + 1] - &rep.zero_diag[n] - rat_i64(1);
            zero_ladder.push(rep.hop_sq(n + 1) * &step * &step);
        }
        let z = &rep.zero_diag[n];
        let c = match rep.kind {
            // plus minus + zero^2 - zero
            LadderKind::SuTwo => rep.hop_sq(n) + z * z - z,
            // zero^2 - zero - plus minus
            LadderKind::SuOneOne => z * z - z - rep.hop_sq(n),
        };
        casimir.push(c);
    }
    CommutatorReport {
        kind: rep.kind,
        rows_checked: rows,
        minus_plus_residuals: minus_plus,
        zero_ladder_residuals: zero_ladder,
        casimir_values: casimir,
    }
}

/// Verifies the su(2) relations on the full (p+1)-dimensional multiplet;
/// there is no truncation artifact because the ladder closes by itself.
pub fn check_su2(params: &ModelParams) -> Result<CommutatorReport, AlgebraError> {
    let rep = matrix_rep(params, LadderKind::SuTwo, params.p + 1)?;
    Ok(commutator_report(&rep, false))
}

/// Verifies the su(1,1) relations on a dim-dimensional truncation of the
/// infinite sequence. The last basis row is excluded from the commutator
/// check: the cut fabricates no operator entries, it only removes the
/// upward hop, so that row cannot close the algebra.
pub fn check_su11(params: &ModelParams, dim: u32) -> Result<CommutatorReport, AlgebraError> {
    let rep = matrix_rep(params, LadderKind::SuOneOne, dim)?;
    Ok(commutator_report(&rep, true))
}
