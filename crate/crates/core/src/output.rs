//! Serialization schemas for the command-line interface and the golden
//! table files. Identical invocations must produce byte-identical output,
//! so everything here is struct-ordered serde with string-encoded exact
//! rationals ("num/den") and no hash maps.

use crate::algebra;
use crate::exact::{Polynomial, RationalFunction};
use crate::genhermite::gh;
use crate::model::{self, ModelParams, Sequence};
use crate::ppoly;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Wire form of a reduced rational function.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RationalFunctionJson {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl From<&RationalFunction> for RationalFunctionJson {
    fn from(r: &RationalFunction) -> Self {
        RationalFunctionJson {
            num: r.num().clone(),
            den: r.den().clone(),
        }
    }
}

/// One row of a polynomial reference table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GhRow {
    pub p: u32,
    pub q: u32,
    pub coefficients: Polynomial,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyRow {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub coefficients: Polynomial,
}

/// Line-oriented JSON for the golden table files: one row object per line,
/// so the byte layout is stable under any serde version.
pub fn rows_to_golden_json<T: Serialize>(rows: &[T]) -> String {
    let mut out = String::from("{\"rows\":[\n");
    let body: Vec<String> = rows
        .iter()
        .map(|r| serde_json::to_string(r).expect("row serializes"))
        .collect();
    out.push_str(&body.join(",\n"));
    out.push_str("\n]}\n");
    out
}

/// The generalized Hermite reference grid 1 <= p <= pmax, 1 <= q <= qmax.
pub fn gh_table_rows(pmax: u32, qmax: u32) -> Vec<GhRow> {
    let mut rows = Vec::new();
    for q in 1..=qmax {
        for p in 1..=pmax {
            rows.push(GhRow {
                p,
                q,
                coefficients: (*gh(p, q)).clone(),
            });
        }
    }
    rows
}

/// The published finite-family rows: primitive parts for n >= 1 at
/// (p,q) in {(2,1),(2,2),(3,1)}, including the truncation row.
pub fn finite_family_rows() -> Vec<FamilyRow> {
    let mut rows = Vec::new();
    for (p, q) in [(2u32, 1u32), (2, 2), (3, 1)] {
        let m = ModelParams::new(p, q);
        for n in 1..=p + 1 {
            let poly = ppoly::ppoly(&m, Sequence::Finite, n).expect("family entry");
            rows.push(FamilyRow {
                p,
                q,
                n,
                coefficients: poly.primitive_part(),
            });
        }
    }
    rows
}

/// The published infinite-family rows: primitive parts for n = 1..3 at
/// (p,q) in {(2,1),(2,2)}.
pub fn infinite_family_rows() -> Vec<FamilyRow> {
    let mut rows = Vec::new();
    for (p, q) in [(2u32, 1u32), (2, 2)] {
        let m = ModelParams::new(p, q);
        for n in 1..=3 {
            let poly = ppoly::ppoly(&m, Sequence::Infinite, n).expect("family entry");
            rows.push(FamilyRow {
                p,
                q,
                n,
                coefficients: poly.primitive_part(),
            });
        }
    }
    rows
}

#[derive(Debug, Serialize)]
pub struct GhJson {
    pub p: u32,
    pub q: u32,
    pub coefficients: Polynomial,
}

#[derive(Debug, Serialize)]
pub struct PivJson {
    pub family: u8,
    pub p: u32,
    pub q: u32,
    pub alpha: String,
    pub beta: String,
    #[serde(rename = "wLogForm")]
    pub w_log_form: RationalFunctionJson,
    #[serde(rename = "wRatioForm")]
    pub w_ratio_form: RationalFunctionJson,
    #[serde(rename = "formsAgree")]
    pub forms_agree: bool,
    #[serde(rename = "residualZero", skip_serializing_if = "Option::is_none")]
    pub residual_zero: Option<bool>,
}

pub fn piv_json(family: crate::painleve::PivFamily, p: u32, q: u32, check: bool) -> PivJson {
    let sol = crate::painleve::make_w(family, p, q);
    let ratio = crate::painleve::make_w_ratio(family, p, q);
    let residual_zero = if check {
        Some(if sol.w.is_zero() {
            true
        } else {
            crate::painleve::piv_residual(&sol.w, &sol.params).is_zero()
        })
    } else {
        None
    };
    PivJson {
        family: family.index(),
        p,
        q,
        alpha: rational_string(&sol.params.alpha),
        beta: rational_string(&sol.params.beta),
        forms_agree: sol.w == ratio,
        w_log_form: RationalFunctionJson::from(&sol.w),
        w_ratio_form: RationalFunctionJson::from(&ratio),
        residual_zero,
    }
}

#[derive(Debug, Serialize)]
pub struct ParamsJson {
    pub p: u32,
    pub q: u32,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub d: i64,
    pub eps1: i64,
    pub eps2: i64,
    #[serde(rename = "gapWidth")]
    pub gap_width: i64,
}

impl From<&ModelParams> for ParamsJson {
    fn from(m: &ModelParams) -> Self {
        ParamsJson {
            p: m.p,
            q: m.q,
            alpha: m.alpha(),
            beta: m.beta(),
            gamma: m.gamma(),
            d: m.d(),
            eps1: m.eps1(),
            eps2: m.eps2(),
            gap_width: m.gap_width(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PotentialJson {
    #[serde(rename = "quadraticShift")]
    pub quadratic_shift: i64,
    #[serde(rename = "rationalPart")]
    pub rational_part: RationalFunctionJson,
    pub samples: Vec<(f64, f64)>,
}

#[derive(Debug, Serialize)]
pub struct SpectralPointJson {
    pub sequence: u8,
    pub n: u32,
    pub energy: i64,
    pub csq: String,
    #[serde(rename = "relNormSq")]
    pub rel_norm_sq: String,
}

#[derive(Debug, Serialize)]
pub struct ZeroModesJson {
    pub ground: Polynomial,
    #[serde(rename = "finiteTop")]
    pub finite_top: Polynomial,
    #[serde(rename = "infiniteAnchor")]
    pub infinite_anchor: Polynomial,
}

#[derive(Debug, Serialize)]
pub struct ModelJson {
    pub params: ParamsJson,
    pub potential: PotentialJson,
    pub spectrum: Vec<SpectralPointJson>,
    #[serde(rename = "zeroModes")]
    pub zero_modes: ZeroModesJson,
}

pub fn model_json(m: &ModelParams, xmin: f64, xmax: f64, samples: usize) -> ModelJson {
    let v = model::potential(m);
    let grid: Vec<(f64, f64)> = (0..samples)
        .map(|i| {
            let x = xmin + (xmax - xmin) * i as f64 / (samples.max(2) - 1) as f64;
            (x, v.eval_f64(x))
        })
        .collect();
    let zm = model::zero_mode_polys(m);
    ModelJson {
        params: ParamsJson::from(m),
        potential: PotentialJson {
            quadratic_shift: v.quadratic_shift,
            rational_part: RationalFunctionJson::from(&v.rational_part),
            samples: grid,
        },
        spectrum: model::spectrum(m, 8)
            .iter()
            .map(|s| SpectralPointJson {
                sequence: s.seq.index(),
                n: s.n,
                energy: s.energy,
                csq: rational_string(&s.csq),
                rel_norm_sq: rational_string(&s.rel_norm_sq),
            })
            .collect(),
        zero_modes: ZeroModesJson {
            ground: (*zm.ground).clone(),
            finite_top: (*zm.finite_top).clone(),
            infinite_anchor: (*zm.infinite_anchor).clone(),
        },
    }
}

#[derive(Debug, Serialize)]
pub struct PpolyRowJson {
    pub n: u32,
    pub coefficients: Polynomial,
    #[serde(rename = "odeResidualZero", skip_serializing_if = "Option::is_none")]
    pub ode_residual_zero: Option<bool>,
    #[serde(rename = "oracleMatch", skip_serializing_if = "Option::is_none")]
    pub oracle_match: Option<bool>,
}

pub fn ppoly_rows_json(
    m: &ModelParams,
    seq: Sequence,
    nmax: u32,
    verify: bool,
) -> Result<Vec<PpolyRowJson>, crate::ppoly::PpolyError> {
    let mut rows = Vec::new();
    for n in 0..=nmax {
        let poly = ppoly::ppoly(m, seq, n)?;
        let (ode_residual_zero, oracle_match) = if verify {
            let ode = ppoly::ode_residual(m, seq, n)?.is_zero();
            let oracle = if n == 0 {
                true
            } else if seq == Sequence::Finite && n > m.p + 1 {
                poly.is_zero()
            } else {
                ppoly::raise_oracle(m, seq, n - 1)? == *poly
            };
            (Some(ode), Some(oracle))
        } else {
            (None, None)
        };
        rows.push(PpolyRowJson {
            n,
            coefficients: (*poly).clone(),
            ode_residual_zero,
            oracle_match,
        });
    }
    Ok(rows)
}

#[derive(Debug, Serialize)]
pub struct DeformedLadderJson {
    pub shift: String,
    #[serde(rename = "shiftConst")]
    pub shift_const: String,
    /// (eigenvalue, squared deformation value) pairs, ascending.
    #[serde(rename = "squaredValuesAt")]
    pub squared_values_at: Vec<(i64, String)>,
}

#[derive(Debug, Serialize)]
pub struct ClosureJson {
    pub pass: bool,
    #[serde(rename = "rowsChecked")]
    pub rows_checked: usize,
    pub casimir: String,
}

#[derive(Debug, Serialize)]
pub struct AlgebraJson {
    #[serde(rename = "fgTable")]
    pub fg_table: (DeformedLadderJson, DeformedLadderJson),
    pub su2: ClosureJson,
    pub su11: ClosureJson,
}

pub fn algebra_json(m: &ModelParams, dim: u32) -> Result<AlgebraJson, algebra::AlgebraError> {
    let (f, g) = algebra::solve_fg(m)?;
    let ladder_json = |l: &algebra::DeformedLadder| DeformedLadderJson {
        shift: rational_string(&l.shift),
        shift_const: rational_string(&l.shift_const),
        squared_values_at: l
            .fsq_at
            .iter()
            .map(|(e, v)| (*e, rational_string(v)))
            .collect(),
    };
    let su2 = algebra::check_su2(m)?;
    let su11 = algebra::check_su11(m, dim)?;
    let closure_json = |r: &algebra::CommutatorReport| ClosureJson {
        pass: r.pass(),
        rows_checked: r.rows_checked,
        casimir: r
            .casimir()
            .map(rational_string)
            .unwrap_or_else(|| "0/1".to_string()),
    };
    Ok(AlgebraJson {
        fg_table: (ladder_json(&f), ladder_json(&g)),
        su2: closure_json(&su2),
        su11: closure_json(&su11),
    })
}

/// CSV sampling of a model quantity on a uniform grid.
pub fn sample_csv(
    m: &ModelParams,
    what: &SampleTarget,
    xmin: f64,
    xmax: f64,
    samples: usize,
) -> String {
    let mut out = String::from("x,value\n");
    let f: Box<dyn Fn(f64) -> f64> = match what {
        SampleTarget::Potential => {
            let v = model::potential(m);
            Box::new(move |x| v.eval_f64(x))
        }
        SampleTarget::Weight => {
            let w = model::weight(m);
            Box::new(move |x| w.eval_f64(x))
        }
        SampleTarget::State(seq, n) => {
            let poly = ppoly::ppoly(m, *seq, *n).expect("family entry exists");
            let w = model::weight(m);
            Box::new(move |x| w.eval_f64(x) * poly.eval_f64(x))
        }
    };
    for i in 0..samples {
        let x = xmin + (xmax - xmin) * i as f64 / (samples.max(2) - 1) as f64;
        out.push_str(&format!("{x},{}\n", f(x)));
    }
    out
}

/// What the `sample` subcommand emits.
#[derive(Debug, Clone, Copy)]
pub enum SampleTarget {
    Potential,
    Weight,
    State(Sequence, u32),
}

impl SampleTarget {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "potential" => Ok(SampleTarget::Potential),
            "weight" => Ok(SampleTarget::Weight),
            other => {
                let rest = other
                    .strip_prefix("state:")
                    .ok_or_else(|| format!("unknown sample target {other:?}"))?;
                let (j, n) = rest
                    .split_once(',')
                    .ok_or_else(|| "state target needs the form state:j,n".to_string())?;
                let j: u8 = j.parse().map_err(|e| format!("bad sequence index: {e}"))?;
                let seq = Sequence::from_index(j)
                    .ok_or_else(|| "sequence index must be 1 or 2".to_string())?;
                let n: u32 = n.parse().map_err(|e| format!("bad level: {e}"))?;
                Ok(SampleTarget::State(seq, n))
            }
        }
    }
}
