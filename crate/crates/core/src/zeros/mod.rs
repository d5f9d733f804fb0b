//! Positive zeros of `𝒥` (the `j_n`) and of `f′` (the `γ_n`).
//!
//! Zeros are located by scanning the positive axis for sign changes and
//! refining each bracket. Below [`SERIES_LIMIT`] the power series is used
//! directly; further out the function is continued along the real axis by
//! Taylor stepping of its differential equation.

mod bracket;
mod continuation;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use bracket::{find_zero_bracketed, refine, Refined, MAX_ITERATIONS};

use crate::error::{Error, Result};
use crate::series::{eval_j, HyperBesselParams, SeriesConfig};
use continuation::Continuation;

/// Brackets whose right end lies beyond this abscissa use the continuation.
pub const SERIES_LIMIT: f64 = 6.0;
const CONTINUATION_START: f64 = 5.0;
const SCAN_START: f64 = 1e-3;
const SCAN_STEP: f64 = 0.5;
const MIN_SCAN_STEP: f64 = 1e-3;
/// Largest admissible |target| at a tabulated zero.
pub const ZERO_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroKind {
    /// Zeros of `𝒥`.
    FunctionZeros,
    /// Zeros of `f′ = 𝒥 + z𝒥′`.
    DerivativeZeros,
}

impl ZeroKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ZeroKind::FunctionZeros => "function-zeros",
            ZeroKind::DerivativeZeros => "derivative-zeros",
        }
    }
}

/// The first few positive zeros of `𝒥` or `f′`, ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroTable {
    pub params: HyperBesselParams,
    pub kind: ZeroKind,
    pub zeros: Vec<f64>,
    pub residual_tol: f64,
}

impl ZeroTable {
    pub fn first(&self) -> f64 {
        self.zeros[0]
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// The leading `n` zeros as a new table.
    pub fn truncated(&self, n: usize) -> ZeroTable {
        ZeroTable {
            zeros: self.zeros[..n.min(self.zeros.len())].to_vec(),
            ..self.clone()
        }
    }
}

/// The first `count` positive zeros of `𝒥`.
pub fn first_zeros_j(
    params: &HyperBesselParams,
    count: usize,
    cfg: &SeriesConfig,
) -> Result<ZeroTable> {
    scan(params, ZeroKind::FunctionZeros, count, cfg)
}

/// The first `count` positive zeros of `f′`.
pub fn first_zeros_f_prime(
    params: &HyperBesselParams,
    count: usize,
    cfg: &SeriesConfig,
) -> Result<ZeroTable> {
    scan(params, ZeroKind::DerivativeZeros, count, cfg)
}

/// Evaluates the scan target, switching to the continuation far out.
struct Target<'a> {
    params: &'a HyperBesselParams,
    kind: ZeroKind,
    cfg: &'a SeriesConfig,
    cont: Option<Continuation>,
}

impl<'a> Target<'a> {
    fn series(&self, x: f64) -> Result<f64> {
        let j = eval_j(self.params, Complex64::new(x, 0.0), self.cfg)?;
        Ok(match self.kind {
            ZeroKind::FunctionZeros => j.value.re,
            ZeroKind::DerivativeZeros => j.value.re + x * j.d1.re,
        })
    }

    /// Prepares an evaluator that is continuous on `[lo, hi]`.
    fn on(&mut self, lo: f64, hi: f64) -> Result<Segment<'_>> {
        if hi <= SERIES_LIMIT {
            return Ok(Segment::Series(self));
        }
        if self.cont.is_none() {
            let start = CONTINUATION_START.min(lo);
            self.cont = Some(Continuation::new(self.params, start, self.cfg)?);
        }
        let cont = self.cont.as_mut().unwrap();
        cont.ensure(hi);
        let reference = cont.log_scale_at(lo);
        Ok(Segment::Continued {
            cont: self.cont.as_ref().unwrap(),
            kind: self.kind,
            reference,
        })
    }
}

enum Segment<'t> {
    Series(&'t Target<'t>),
    Continued {
        cont: &'t Continuation,
        kind: ZeroKind,
        reference: f64,
    },
}

impl Segment<'_> {
    fn eval(&self, x: f64) -> Result<f64> {
        match self {
            Segment::Series(t) => t.series(x),
            Segment::Continued {
                cont,
                kind,
                reference,
            } => {
                // in the local normalization of the node; f′ is divided by x to stay O(1)
                let (v, dv) = cont.eval(x, *reference);
                Ok(match kind {
                    ZeroKind::FunctionZeros => v,
                    ZeroKind::DerivativeZeros => v / x + dv,
                })
            }
        }
    }
}

fn scan(
    params: &HyperBesselParams,
    kind: ZeroKind,
    count: usize,
    cfg: &SeriesConfig,
) -> Result<ZeroTable> {
    if count == 0 {
        return Err(Error::Domain("zero count must be at least 1".into()));
    }
    cfg.validate()?;
    let ceiling = 20.0 * params.order() as f64 * count as f64;
    let mut target = Target {
        params,
        kind,
        cfg,
        cont: None,
    };

    let mut zeros: Vec<f64> = Vec::with_capacity(count);
    let mut h = SCAN_STEP;
    let mut a = SCAN_START;
    while zeros.len() < count {
        let b = a + h;
        if b > ceiling {
            return Err(Error::ScanExhausted {
                found: zeros.len(),
                wanted: count,
                ceiling,
            });
        }
        match bracketed_zero(&mut target, a, b)? {
            Some(z) => {
                if let Some(&prev) = zeros.last() {
                    // closely spaced zeros: look for any that a coarse step skipped
                    if z - prev < 2.0 * h && h > MIN_SCAN_STEP {
                        h *= 0.5;
                        let missed = scan_gap(&mut target, prev + 0.25 * h, z - 0.25 * h, h)?;
                        zeros.extend(missed);
                    }
                }
                zeros.push(z);
                a = z + 0.25 * h;
            }
            None => a = b,
        }
    }
    zeros.sort_by(f64::total_cmp);
    zeros.truncate(count);

    Ok(ZeroTable {
        params: params.clone(),
        kind,
        zeros,
        residual_tol: ZERO_RESIDUAL_TOL,
    })
}

fn scan_gap(target: &mut Target<'_>, lo: f64, hi: f64, h: f64) -> Result<Vec<f64>> {
    let mut found = Vec::new();
    let mut a = lo;
    while a < hi {
        let b = (a + h).min(hi);
        match bracketed_zero(target, a, b)? {
            Some(z) => {
                found.push(z);
                a = z + 0.25 * h;
            }
            None => a = b,
        }
    }
    Ok(found)
}

/// Refined zero in `[a, b]` if the target changes sign there.
fn bracketed_zero(target: &mut Target<'_>, a: f64, b: f64) -> Result<Option<f64>> {
    let seg = target.on(a, b)?;
    let (ga, gb) = (seg.eval(a)?, seg.eval(b)?);
    if ga == 0.0 || (ga > 0.0) == (gb > 0.0) && gb != 0.0 {
        return Ok(None);
    }
    // well inside the required 1e-12·(1 + r), so the residual reflects evaluation error only
    let tol = 1e-15 * (1.0 + b);
    let refined = refine(|x| seg.eval(x), a, b, tol)?;
    if !(refined.residual.abs() <= ZERO_RESIDUAL_TOL) {
        return Err(Error::ZeroResidual {
            r: refined.root,
            residual: refined.residual,
            tol: ZERO_RESIDUAL_TOL,
        });
    }
    Ok(Some(refined.root))
}
