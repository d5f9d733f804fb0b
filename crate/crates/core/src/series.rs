//! Truncated power series for the normalized hyper-Bessel function
//!
//! ```text
//! 𝒥(z) = Σ_{n≥0} (−1)^n / (n! (α_1+1)_n ⋯ (α_d+1)_n) · (z/(d+1))^{n(d+1)}
//! ```
//!
//! and its normalization `f(z) = z𝒥(z)`. Terms are generated by the ratio
//! recurrence, so no Gamma function or Pochhammer product is ever formed.
//! Derivatives are obtained by differentiating the same terms.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Denominators below this fraction of their numerator count as a pole.
pub(crate) const POLE_FLOOR: f64 = 1e-12;

/// The dimension `d` and the parameters `α_1, …, α_d` of a hyper-Bessel
/// function. Every `α_i` must exceed −1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct HyperBesselParams {
    alphas: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    d: usize,
    alphas: Vec<f64>,
}

impl TryFrom<RawParams> for HyperBesselParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        HyperBesselParams::with_dimension(raw.d, raw.alphas)
    }
}

impl From<HyperBesselParams> for RawParams {
    fn from(p: HyperBesselParams) -> Self {
        RawParams {
            d: p.d(),
            alphas: p.alphas,
        }
    }
}

impl HyperBesselParams {
    /// Parameters with `d = alphas.len()`.
    pub fn new(alphas: Vec<f64>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::InvalidParams("d must be at least 1".into()));
        }
        for (i, &a) in alphas.iter().enumerate() {
            if !a.is_finite() {
                return Err(Error::InvalidParams(format!("alpha_{} is not finite", i + 1)));
            }
            if a <= -1.0 {
                return Err(Error::InvalidParams(format!(
                    "alpha must exceed -1 (alpha_{} = {a})",
                    i + 1
                )));
            }
        }
        Ok(Self { alphas })
    }

    /// Like [`HyperBesselParams::new`], additionally checking the stated dimension.
    pub fn with_dimension(d: usize, alphas: Vec<f64>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParams("d must be at least 1".into()));
        }
        if alphas.len() != d {
            return Err(Error::InvalidParams(format!(
                "expected {d} alpha values, got {}",
                alphas.len()
            )));
        }
        Self::new(alphas)
    }

    pub fn d(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    /// The exponent `d + 1` of the lacunary power series.
    pub fn order(&self) -> usize {
        self.alphas.len() + 1
    }

    /// Ratio `t_{n+1} / t_n` of consecutive series terms, without the power of `z`.
    fn term_ratio(&self, n: usize) -> f64 {
        let n = n as f64;
        let mut den = n + 1.0;
        for &a in &self.alphas {
            den *= a + 1.0 + n;
        }
        -1.0 / den
    }
}

/// Truncation control for the power series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub rel_tol: f64,
    pub min_terms: usize,
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-16,
            min_terms: 8,
            max_terms: 500,
        }
    }
}

impl SeriesConfig {
    pub fn new(rel_tol: f64, min_terms: usize, max_terms: usize) -> Result<Self> {
        let cfg = Self {
            rel_tol,
            min_terms,
            max_terms,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "rel_tol must lie in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if self.min_terms < 2 {
            return Err(Error::InvalidConfig("min_terms must be at least 2".into()));
        }
        if self.max_terms < self.min_terms {
            return Err(Error::InvalidConfig(
                "max_terms must not be below min_terms".into(),
            ));
        }
        Ok(())
    }
}

/// A function value together with its first two derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub terms_used: usize,
}

/// `m (m−1) ⋯ (m−k+1)`, zero when `k > m`.
pub(crate) fn falling(m: usize, k: usize) -> f64 {
    if k > m {
        return 0.0;
    }
    ((m - k + 1)..=m).fold(1.0, |acc, j| acc * j as f64)
}

/// Values of `𝒥, 𝒥′, …, 𝒥^{(order)}` at `z`, plus the number of series terms used.
pub(crate) fn derivatives(
    params: &HyperBesselParams,
    z: Complex64,
    order: usize,
    cfg: &SeriesConfig,
) -> Result<(Vec<Complex64>, usize)> {
    cfg.validate()?;
    let p = params.order();
    let mut sums = vec![Complex64::new(0.0, 0.0); order + 1];

    if z == Complex64::new(0.0, 0.0) {
        // Only the z^{n p} term with n p == k survives in the k-th derivative.
        let mut coeff = 1.0;
        let mut n = 0;
        while n * p <= order {
            sums[n * p] = Complex64::new(coeff * falling(n * p, n * p), 0.0);
            coeff *= params.term_ratio(n) / (p as f64).powi(p as i32);
            n += 1;
        }
        return Ok((sums, 1));
    }

    let scale = (p as f64).powi(p as i32);
    let w = z.powu(p as u32) / scale;
    let small_arg = z.norm() < 1.0;
    let inv_z = z.inv();

    // t = t_n = c_n z^{np}; coeff = c_n (only tracked for |z| < 1)
    let mut t = Complex64::new(1.0, 0.0);
    let mut coeff = 1.0;
    let mut quiet_run = 0;

    for n in 0..cfg.max_terms {
        let m = n * p;
        let mut all_small = true;
        for (k, sum) in sums.iter_mut().enumerate() {
            let term = if k > m {
                Complex64::new(0.0, 0.0)
            } else if small_arg {
                z.powu((m - k) as u32) * (coeff * falling(m, k))
            } else {
                t * inv_z.powu(k as u32) * falling(m, k)
            };
            *sum += term;
            let mag = term.norm();
            if mag != 0.0 && mag > cfg.rel_tol * sum.norm() {
                all_small = false;
            }
        }

        let used = n + 1;
        quiet_run = if all_small { quiet_run + 1 } else { 0 };
        if quiet_run >= 2 && used >= cfg.min_terms {
            return Ok((sums, used));
        }

        let ratio = params.term_ratio(n);
        t *= w * ratio;
        coeff *= ratio / scale;
    }

    Err(Error::Truncation {
        terms_used: cfg.max_terms,
    })
}

/// `𝒥(z)`, `𝒥′(z)` and `𝒥″(z)`.
pub fn eval_j(params: &HyperBesselParams, z: Complex64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    let (d, terms_used) = derivatives(params, z, 2, cfg)?;
    Ok(SeriesValue {
        value: d[0],
        d1: d[1],
        d2: d[2],
        terms_used,
    })
}

/// `f(z) = z𝒥(z)` with `f′ = 𝒥 + z𝒥′` and `f″ = 2𝒥′ + z𝒥″`.
pub fn eval_f(params: &HyperBesselParams, z: Complex64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    let j = eval_j(params, z, cfg)?;
    Ok(SeriesValue {
        value: z * j.value,
        d1: j.value + z * j.d1,
        d2: 2.0 * j.d1 + z * j.d2,
        terms_used: j.terms_used,
    })
}

fn guarded_ratio(num: Complex64, den: Complex64, r: f64) -> Result<Complex64> {
    if den.norm() < POLE_FLOOR * num.norm().max(1.0) {
        return Err(Error::NearPole { r });
    }
    Ok(num / den)
}

/// `z f′(z) / f(z) = 1 + z𝒥′(z)/𝒥(z)` at a complex argument.
pub fn starlike_quotient(
    params: &HyperBesselParams,
    z: Complex64,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    let j = eval_j(params, z, cfg)?;
    Ok(1.0 + guarded_ratio(z * j.d1, j.value, z.norm())?)
}

/// `z f″(z) / f′(z) = (z²𝒥″ + 2z𝒥′) / (𝒥 + z𝒥′)` at a complex argument.
pub fn convex_quotient(
    params: &HyperBesselParams,
    z: Complex64,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    let j = eval_j(params, z, cfg)?;
    let num = z * z * j.d2 + 2.0 * z * j.d1;
    let den = j.value + z * j.d1;
    guarded_ratio(num, den, z.norm())
}

fn check_radius(r: f64) -> Result<()> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Domain(format!("r must be a positive finite real, got {r}")));
    }
    Ok(())
}

/// `x(r) = r f′(r)/f(r)` on the positive real axis.
///
/// Strictly decreasing from 1 towards −∞ on `(0, j_1)`, where `j_1` is the
/// first positive zero of `𝒥`.
pub fn log_deriv_f(params: &HyperBesselParams, r: f64, cfg: &SeriesConfig) -> Result<f64> {
    check_radius(r)?;
    Ok(starlike_quotient(params, Complex64::new(r, 0.0), cfg)?.re)
}

/// `y(r) = r f″(r)/f′(r)` on the positive real axis.
///
/// Strictly decreasing from 0 towards −∞ on `(0, γ_1)`, where `γ_1` is the
/// first positive zero of `f′`.
pub fn log_deriv_f_prime(params: &HyperBesselParams, r: f64, cfg: &SeriesConfig) -> Result<f64> {
    check_radius(r)?;
    Ok(convex_quotient(params, Complex64::new(r, 0.0), cfg)?.re)
}
