//! Independent corroboration of series values and radii.
//!
//! Three routes that do not go through the radius equations:
//!
//! * the truncated Weierstrass product `𝒥(z) = ∏ (1 − z^{d+1}/j_n^{d+1})`,
//! * the partial-fraction form
//!   `r𝒥′(r)/𝒥(r) = −(d+1) Σ r^{d+1}/(j_n^{d+1} − r^{d+1})`,
//! * sampling of the defining modulus inequality on a circle `|z| = ρ`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::radii::{ceiling_for, JanowskiPair, RadiusKind};
use crate::series::{convex_quotient, starlike_quotient, HyperBesselParams, SeriesConfig, POLE_FLOOR};
use crate::zeros::{ZeroKind, ZeroTable};

/// Truncated partial-fraction sum and an estimate of the omitted tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MittagLeffler {
    pub value: f64,
    pub tail_bound: f64,
}

fn check_table(params: &HyperBesselParams, table: &ZeroTable) -> Result<()> {
    if table.kind != ZeroKind::FunctionZeros {
        return Err(Error::Domain("expected a table of zeros of the function".into()));
    }
    if table.is_empty() {
        return Err(Error::Domain("zero table is empty".into()));
    }
    if &table.params != params {
        return Err(Error::Domain("zero table belongs to different parameters".into()));
    }
    Ok(())
}

/// `r𝒥′(r)/𝒥(r)` from the first `K = table.len()` zeros.
///
/// The tail beyond `j_K` is bounded by comparison with an integral, assuming
/// the zeros past `j_K` are spaced at least half as far apart as the last
/// two tabulated ones:
///
/// ```text
/// tail ≤ (d+1) · 2 r^p / ((p−1) δ j_K^{p−1} (1 − (r/j_K)^p)),   p = d+1, δ = j_K − j_{K−1}.
/// ```
pub fn mittag_leffler_log_derivative(
    params: &HyperBesselParams,
    r: f64,
    table: &ZeroTable,
) -> Result<MittagLeffler> {
    check_table(params, table)?;
    if !(r > 0.0 && r < table.first()) {
        return Err(Error::Domain(format!(
            "r = {r} must lie in (0, {})",
            table.first()
        )));
    }
    let p = params.order() as i32;
    let weight = params.order() as f64;
    let sum: f64 = table
        .zeros
        .iter()
        .map(|&j| 1.0 / ((j / r).powi(p) - 1.0))
        .sum();

    let k = table.len();
    let last = table.zeros[k - 1];
    let spacing = if k >= 2 { last - table.zeros[k - 2] } else { last };
    let q = (r / last).powi(p);
    let tail = 2.0 * r.powi(p) / ((p - 1) as f64 * spacing * last.powi(p - 1) * (1.0 - q));

    Ok(MittagLeffler {
        value: -weight * sum,
        tail_bound: weight * tail,
    })
}

/// Truncated product `∏_{n ≤ K} (1 − (z/j_n)^{d+1})`.
pub fn product_eval(params: &HyperBesselParams, z: Complex64, table: &ZeroTable) -> Result<Complex64> {
    check_table(params, table)?;
    let p = params.order() as u32;
    Ok(table
        .zeros
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, &j| acc * (1.0 - (z / j).powu(p))))
}

/// Truncated product for `f(z) = z𝒥(z)`.
pub fn product_eval_f(params: &HyperBesselParams, z: Complex64, table: &ZeroTable) -> Result<Complex64> {
    Ok(z * product_eval(params, z, table)?)
}

/// Sampled supremum of a defining functional on `|z| = ρ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub kind: RadiusKind,
    pub rho: f64,
    pub samples: usize,
    /// `+∞` (serialized as `null`) when a denominator vanished at some sample.
    #[serde(serialize_with = "ser_extended", deserialize_with = "de_extended")]
    pub sup_modulus: f64,
    pub argmax_angle: f64,
    pub satisfied: bool,
}

fn ser_extended<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else {
        s.serialize_none()
    }
}

fn de_extended<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
}

/// Value of the functional defining `kind` at `z`; `None` on a vanishing denominator.
pub fn defining_functional(
    params: &HyperBesselParams,
    kind: RadiusKind,
    jan: Option<&JanowskiPair>,
    z: Complex64,
    cfg: &SeriesConfig,
) -> Result<Option<f64>> {
    let quotient = |q: Result<Complex64>| match q {
        Ok(v) => Ok(Some(v)),
        Err(Error::NearPole { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    let janowski = |num: Complex64, den: Complex64| {
        if den.norm() < POLE_FLOOR * num.norm().max(1.0) {
            None
        } else {
            Some((num / den).norm())
        }
    };
    let pair = || {
        jan.ok_or_else(|| Error::Domain(format!("{kind} requires a Janowski pair")))
    };
    Ok(match kind {
        RadiusKind::LemniscateStarlike => {
            quotient(starlike_quotient(params, z, cfg))?.map(|w| (w * w - 1.0).norm())
        }
        RadiusKind::LemniscateConvex => quotient(convex_quotient(params, z, cfg))?.map(|q| {
            let v = 1.0 + q;
            (v * v - 1.0).norm()
        }),
        RadiusKind::JanowskiStarlike => {
            let jp = pair()?;
            quotient(starlike_quotient(params, z, cfg))?
                .and_then(|w| janowski(w - 1.0, jp.a() - jp.b() * w))
        }
        RadiusKind::JanowskiConvex => {
            let jp = pair()?;
            quotient(convex_quotient(params, z, cfg))?
                .and_then(|q| janowski(q, jp.a() - jp.b() * (1.0 + q)))
        }
    })
}

/// Samples the defining functional of `kind` at `samples` equispaced points of `|z| = ρ`.
pub fn boundary_sup(
    params: &HyperBesselParams,
    kind: RadiusKind,
    jan: Option<&JanowskiPair>,
    rho: f64,
    samples: usize,
    cfg: &SeriesConfig,
) -> Result<BoundaryReport> {
    let ceiling = ceiling_for(params, kind.ceiling_kind(), cfg)?;
    boundary_sup_below(params, kind, jan, rho, samples, ceiling, cfg)
}

/// [`boundary_sup`] with a known ceiling (`j_1` or `γ_1`, matching `kind`).
pub fn boundary_sup_below(
    params: &HyperBesselParams,
    kind: RadiusKind,
    jan: Option<&JanowskiPair>,
    rho: f64,
    samples: usize,
    ceiling: f64,
    cfg: &SeriesConfig,
) -> Result<BoundaryReport> {
    if kind.is_janowski() != jan.is_some() {
        return Err(Error::Domain(format!(
            "a Janowski pair must be given exactly for Janowski kinds ({kind})"
        )));
    }
    if samples == 0 {
        return Err(Error::Domain("samples must be at least 1".into()));
    }
    if !(rho > 0.0) {
        return Err(Error::Domain(format!("rho must be positive, got {rho}")));
    }
    if rho >= ceiling {
        return Err(Error::Domain(format!("rho = {rho} is not below the ceiling {ceiling}")));
    }

    let mut sup = f64::NEG_INFINITY;
    let mut argmax = 0.0;
    for k in 0..samples {
        let theta = TAU * k as f64 / samples as f64;
        let value = defining_functional(params, kind, jan, Complex64::from_polar(rho, theta), cfg)?
            .unwrap_or(f64::INFINITY);
        if value > sup {
            sup = value;
            argmax = theta;
        }
    }
    Ok(BoundaryReport {
        kind,
        rho,
        samples,
        sup_modulus: sup,
        argmax_angle: argmax,
        satisfied: sup < 1.0,
    })
}
