//! Radius equations for the four subordination classes.
//!
//! With `x(r) = r f′/f` and `y(r) = r f″/f′`, each radius is the unique root
//! of a strictly decreasing scalar equation on `(0, ceiling)`:
//!
//! | kind                | equation              | ceiling |
//! |---------------------|-----------------------|---------|
//! | lemniscate starlike | `x(r) = 2 − √2`       | `j_1`   |
//! | lemniscate convex   | `y(r) = 1 − √2`       | `γ_1`   |
//! | Janowski starlike   | `x(r) = 1 − τ`        | `j_1`   |
//! | Janowski convex     | `y(r) = −τ`           | `γ_1`   |
//!
//! where `τ = (A − B)/(1 + |B|)`. The lemniscate equations are the admissible
//! branches of `x² − 4x + 2 = 0` and `y² − 2y − 1 = 0`: `x < 1` and `y < 0`
//! on their intervals, which rules out `2 + √2` and `1 + √2`.

use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{log_deriv_f, log_deriv_f_prime, HyperBesselParams, SeriesConfig};
use crate::zeros::{first_zeros_f_prime, first_zeros_j, refine};

const LOWER_FRACTION: f64 = 1e-9;
const UPPER_FRACTION: f64 = 0.999;
const MAX_PUSHES: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadiusKind {
    LemniscateStarlike,
    LemniscateConvex,
    JanowskiStarlike,
    JanowskiConvex,
}

impl RadiusKind {
    pub const ALL: [RadiusKind; 4] = [
        RadiusKind::LemniscateStarlike,
        RadiusKind::LemniscateConvex,
        RadiusKind::JanowskiStarlike,
        RadiusKind::JanowskiConvex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RadiusKind::LemniscateStarlike => "lemniscate-starlike",
            RadiusKind::LemniscateConvex => "lemniscate-convex",
            RadiusKind::JanowskiStarlike => "janowski-starlike",
            RadiusKind::JanowskiConvex => "janowski-convex",
        }
    }

    pub fn is_janowski(self) -> bool {
        matches!(self, RadiusKind::JanowskiStarlike | RadiusKind::JanowskiConvex)
    }

    pub fn is_starlike(self) -> bool {
        matches!(self, RadiusKind::LemniscateStarlike | RadiusKind::JanowskiStarlike)
    }

    pub fn ceiling_kind(self) -> CeilingKind {
        if self.is_starlike() {
            CeilingKind::FirstZeroJ
        } else {
            CeilingKind::FirstZeroFPrime
        }
    }
}

impl fmt::Display for RadiusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RadiusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RadiusKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown radius kind '{s}'")))
    }
}

/// Which zero bounds the search interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CeilingKind {
    #[serde(rename = "first-zero-J")]
    FirstZeroJ,
    #[serde(rename = "first-zero-f-prime")]
    FirstZeroFPrime,
}

impl CeilingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CeilingKind::FirstZeroJ => "first-zero-J",
            CeilingKind::FirstZeroFPrime => "first-zero-f-prime",
        }
    }
}

/// Janowski constants with `−1 ≤ B < A ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct JanowskiPair {
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: f64,
}

#[derive(Deserialize)]
struct RawPair {
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: f64,
}

impl TryFrom<RawPair> for JanowskiPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        JanowskiPair::new(raw.a, raw.b)
    }
}

impl JanowskiPair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Domain("A and B must be finite".into()));
        }
        if !(-1.0..=1.0).contains(&a) || !(-1.0..=1.0).contains(&b) {
            return Err(Error::Domain(format!("A and B must lie in [-1, 1], got A = {a}, B = {b}")));
        }
        if b >= a {
            return Err(Error::Domain(format!("require B < A, got A = {a}, B = {b}")));
        }
        Ok(Self { a, b })
    }

    /// The pair `(√2 − 1, 0)`, whose Janowski radii coincide with the lemniscate ones.
    pub fn lemniscate() -> Self {
        Self { a: SQRT_2 - 1.0, b: 0.0 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `τ = (A − B)/(1 + |B|)`, in `(0, 1]`.
    pub fn tau(&self) -> f64 {
        (self.a - self.b) / (1.0 + self.b.abs())
    }
}

/// A solved radius and how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub kind: RadiusKind,
    pub radius: f64,
    /// Search interval handed to the root finder.
    pub bracket: (f64, f64),
    /// Value of the monotone equation at `radius`.
    pub residual: f64,
    pub iterations: usize,
    pub ceiling: f64,
    pub ceiling_kind: CeilingKind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusOptions {
    pub series: SeriesConfig,
    /// Root tolerance, scaled by `1 + radius`.
    pub tol: f64,
    /// Precomputed `j_1` or `γ_1`, matching the kind being solved.
    pub ceiling: Option<f64>,
}

impl Default for RadiusOptions {
    fn default() -> Self {
        Self {
            series: SeriesConfig::default(),
            tol: 1e-12,
            ceiling: None,
        }
    }
}

impl RadiusOptions {
    pub fn with_series(series: SeriesConfig) -> Self {
        Self {
            series,
            ..Self::default()
        }
    }
}

/// `j_1` for starlike kinds, `γ_1` for convex kinds.
pub fn ceiling_for(params: &HyperBesselParams, kind: CeilingKind, cfg: &SeriesConfig) -> Result<f64> {
    let table = match kind {
        CeilingKind::FirstZeroJ => first_zeros_j(params, 1, cfg)?,
        CeilingKind::FirstZeroFPrime => first_zeros_f_prime(params, 1, cfg)?,
    };
    Ok(table.first())
}

/// Solves the radius equation of `kind`. `jan` is required exactly for the
/// Janowski kinds.
pub fn solve_radius(
    params: &HyperBesselParams,
    kind: RadiusKind,
    jan: Option<&JanowskiPair>,
    opts: &RadiusOptions,
) -> Result<RadiusResult> {
    if !(opts.tol > 0.0 && opts.tol.is_finite()) {
        return Err(Error::Domain(format!("tolerance must be positive, got {}", opts.tol)));
    }
    let tau = match (kind.is_janowski(), jan) {
        (true, Some(pair)) => pair.tau(),
        (true, None) => {
            return Err(Error::Domain(format!("{kind} requires a Janowski pair")));
        }
        (false, None) => SQRT_2 - 1.0,
        (false, Some(_)) => {
            return Err(Error::Domain(format!("{kind} takes no Janowski pair")));
        }
    };

    let ceiling_kind = kind.ceiling_kind();
    let ceiling = match opts.ceiling {
        Some(c) => c,
        None => ceiling_for(params, ceiling_kind, &opts.series)?,
    };
    let cfg = opts.series;
    let equation = |r: f64| -> Result<f64> {
        if kind.is_starlike() {
            Ok(log_deriv_f(params, r, &cfg)? - (1.0 - tau))
        } else {
            Ok(log_deriv_f_prime(params, r, &cfg)? + tau)
        }
    };

    let lo = LOWER_FRACTION * ceiling;
    if !(equation(lo)? > 0.0) {
        return Err(Error::Bracket { lo, hi: ceiling });
    }
    let mut hi = UPPER_FRACTION * ceiling;
    let mut pushes = 0;
    while equation(hi)? >= 0.0 {
        if pushes == MAX_PUSHES {
            return Err(Error::Bracket { lo, hi });
        }
        hi = ceiling - (ceiling - hi) / 4.0;
        pushes += 1;
    }

    // tighter than the root tolerance so that the residual also meets it where the slope is steep
    let refined = refine(equation, lo, hi, 1e-3 * opts.tol * (1.0 + hi))?;
    Ok(RadiusResult {
        kind,
        radius: refined.root,
        bracket: (lo, hi),
        residual: refined.residual,
        iterations: refined.iterations,
        ceiling,
        ceiling_kind,
    })
}

/// Radius of lemniscate starlikeness.
pub fn radius_lemniscate_starlike(params: &HyperBesselParams, cfg: &SeriesConfig) -> Result<RadiusResult> {
    solve_radius(params, RadiusKind::LemniscateStarlike, None, &RadiusOptions::with_series(*cfg))
}

/// Radius of lemniscate convexity.
pub fn radius_lemniscate_convex(params: &HyperBesselParams, cfg: &SeriesConfig) -> Result<RadiusResult> {
    solve_radius(params, RadiusKind::LemniscateConvex, None, &RadiusOptions::with_series(*cfg))
}

/// Radius of Janowski starlikeness for the pair `(A, B)`.
pub fn radius_janowski_starlike(
    params: &HyperBesselParams,
    jan: &JanowskiPair,
    cfg: &SeriesConfig,
) -> Result<RadiusResult> {
    solve_radius(params, RadiusKind::JanowskiStarlike, Some(jan), &RadiusOptions::with_series(*cfg))
}

/// Radius of Janowski convexity for the pair `(A, B)`.
pub fn radius_janowski_convex(
    params: &HyperBesselParams,
    jan: &JanowskiPair,
    cfg: &SeriesConfig,
) -> Result<RadiusResult> {
    solve_radius(params, RadiusKind::JanowskiConvex, Some(jan), &RadiusOptions::with_series(*cfg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn params(a: &[f64]) -> HyperBesselParams {
        HyperBesselParams::new(a.to_vec()).unwrap()
    }

    #[test]
    fn janowski_pair_validation() {
        assert!(JanowskiPair::new(0.5, 0.5).is_err());
        assert!(JanowskiPair::new(-0.5, 0.5).is_err());
        assert!(JanowskiPair::new(1.5, 0.0).is_err());
        assert!(JanowskiPair::new(0.5, -1.5).is_err());
        let msg = JanowskiPair::new(0.3, 0.6).unwrap_err().to_string();
        assert!(msg.contains("require B < A"), "{msg}");
        assert_eq!(JanowskiPair::new(1.0, -1.0).unwrap().tau(), 1.0);
        assert!((JanowskiPair::lemniscate().tau() - (SQRT_2 - 1.0)).abs() < 1e-16);
    }

    #[test]
    fn janowski_pair_serde_validates() {
        let p: JanowskiPair = serde_json::from_str(r#"{"A":0.5,"B":-0.5}"#).unwrap();
        assert_eq!((p.a(), p.b()), (0.5, -0.5));
        assert!(serde_json::from_str::<JanowskiPair>(r#"{"A":0.5,"B":0.5}"#).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in RadiusKind::ALL {
            assert_eq!(k.as_str().parse::<RadiusKind>().unwrap(), k);
            assert_eq!(serde_json::to_string(&k).unwrap(), format!("\"{}\"", k.as_str()));
        }
        assert!("parabolic".parse::<RadiusKind>().is_err());
        assert_eq!(serde_json::to_string(&CeilingKind::FirstZeroJ).unwrap(), "\"first-zero-J\"");
    }

    #[test]
    fn janowski_arguments_checked() {
        let p = params(&[0.5]);
        let opts = RadiusOptions::default();
        assert!(solve_radius(&p, RadiusKind::JanowskiStarlike, None, &opts).is_err());
        let pair = JanowskiPair::new(0.5, 0.0).unwrap();
        assert!(solve_radius(&p, RadiusKind::LemniscateConvex, Some(&pair), &opts).is_err());
    }

    #[test]
    fn sine_radii() {
        // f = sin z; reference roots from mpmath bisection at 30 digits
        let p = params(&[0.5]);
        let cfg = SeriesConfig::default();
        let ls = radius_lemniscate_starlike(&p, &cfg).unwrap();
        assert!((ls.radius - 1.069_838_784_248_320_7).abs() < 1e-11);
        assert!((ls.ceiling - std::f64::consts::PI).abs() < 1e-11);
        assert_eq!(ls.ceiling_kind, CeilingKind::FirstZeroJ);
        assert!(ls.residual.abs() <= 1e-12);
        let lc = radius_lemniscate_convex(&p, &cfg).unwrap();
        assert!((lc.radius - 0.602_376_897_476_263_2).abs() < 1e-11);
        let half = JanowskiPair::new(0.5, 0.0).unwrap();
        let js = radius_janowski_starlike(&p, &half, &cfg).unwrap();
        assert!((js.radius - 1.165_561_185_207_211_3).abs() < 1e-11);
        let full = JanowskiPair::new(1.0, -1.0).unwrap();
        let js = radius_janowski_starlike(&p, &full, &cfg).unwrap();
        assert!((js.radius - FRAC_PI_2).abs() < 1e-10);
        let jc = radius_janowski_convex(&p, &full, &cfg).unwrap();
        assert!((jc.radius - 0.860_333_589_019_379_8).abs() < 1e-11);
    }

    #[test]
    fn bessel_one_has_unit_janowski_convex_radius() {
        // ν = 1: r f″/f′ = −1 reduces to (r² − 1) J_1(r) = 0
        let p = params(&[1.0]);
        let full = JanowskiPair::new(1.0, -1.0).unwrap();
        let jc = radius_janowski_convex(&p, &full, &SeriesConfig::default()).unwrap();
        assert!((jc.radius - 1.0).abs() < 1e-11);
    }

    #[test]
    fn cached_ceiling_is_used() {
        let p = params(&[0.0]);
        let opts = RadiusOptions {
            ceiling: Some(2.404_825_557_695_773),
            ..Default::default()
        };
        let r = solve_radius(&p, RadiusKind::LemniscateStarlike, None, &opts).unwrap();
        assert_eq!(r.ceiling, 2.404_825_557_695_773);
        assert!((r.radius - 0.865_097_037_091_556_8).abs() < 1e-11);
    }

    #[test]
    fn result_within_bracket_and_ceiling() {
        let cfg = SeriesConfig::default();
        let p = params(&[0.5, -0.3]);
        for kind in RadiusKind::ALL {
            let jan = kind.is_janowski().then(|| JanowskiPair::new(0.2, -0.7).unwrap());
            let r = solve_radius(&p, kind, jan.as_ref(), &RadiusOptions::with_series(cfg)).unwrap();
            assert!(0.0 < r.radius && r.radius < r.ceiling, "{kind}");
            assert!(r.bracket.0 <= r.radius && r.radius <= r.bracket.1, "{kind}");
            assert!(r.residual.abs() <= 1e-12 * (1.0 + r.radius), "{kind}");
        }
    }
}
