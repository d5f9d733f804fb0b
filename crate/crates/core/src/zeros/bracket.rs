//! Bracketed root refinement.
//!
//! Brent–Dekker iteration: inverse quadratic or secant steps are taken only
//! when they stay inside the current bracket and shrink it fast enough,
//! otherwise the step falls back to bisection. The bracket `[b, c]` always
//! contains a sign change.

use crate::error::{Error, Result};

/// Iteration cap shared by every solver in the crate.
pub const MAX_ITERATIONS: usize = 200;

/// A refined root together with its final bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refined {
    pub root: f64,
    /// Value of the function at `root`.
    pub residual: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

/// Root of `g` in `[lo, hi]` to absolute accuracy `tol`.
///
/// `g(lo)` and `g(hi)` must have opposite signs.
pub fn find_zero_bracketed<F>(mut g: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    refine(|x| Ok(g(x)), lo, hi, tol).map(|r| r.root)
}

/// Fallible variant of [`find_zero_bracketed`] reporting the full refinement state.
pub fn refine<F>(mut g: F, lo: f64, hi: f64, tol: f64) -> Result<Refined>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (g(a)?, g(b)?);
    let done = |root: f64, residual: f64, other: f64, iterations: usize| Refined {
        root,
        residual,
        lo: root.min(other),
        hi: root.max(other),
        iterations,
    };
    if fa == 0.0 {
        return Ok(done(a, fa, a, 0));
    }
    if fb == 0.0 {
        return Ok(done(b, fb, b, 0));
    }
    if !(fa * fb < 0.0) {
        return Err(Error::Bracket { lo, hi });
    }

    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;

    for iter in 1..=MAX_ITERATIONS {
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(done(b, fb, c, iter));
        }

        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }

        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = g(b)?;
        if fb.is_nan() {
            return Err(Error::Domain(format!("function returned NaN at {b}")));
        }
    }

    Err(Error::Convergence {
        iterations: MAX_ITERATIONS,
    })
}
