//! Real-axis continuation of `𝒥` beyond the range where the alternating
//! power series is usable in double precision.
//!
//! `𝒥` solves the order-`(d+1)` equation
//!
//! ```text
//! θ ∏_i (θ + (d+1)α_i) F + z^{d+1} F = 0,     θ = z d/dz,
//! ```
//!
//! which is rewritten as `Σ_j a_j z^j F^{(j)} + z^{d+1} F = 0`. Starting from
//! series values at a moderate abscissa, the solution is stepped along the
//! positive axis with local Taylor expansions whose coefficients follow from
//! the equation. Each node is renormalized and the scale is kept as a
//! logarithm, since 𝒥 grows exponentially on the real axis once `d ≥ 2`.

use num_complex::Complex64;

use crate::error::Result;
use crate::series::{derivatives, falling, HyperBesselParams, SeriesConfig};

/// Step between Taylor nodes.
const STEP: f64 = 0.5;
const MAX_TAYLOR_TERMS: usize = 120;

#[derive(Debug, Clone)]
struct Node {
    x: f64,
    /// Taylor coefficients in the scaled variable `s = (x − node.x)/STEP`.
    coeffs: Vec<f64>,
    /// `ln` of the factor dividing 𝒥 at this node.
    log_scale: f64,
}

#[derive(Debug, Clone)]
pub(crate) struct Continuation {
    order: usize,
    /// `a_j` for `j = 0..=order`.
    ode: Vec<f64>,
    binom: Vec<Vec<f64>>,
    nodes: Vec<Node>,
}

fn stirling2(n: usize) -> Vec<Vec<f64>> {
    let mut s = vec![vec![0.0; n + 1]; n + 1];
    s[0][0] = 1.0;
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = k as f64 * s[i - 1][k] + s[i - 1][k - 1];
        }
    }
    s
}

fn binomials(n: usize) -> Vec<Vec<f64>> {
    let mut b = vec![vec![0.0; n + 1]; n + 1];
    for i in 0..=n {
        b[i][0] = 1.0;
        for k in 1..=i {
            b[i][k] = b[i - 1][k - 1] + if k < i { b[i - 1][k] } else { 0.0 };
        }
    }
    b
}

/// Coefficients `a_j` of `θ ∏(θ + (d+1)α_i) = Σ_j a_j z^j D^j`.
fn ode_coefficients(params: &HyperBesselParams) -> Vec<f64> {
    let p = params.order();
    // polynomial in θ, lowest degree first
    let mut poly = vec![0.0, 1.0];
    for &a in params.alphas() {
        let shift = p as f64 * a;
        let mut next = vec![0.0; poly.len() + 1];
        for (k, &c) in poly.iter().enumerate() {
            next[k] += c * shift;
            next[k + 1] += c;
        }
        poly = next;
    }
    let s = stirling2(p);
    (0..=p)
        .map(|j| (j..=p).map(|k| poly[k] * s[k][j]).sum())
        .collect()
}

impl Continuation {
    /// Continuation seeded with series values at `x_start`.
    pub(crate) fn new(params: &HyperBesselParams, x_start: f64, cfg: &SeriesConfig) -> Result<Self> {
        let order = params.order();
        let (raw, _) = derivatives(params, Complex64::new(x_start, 0.0), order - 1, cfg)?;
        let mut cont = Continuation {
            order,
            ode: ode_coefficients(params),
            binom: binomials(order),
            nodes: Vec::new(),
        };
        let mut seed: Vec<f64> = raw
            .iter()
            .enumerate()
            .map(|(j, v)| v.re * STEP.powi(j as i32) / falling(j, j))
            .collect();
        let scale = normalize(&mut seed);
        let node = cont.expand(x_start, seed, scale.ln());
        cont.nodes.push(node);
        Ok(cont)
    }

    pub(crate) fn start(&self) -> f64 {
        self.nodes[0].x
    }

    /// Taylor coefficients at `x` from the leading `order` scaled coefficients.
    fn expand(&self, x: f64, mut coeffs: Vec<f64>, log_scale: f64) -> Node {
        let p = self.order;
        let big_x = x / STEP;
        let hp = STEP.powi(p as i32);
        let peak = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        let mut quiet = 0;
        let mut m = 0;
        while coeffs.len() < MAX_TAYLOR_TERMS {
            let mut rest = 0.0;
            for j in 1..=p {
                let aj = self.ode[j];
                if aj == 0.0 {
                    continue;
                }
                for l in 0..=j.min(m) {
                    if j == p && l == 0 {
                        continue;
                    }
                    let idx = m - l + j;
                    rest += aj
                        * self.binom[j][l]
                        * big_x.powi((j - l) as i32)
                        * coeffs[idx]
                        * falling(idx, j);
                }
            }
            for l in 0..=p.min(m) {
                rest += hp * self.binom[p][l] * big_x.powi((p - l) as i32) * coeffs[m - l];
            }
            let next = -rest / (big_x.powi(p as i32) * falling(m + p, p));
            coeffs.push(next);
            m += 1;
            quiet = if next.abs() <= 1e-18 * peak { quiet + 1 } else { 0 };
            if quiet > p && coeffs.len() > 2 * p + 8 {
                break;
            }
        }
        Node {
            x,
            coeffs,
            log_scale,
        }
    }

    /// Extends the node chain until it covers `x`.
    pub(crate) fn ensure(&mut self, x: f64) {
        while self.nodes.last().is_some_and(|n| n.x + STEP < x) {
            let last = self.nodes.last().unwrap();
            let mut state: Vec<f64> = (0..self.order)
                .map(|k| {
                    let dk = last
                        .coeffs
                        .iter()
                        .enumerate()
                        .skip(k)
                        .map(|(n, c)| c * falling(n, k))
                        .sum::<f64>();
                    // back to coefficient form: D_s^k G / k!
                    dk / falling(k, k)
                })
                .collect();
            let scale = normalize(&mut state);
            let log_scale = last.log_scale + scale.ln();
            let x_next = last.x + STEP;
            let node = self.expand(x_next, state, log_scale);
            self.nodes.push(node);
        }
    }

    fn node_index(&self, x: f64) -> usize {
        let i = ((x - self.start()) / STEP).floor();
        (i.max(0.0) as usize).min(self.nodes.len() - 1)
    }

    /// Log scale of the node containing `x`; `x` must already be covered.
    pub(crate) fn log_scale_at(&self, x: f64) -> f64 {
        self.nodes[self.node_index(x)].log_scale
    }

    /// `(𝒥(x), 𝒥′(x))` divided by `exp(ref_log_scale)`. `x` must be covered.
    pub(crate) fn eval(&self, x: f64, ref_log_scale: f64) -> (f64, f64) {
        let node = &self.nodes[self.node_index(x)];
        let s = (x - node.x) / STEP;
        let (mut v, mut dv) = (0.0, 0.0);
        for (n, &c) in node.coeffs.iter().enumerate().rev() {
            v = v * s + c;
            if n >= 1 {
                dv = dv * s + c * n as f64;
            }
        }
        let factor = (node.log_scale - ref_log_scale).exp();
        (v * factor, dv / STEP * factor)
    }
}

/// Scales the state to unit max-norm and returns the divisor.
fn normalize(state: &mut [f64]) -> f64 {
    let peak = state.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let peak = if peak > 0.0 { peak } else { 1.0 };
    state.iter_mut().for_each(|c| *c /= peak);
    peak
}
