//! Radii of lemniscate and Janowski starlikeness and convexity for the
//! normalized hyper-Bessel function `f(z) = z𝒥_{α_d}(z)`.
//!
//! * [`series`] evaluates `𝒥`, `f` and their logarithmic derivatives.
//! * [`zeros`] tabulates the positive zeros of `𝒥` and `f′`.
//! * [`radii`] solves the four radius equations on their bracketing intervals.
//! * [`verify`] cross-checks against the product and partial-fraction forms
//!   and samples the defining inequalities on circles.
//! * [`cli`] is the command-line front end.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod radii;
pub mod series;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use radii::{
    radius_janowski_convex, radius_janowski_starlike, radius_lemniscate_convex,
    radius_lemniscate_starlike, solve_radius, CeilingKind, JanowskiPair, RadiusKind,
    RadiusOptions, RadiusResult,
};
pub use series::{
    convex_quotient, eval_f, eval_j, log_deriv_f, log_deriv_f_prime, starlike_quotient,
    HyperBesselParams, SeriesConfig, SeriesValue,
};
pub use verify::{boundary_sup, mittag_leffler_log_derivative, product_eval, BoundaryReport};
pub use zeros::{find_zero_bracketed, first_zeros_f_prime, first_zeros_j, ZeroKind, ZeroTable};
