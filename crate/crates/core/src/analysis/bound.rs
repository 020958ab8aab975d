//! The worst-case bound function `f(x, p) = (x − p) / (x − p^x)` and its
//! minimization, where `x = m/t` and `p` is the largest machine cumulative
//! probability of the LZF schedule.

use serde::{Deserialize, Serialize};

use super::search::{bisect_root, golden_section};
use crate::error::{Error, Result};

/// A point of the bound function, usually a minimizer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundPoint {
    pub x: f64,
    pub p: f64,
    pub value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
}

const P_TOL: f64 = 1e-12;
const X_TOL: f64 = 1e-10;
const GLOBAL_X_MAX: f64 = 10.0;
const GRID_X_STEP: f64 = 1e-2;
const GRID_P_STEP: f64 = 1e-3;

fn pow(p: f64, x: f64) -> f64 {
    (x * p.ln()).exp()
}

fn f_unchecked(x: f64, p: f64) -> f64 {
    (x - p) / (x - pow(p, x))
}

/// Numerator of `∂f/∂p`; the denominator `(x − p^x)²` is positive.
fn df_dp_numerator(x: f64, p: f64) -> f64 {
    -(x - pow(p, x)) + (x - p) * x * pow(p, x - 1.0)
}

pub fn f_ratio(x: f64, p: f64) -> Result<f64> {
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::Domain(format!("x = {x} must be at least 1")));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("p = {p} must lie in (0, 1)")));
    }
    Ok(f_unchecked(x, p))
}

/// Minimizes `f(x, ·)` over `p ∈ (0, 1)`: golden-section search, then the
/// stationary point is pinned by bisection on the sign of `∂f/∂p`.
/// Returns `(p, f(x, p))`.
pub fn min_over_p(x: f64) -> (f64, f64) {
    if x <= 1.0 {
        // f(1, p) = 1 identically
        return (0.5, 1.0);
    }
    let lo = P_TOL;
    let hi = 1.0 - P_TOL;
    let (p_golden, v_golden) = golden_section(|p| f_unchecked(x, p), lo, hi, P_TOL);

    let slope = |p| df_dp_numerator(x, p);
    let local = (p_golden - 1e-6).max(lo)..(p_golden + 1e-6).min(hi);
    let root = bisect_root(slope, local.start, local.end).or_else(|| bisect_root(slope, lo, hi));
    match root {
        Some(p) if f_unchecked(x, p) <= v_golden + 1e-14 => (p, f_unchecked(x, p)),
        _ => (p_golden, v_golden),
    }
}

/// Global minimum of `f` over `x ∈ [1, 10]`, `p ∈ (0, 1)`.
///
/// A coarse grid locates the basin; golden-section search over `x` of the
/// profile `min_p f(x, p)` then refines within one grid cell.
pub fn global_min_f() -> BoundPoint {
    let nx = ((GLOBAL_X_MAX - 1.0) / GRID_X_STEP).round() as usize;
    let np = (1.0 / GRID_P_STEP).round() as usize;
    let mut best = (f64::INFINITY, 1.0);
    for i in 0..=nx {
        let x = 1.0 + i as f64 * GRID_X_STEP;
        for j in 1..np {
            let v = f_unchecked(x, j as f64 * GRID_P_STEP);
            if v < best.0 {
                best = (v, x);
            }
        }
    }
    let x_lo = (best.1 - GRID_X_STEP).max(1.0);
    let x_hi = (best.1 + GRID_X_STEP).min(GLOBAL_X_MAX);
    let (x, _) = golden_section(|x| min_over_p(x).1, x_lo, x_hi, X_TOL);
    let (p, value) = min_over_p(x);
    BoundPoint { x, p, value, t: None }
}

/// `min_{t ∈ 1..=m} min_p f(m/t, p)`, reporting the minimizing `t`
/// (smallest on ties).
pub fn min_f_for_m(m: usize) -> Result<BoundPoint> {
    if m < 2 {
        return Err(Error::Domain(format!("m = {m}; the bound needs m >= 2")));
    }
    let mut best: Option<BoundPoint> = None;
    for t in 1..=m {
        let x = m as f64 / t as f64;
        let (p, value) = min_over_p(x);
        if best.is_none_or(|b| value < b.value) {
            best = Some(BoundPoint { x, p, value, t: Some(t) });
        }
    }
    Ok(best.expect("m >= 2 gives at least one t"))
}
