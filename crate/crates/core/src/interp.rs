//! Error bound for polynomial interpolation in the zeros of a Jacobi
//! polynomial, for functions analytic inside a Bernstein ellipse:
//!
//! `|f - p_n| <= M L / (2 pi d) * max_{[-1,1]} |P_n| / min_{ellipse} |P_n|`,
//!
//! with `M` the maximum of `|f|` on the ellipse, `L` its circumference and
//! `d` its distance to `[-1, 1]`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ellipse::BernsteinEllipse;
use crate::error::{domain, Result};
use crate::extrema::{min_cheb_t, min_gegenbauer, sample_extremum, ExtremumKind, SamplerConfig};
use crate::orthopoly::{gegenbauer_prefactor, jacobi_eval, jacobi_interval_max, GegenbauerParam, JacobiParams};
use crate::quadrature::periodic_trapezoid;
use crate::scalar::log_pochhammer;
use crate::search::golden_min;

/// Below this radius the bound is reported with a near-degenerate warning.
pub const NEAR_DEGENERATE_RHO: f64 = 1.01;

/// Inputs of the interpolation error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InterpBoundRequest {
    pub params: JacobiParams,
    pub n: u32,
    pub rho: f64,
    /// Maximum of `|f|` on the ellipse.
    pub m: f64,
}

/// The bound and the four factors it is assembled from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterpBound {
    pub request: InterpBoundRequest,
    /// Circumference `L` of the ellipse.
    pub circumference: f64,
    /// Distance `d` from the ellipse to `[-1, 1]`.
    pub distance: f64,
    /// `max |P_n|` over `[-1, 1]`.
    pub numerator: f64,
    /// `min |P_n|` over the ellipse.
    pub denominator: f64,
    /// How the denominator was obtained.
    pub denominator_tag: String,
    pub bound: f64,
    pub warnings: Vec<String>,
}

/// Circumference of the ellipse, `int_0^{2 pi} sqrt(a^2 sin^2 t + b^2 cos^2 t) dt`,
/// by the periodic trapezoid rule to relative 1e-13.
pub fn ellipse_circumference(e: BernsteinEllipse) -> Result<f64> {
    let (a, b) = (e.semi_major(), e.semi_minor());
    let q = periodic_trapezoid(|t| (a * t.sin()).hypot(b * t.cos()), TAU, 1e-13)?;
    Ok(q.value)
}

/// Distance from a point to the segment `[-1, 1]`.
fn distance_to_interval(z: Complex64) -> f64 {
    (z - Complex64::new(z.re.clamp(-1.0, 1.0), 0.0)).norm()
}

/// Distance from the ellipse (the curve) to `[-1, 1]`, by sampling 4096
/// angles and golden-section refinement of the best one.
pub fn ellipse_interval_distance(e: BernsteinEllipse) -> f64 {
    let m = 4096;
    let h = TAU / m as f64;
    let at = |t: f64| distance_to_interval(e.point(t).z());
    let (j, _) = (0..m)
        .map(|j| (j, at(h * j as f64)))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("nonempty grid");
    let c = h * j as f64;
    golden_min(at, c - h, c + h, 1e-13).1
}

/// Minimum of `|P_n|` on the ellipse: closed forms for the Chebyshev and
/// Gegenbauer families where they apply, sampling otherwise.
fn ellipse_min(p: JacobiParams, n: u32, e: BernsteinEllipse) -> Result<(f64, String)> {
    let cfg = SamplerConfig::default();
    if p.is_cheb_first() {
        // P_n^{(-1/2,-1/2)} = (1/2)_n / n! T_n
        let r = min_cheb_t(n, e)?;
        let scale = (log_pochhammer(0.5, n) / log_pochhammer(1.0, n)).to_f64();
        return Ok((r.value * scale, r.theorem_tag));
    }
    if p.is_gegenbauer() {
        let g = GegenbauerParam::new(p.alpha + 0.5)?;
        let r = min_gegenbauer(g, n, e, &cfg)?;
        let scale = gegenbauer_prefactor(g, n).to_f64().abs();
        return Ok((r.value / scale, r.theorem_tag));
    }
    let r = sample_extremum(|pt| jacobi_eval(p, n, pt.z()), e, ExtremumKind::Min, &cfg);
    Ok((r.value, r.theorem_tag))
}

/// Assembles the interpolation error bound.
pub fn interp_bound(req: InterpBoundRequest) -> Result<InterpBound> {
    if !(req.rho > 1.0) || !req.rho.is_finite() {
        return Err(domain(format!(
            "rho must exceed 1 (the bound degenerates at rho = 1), got {}",
            req.rho
        )));
    }
    if !(req.m > 0.0) || !req.m.is_finite() {
        return Err(domain(format!("M must be positive and finite, got {}", req.m)));
    }
    if req.n == 0 {
        return Err(domain("n must be at least 1"));
    }
    let e = BernsteinEllipse::proper(req.rho)?;
    let circumference = ellipse_circumference(e)?;
    let distance = ellipse_interval_distance(e);
    let numerator = jacobi_interval_max(req.params, req.n)?.value;
    let (denominator, denominator_tag) = ellipse_min(req.params, req.n, e)?;
    let bound = req.m * circumference / (2.0 * PI * distance) * numerator / denominator;
    let mut warnings = Vec::new();
    if req.rho < NEAR_DEGENERATE_RHO {
        warnings.push(format!(
            "near-degenerate: rho < {NEAR_DEGENERATE_RHO}, the distance {distance:e} makes the bound large"
        ));
    }
    Ok(InterpBound {
        request: req,
        circumference,
        distance,
        numerator,
        denominator,
        denominator_tag,
        bound,
        warnings,
    })
}
