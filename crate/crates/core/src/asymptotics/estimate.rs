use std::f64::consts::{LN_2, PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::szego::{leading_term, leading_term_recip, require_proper};
use crate::ellipse::{coeffs_recurrence, eval_ellipse_series_scaled, BernsteinEllipse, EllipsePoint};
use crate::error::{domain, Error, Result};
use crate::extrema::{sample_extremum, ExtremumKind, SamplerConfig};
use crate::orthopoly::{jacobi_leading_coeff, JacobiParams};
use crate::scalar::LogScaled;

/// Default constant in the lower bound `min |P_n| >= C_n 2^{a+b} rho^n / (M sqrt(pi n))`.
pub const DEFAULT_C_N: f64 = 0.9;

/// Grid used for circle maxima (`Lambda` and the lower-bound denominator).
pub const CIRCLE_GRID: usize = 4096;

fn circle_sampler() -> SamplerConfig {
    SamplerConfig::with_grid(CIRCLE_GRID)
}

/// `(a+b)^2 + (a+b) + 1/2`, the constant in the first-order correction of `k_n`.
fn kn_constant(p: JacobiParams) -> f64 {
    let s = p.sum();
    s * s + s + 0.5
}

/// First-order error profile `(4 Pi1_hat(u) - (a+b)^2 - (a+b) - 1/2) / (4 (1-1/u)^{a+1/2} (1+1/u)^{b+1/2})`.
pub fn first_order_profile(p: JacobiParams, pt: &EllipsePoint) -> Complex64 {
    let u = pt.u();
    let (ca, cb) = (4.0 * p.alpha * p.alpha - 1.0, 4.0 * p.beta * p.beta - 1.0);
    let pi1_hat = cb / (8.0 * (u + 1.0)) - ca / (8.0 * (u - 1.0));
    (4.0 * pi1_hat - kn_constant(p)) * leading_term(p, pt) / 4.0
}

/// `Lambda(rho, a, b)`: maximum of [`first_order_profile`] over `|u| = rho`,
/// by sampling on 4096 angles and golden-section refinement.
pub fn lambda_constant(p: JacobiParams, e: BernsteinEllipse) -> Result<f64> {
    require_proper(e.rho())?;
    let r = sample_extremum(
        |pt| first_order_profile(p, pt),
        e,
        ExtremumKind::Max,
        &circle_sampler(),
    );
    Ok(r.value)
}

/// Maximum of `|(1-1/u)^{a+1/2} (1+1/u)^{b+1/2}|` over `|u| = rho`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleMax {
    /// The closed form when it applies, otherwise the sampled value.
    pub value: f64,
    pub sampled: f64,
    /// `(1 + rho^-2)^{a+1/2}` or `(1 - rho^-2)^{a+1/2}` when `a = b`.
    pub closed_form: Option<f64>,
    /// Sampled maximizers in `[0, 2 pi)`; empty when the modulus is constant.
    pub thetas: Vec<f64>,
}

/// Circle maximum entering [`lower_bound`]. When `a = b` the closed form is
/// returned and must agree with sampling to relative 1e-10.
pub fn circle_max(p: JacobiParams, e: BernsteinEllipse) -> Result<CircleMax> {
    require_proper(e.rho())?;
    let r = sample_extremum(
        |pt| leading_term_recip(p, pt),
        e,
        ExtremumKind::Max,
        &circle_sampler(),
    );
    let thetas = if r.is_degenerate() { Vec::new() } else { r.thetas() };
    let closed_form = p.is_gegenbauer().then(|| {
        let q = e.rho().powi(-2);
        let exponent = p.alpha + 0.5;
        if exponent >= 0.0 {
            (1.0 + q).powf(exponent)
        } else {
            (1.0 - q).powf(exponent)
        }
    });
    if let Some(c) = closed_form {
        if (c - r.value).abs() > 1e-10 * c {
            return Err(Error::Invariant(format!(
                "circle maximum closed form {c} disagrees with sampling {}",
                r.value
            )));
        }
    }
    Ok(CircleMax {
        value: closed_form.unwrap_or(r.value),
        sampled: r.value,
        closed_form,
        thetas,
    })
}

/// Lower bound for `min |P_n|` on the ellipse.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: f64,
    /// Natural log of `value`, finite even when `value` overflows.
    pub log_value: f64,
    pub c_n: f64,
    pub circle_max: CircleMax,
}

/// `C_n 2^{a+b} rho^n / (sqrt(pi n) max_{|u|=rho} |(1-1/u)^{a+1/2} (1+1/u)^{b+1/2}|)`.
pub fn lower_bound(p: JacobiParams, n: u32, e: BernsteinEllipse, c_n: f64) -> Result<LowerBound> {
    if n == 0 {
        return Err(domain("the lower bound needs n >= 1"));
    }
    if !(c_n > 0.0) || !c_n.is_finite() {
        return Err(domain(format!("C_n must be positive, got {c_n}")));
    }
    let cm = circle_max(p, e)?;
    let nf = f64::from(n);
    let log_value = c_n.ln() + p.sum() * LN_2 + nf * e.rho().ln()
        - 0.5 * (PI * nf).ln()
        - cm.value.ln();
    Ok(LowerBound {
        value: log_value.exp(),
        log_value,
        c_n,
        circle_max: cm,
    })
}

/// The two leading terms of `k_n = 2^{n+a+b} / sqrt(pi n) [1 + c/n + O(1/n^2)]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KnExpansion {
    /// `2^{n+a+b} / sqrt(pi n)`.
    pub leading: LogScaled,
    /// `-((a+b)^2 + (a+b) + 1/2) / (4n)`.
    pub first_correction: f64,
}

pub fn kn_expansion(p: JacobiParams, n: u32) -> Result<KnExpansion> {
    if n == 0 {
        return Err(domain("the k_n expansion needs n >= 1"));
    }
    let nf = f64::from(n);
    let log = (nf + p.sum()) * LN_2 - 0.5 * (PI * nf).ln();
    Ok(KnExpansion {
        leading: LogScaled::new(log, 1),
        first_correction: -kn_constant(p) / (4.0 * nf),
    })
}

/// `|k_n / leading - (1 + first_correction)|` with `k_n` computed exactly
/// from its gamma-ratio form. Decays like `1/n^2`.
pub fn kn_expansion_residual(p: JacobiParams, n: u32) -> Result<f64> {
    let x = kn_expansion(p, n)?;
    let ratio = (jacobi_leading_coeff(p, n) / x.leading).to_f64();
    Ok((ratio - 1.0 - x.first_correction).abs())
}

/// Settings for [`estimate_error`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConfig {
    /// Number of uniform `theta` samples for the error and the minimum.
    pub grid: usize,
    /// Constant in the lower bound.
    pub c_n: f64,
}

impl Default for AsymptoticConfig {
    fn default() -> Self {
        AsymptoticConfig {
            grid: 4096,
            c_n: DEFAULT_C_N,
        }
    }
}

/// Comparison of `P_n` on an ellipse with its first-order asymptotics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticReport {
    pub n: u32,
    pub params: JacobiParams,
    pub rho: f64,
    /// `Lambda(rho, a, b)`.
    pub lambda_const: f64,
    /// Max over the grid of `|leading_term - sqrt(pi n) 2^{-a-b} u^{-n} P_n(z)|`.
    pub max_abs_error: f64,
    /// `n * max_abs_error / Lambda`; close to 1 for large `n`.
    pub first_order_ratio: f64,
    pub lower_bound: f64,
    /// Sampled minimum of `|P_n|`; overflows to infinity for very large `rho^n`.
    pub min_abs_poly: f64,
    /// `min_abs_poly / lower_bound`, formed from scaled quantities so it never overflows.
    pub bound_margin: f64,
    pub c_n: f64,
}

/// Column names of [`AsymptoticReport::csv_row`].
pub const ASYMPTOTIC_CSV_HEADER: &str =
    "n,rho,alpha,beta,Lambda,max_error,n_times_error,lower_bound,min_abs";

impl AsymptoticReport {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?}",
            self.n,
            self.rho,
            self.params.alpha,
            self.params.beta,
            self.lambda_const,
            self.max_abs_error,
            f64::from(self.n) * self.max_abs_error,
            self.lower_bound,
            self.min_abs_poly
        )
    }

    /// Checks the sign invariants every report must satisfy.
    pub fn check_invariants(&self) -> Result<()> {
        let ok = self.lambda_const >= 0.0
            && self.lower_bound > 0.0
            && self.min_abs_poly >= 0.0
            && self.max_abs_error >= 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::Invariant(format!(
                "asymptotic report out of range: Lambda {}, lower bound {}, min {}, error {}",
                self.lambda_const, self.lower_bound, self.min_abs_poly, self.max_abs_error
            )))
        }
    }
}

/// Renders reports as CSV with a header row.
pub fn asymptotic_reports_to_csv(reports: &[AsymptoticReport]) -> String {
    let mut out = String::from(ASYMPTOTIC_CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// Measures the first-order asymptotic error of `P_n` on the ellipse and the
/// lower bound for its minimum modulus.
///
/// The polynomial enters only through its scaled series
/// `sqrt(pi n) 2^{-a-b} u^{-n} P_n(z)`, so no power `rho^n` is formed.
pub fn estimate_error(
    p: JacobiParams,
    n: u32,
    e: BernsteinEllipse,
    cfg: &AsymptoticConfig,
) -> Result<AsymptoticReport> {
    require_proper(e.rho())?;
    if n == 0 {
        return Err(domain("the asymptotic estimate needs n >= 1"));
    }
    if cfg.grid < 8 {
        return Err(domain(format!("grid must be at least 8, got {}", cfg.grid)));
    }
    let table = coeffs_recurrence(p, n)?;
    let h = TAU / cfg.grid as f64;
    let max_abs_error = (0..cfg.grid)
        .map(|j| {
            let pt = e.point(h * j as f64);
            (leading_term(p, &pt) - eval_ellipse_series_scaled(&table, &pt)).norm()
        })
        .fold(0.0, f64::max);

    let lambda_const = lambda_constant(p, e)?;
    let bound = lower_bound(p, n, e, cfg.c_n)?;
    let scaled_min = sample_extremum(
        |pt| eval_ellipse_series_scaled(&table, pt),
        e,
        ExtremumKind::Min,
        &SamplerConfig::with_grid(cfg.grid),
    )
    .value;
    let nf = f64::from(n);
    let growth = nf * e.rho().ln() + p.sum() * LN_2 - 0.5 * (PI * nf).ln();
    let report = AsymptoticReport {
        n,
        params: p,
        rho: e.rho(),
        lambda_const,
        max_abs_error,
        first_order_ratio: nf * max_abs_error / lambda_const,
        lower_bound: bound.value,
        min_abs_poly: scaled_min * growth.exp(),
        bound_margin: scaled_min * bound.circle_max.value / cfg.c_n,
        c_n: cfg.c_n,
    };
    report.check_invariants()?;
    Ok(report)
}
