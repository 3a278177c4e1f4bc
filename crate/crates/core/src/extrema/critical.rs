use serde::{Deserialize, Serialize};

use super::{sample_extremum, ExtremumKind, SamplerConfig, RHO2_STAR};
use crate::ellipse::BernsteinEllipse;
use crate::error::{domain, Error, Result};
use crate::orthopoly::{gegenbauer_eval, GegenbauerParam};
use crate::search::bisect;

/// The radius above which the minimum of `|U_n|` (n even) over the ellipse
/// sits at the ends of the minor axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalRadius {
    pub n: u32,
    pub rho_star: f64,
    /// `a_{n+1}(rho*) - (n+1) a_1(rho*)` at the returned root.
    pub residual: f64,
}

fn power_mean(k: i32, rho: f64) -> f64 {
    0.5 * (rho.powi(k) + rho.powi(-k))
}

/// `a_{n+1}(rho) - (n+1) a_1(rho)` with `a_k(rho) = (rho^k + rho^{-k})/2`.
pub fn critical_residual(n: u32, rho: f64) -> f64 {
    let k = n as i32 + 1;
    power_mean(k, rho) - f64::from(k) * power_mean(1, rho)
}

fn residual_slope(n: u32, rho: f64) -> f64 {
    let k = n as i32 + 1;
    let kf = f64::from(k);
    0.5 * kf * (rho.powi(k - 1) - rho.powi(-k - 1)) - 0.5 * kf * (1.0 - rho.powi(-2))
}

/// Root of `a_{n+1}(rho) = (n+1) a_1(rho)` in `rho > 1` for even `n >= 2`.
///
/// Bisection on `[1 + 1e-12, 4]`, widened by doubling if needed, then Newton
/// polishing and a final pick among neighbouring doubles.
pub fn rho_star(n: u32) -> Result<CriticalRadius> {
    if n < 2 || n % 2 == 1 {
        return Err(domain(format!("the critical radius needs even n >= 2, got {n}")));
    }
    let f = |r: f64| critical_residual(n, r);
    let lo = 1.0 + 1e-12;
    let mut hi = 4.0;
    let mut doublings = 0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
        doublings += 1;
        if doublings > 16 {
            return Err(Error::NoRoot(format!("no bracket for rho* with n = {n}")));
        }
    }
    if f(lo) >= 0.0 {
        return Err(Error::NoRoot(format!("residual not negative near 1 for n = {n}")));
    }
    let mut r = bisect(f, lo, hi, 1e-14)?;
    for _ in 0..4 {
        let step = f(r) / residual_slope(n, r);
        if !step.is_finite() {
            break;
        }
        r -= step;
    }
    // the root is only defined to the spacing of doubles; keep the best neighbour
    let mut best = r;
    let mut cand = r;
    for _ in 0..4 {
        cand = next_down(cand);
    }
    for _ in 0..9 {
        if f(cand).abs() < f(best).abs() {
            best = cand;
        }
        cand = next_up(cand);
    }
    Ok(CriticalRadius {
        n,
        rho_star: best,
        residual: f(best),
    })
}

fn next_up(x: f64) -> f64 {
    f64::from_bits(x.to_bits() + 1)
}

fn next_down(x: f64) -> f64 {
    f64::from_bits(x.to_bits() - 1)
}

/// `rho_n*` for `n = 2, 4, ..., n_max`.
pub fn rho_star_table(n_max: u32) -> Result<Vec<CriticalRadius>> {
    if n_max < 2 || n_max % 2 == 1 {
        return Err(domain(format!("n_max must be even and at least 2, got {n_max}")));
    }
    (1..=n_max / 2).map(|h| rho_star(2 * h)).collect()
}

/// Numerical estimate of the radius above which the minimum of `|C_n^lambda|`
/// lies at the minor-axis endpoints. Not certified.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalEstimate {
    pub n: u32,
    pub lambda: f64,
    pub rho_estimate: f64,
    /// Width of the final bisection bracket.
    pub bracket: f64,
    pub certified: bool,
}

/// Bisection on `rho` in `(1, rho_2*]` for the point where the minor-axis
/// value stops being the sampled global minimum. Assumes a single switch.
pub fn estimate_gegenbauer_critical_radius(
    g: GegenbauerParam,
    n: u32,
    cfg: &SamplerConfig,
    tol: f64,
) -> Result<CriticalEstimate> {
    if n == 0 {
        return Err(domain("n must be at least 1"));
    }
    let on_axis = |rho: f64| -> Result<bool> {
        let e = BernsteinEllipse::proper(rho)?;
        let axis = gegenbauer_eval(g, n, e.point(std::f64::consts::FRAC_PI_2).z()).norm();
        let r = sample_extremum(|p| gegenbauer_eval(g, n, p.z()), e, ExtremumKind::Min, cfg);
        Ok(axis <= r.value * (1.0 + 1e-10))
    };
    let mut lo = 1.0 + 1e-3;
    let mut hi = RHO2_STAR;
    if on_axis(lo)? {
        return Ok(CriticalEstimate {
            n,
            lambda: g.lambda,
            rho_estimate: lo,
            bracket: 0.0,
            certified: false,
        });
    }
    if !on_axis(hi)? {
        return Err(Error::NoRoot(format!(
            "minimum of |C_{n}^{}| is off the minor axis at rho_2*",
            g.lambda
        )));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if on_axis(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(CriticalEstimate {
        n,
        lambda: g.lambda,
        rho_estimate: 0.5 * (lo + hi),
        bracket: hi - lo,
        certified: false,
    })
}
