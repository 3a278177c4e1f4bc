use std::f64::consts::PI;

use num_complex::Complex64;

use crate::ellipse::EllipsePoint;
use crate::error::{domain, Error, Result};
use crate::orthopoly::JacobiParams;
use crate::quadrature::tanh_sinh;
use crate::scalar::sqrt_zsq_minus_1;

/// Replaces a negative-zero imaginary part by `+0` so principal powers of
/// values on the negative real axis take the upper-side branch consistently.
fn upper(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

/// The conformal map `phi(z) = z + sqrt(z^2 - 1)` from the plane cut along
/// `[-1, 1]` onto the exterior of the unit disk.
pub fn phi(z: Complex64) -> Result<Complex64> {
    Ok(z + sqrt_zsq_minus_1(z)?)
}

/// Szegő function of the weight `(1-x)^a (1+x)^b`:
/// `D(z) = (z-1)^{a/2} (z+1)^{b/2} / phi(z)^{(a+b)/2}`.
///
/// Each factor uses the principal power. Their jumps across `(-inf, -1)`
/// cancel, so the product is analytic off `[-1, 1]`.
pub fn szego_d(p: JacobiParams, z: Complex64) -> Result<Complex64> {
    let w = upper(phi(z)?);
    let z = upper(z);
    let (a, b) = (p.alpha, p.beta);
    Ok(upper(z - 1.0).powf(0.5 * a) * upper(z + 1.0).powf(0.5 * b) / w.powf(0.5 * (a + b)))
}

/// `D(z)` at infinity, `2^{-(a+b)/2}`.
pub fn szego_d_infinity(p: JacobiParams) -> f64 {
    (-0.5 * p.sum() * std::f64::consts::LN_2).exp()
}

/// `D(z)` from its defining integral,
/// `exp( sqrt(z^2-1)/(2 pi) int_{-1}^{1} log w(x) / sqrt(1-x^2) dx/(z-x) )`,
/// evaluated by tanh-sinh quadrature after `x = cos t`.
///
/// Independent of the closed form in [`szego_d`] and used to check it.
pub fn szego_d_quadrature(p: JacobiParams, z: Complex64, rel_tol: f64) -> Result<Complex64> {
    let root = sqrt_zsq_minus_1(z)?;
    let (a, b) = (p.alpha, p.beta);
    // log(1 - cos t) = log(2 sin^2(t/2)), log(1 + cos t) = log(2 sin^2((pi-t)/2))
    let integrand = |t: f64, dt0: f64, dtpi: f64| {
        let log_w = a * (2.0 * (0.5 * dt0).sin().powi(2)).ln()
            + b * (2.0 * (0.5 * dtpi).sin().powi(2)).ln();
        Complex64::new(log_w, 0.0) / (z - t.cos())
    };
    if a == 0.0 && b == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let q = tanh_sinh(integrand, 0.0, PI, rel_tol)?;
    Ok((root / (2.0 * PI) * q.value).exp())
}

/// First correction `Pi_1(z) = -(4a^2-1)/(8(phi-1)) + (4b^2-1)/(8(phi+1))`.
pub fn pi1(z: Complex64, p: JacobiParams) -> Result<Complex64> {
    pi1_hat(phi(z)?, p)
}

/// `Pi_1` in the variable `u = phi(z)`:
/// `(4b^2-1)/(8(u+1)) - (4a^2-1)/(8(u-1))`.
pub fn pi1_hat(u: Complex64, p: JacobiParams) -> Result<Complex64> {
    if u == Complex64::new(1.0, 0.0) || u == Complex64::new(-1.0, 0.0) {
        return Err(Error::Pole(format!("pi1_hat has a pole at u = {u}")));
    }
    let (ca, cb) = (4.0 * p.alpha * p.alpha - 1.0, 4.0 * p.beta * p.beta - 1.0);
    Ok(cb / (8.0 * (u + 1.0)) - ca / (8.0 * (u - 1.0)))
}

/// Second correction `Pi_2(z)` with coefficients transcribed term by term:
///
/// `(4a^2-1)(a+b)/(16(phi-1)) - (4b^2-1)(a+b)/(16(phi+1))
///  - (4a^2-1)(4b^2-1)/(128(z^2-1))
///  + (2a^2+2b^2-5)/64 * [ (4a^2-1)/(phi-1)^2 + (4b^2-1)/(8(phi+1)^2) ]`.
///
/// The bracket is asymmetric in `a` and `b` (only the second term carries the
/// factor 8), so the value is kept for diagnostics and never enters a bound.
pub fn pi2(z: Complex64, p: JacobiParams) -> Result<Complex64> {
    if z == Complex64::new(1.0, 0.0) || z == Complex64::new(-1.0, 0.0) {
        return Err(Error::Pole(format!("pi2 has a pole at z = {z}")));
    }
    let w = phi(z)?;
    let (a, b) = (p.alpha, p.beta);
    let (ca, cb) = (4.0 * a * a - 1.0, 4.0 * b * b - 1.0);
    let s = a + b;
    let wm = w - 1.0;
    let wp = w + 1.0;
    Ok(ca * s / (16.0 * wm) - cb * s / (16.0 * wp) - ca * cb / (128.0 * (z * z - 1.0))
        + (2.0 * a * a + 2.0 * b * b - 5.0) / 64.0 * (ca / (wm * wm) + cb / (8.0 * wp * wp)))
}

/// Limit profile `(1-1/u)^{-a-1/2} (1+1/u)^{-b-1/2}` of the scaled polynomial
/// `sqrt(pi n) 2^{-a-b} u^{-n} P_n(z)` on the ellipse.
///
/// For `rho > 1` both bases have positive real part, so principal powers are
/// smooth in `theta`.
pub fn leading_term(p: JacobiParams, pt: &EllipsePoint) -> Complex64 {
    let w = pt.u_pow(-1);
    let (minus, plus) = (1.0 - w, 1.0 + w);
    debug_assert!(pt.rho <= 1.0 || (minus.re > 0.0 && plus.re > 0.0));
    minus.powf(-p.alpha - 0.5) * plus.powf(-p.beta - 0.5)
}

/// `1 / leading_term`, the quantity whose circle maximum enters the lower bound.
pub(crate) fn leading_term_recip(p: JacobiParams, pt: &EllipsePoint) -> Complex64 {
    let w = pt.u_pow(-1);
    (1.0 - w).powf(p.alpha + 0.5) * (1.0 + w).powf(p.beta + 0.5)
}

pub(crate) fn require_proper(rho: f64) -> Result<()> {
    if rho > 1.0 && rho.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("rho must exceed 1, got {rho}")))
    }
}
