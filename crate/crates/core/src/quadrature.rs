//! Numerical integration: tanh-sinh on a finite interval and the
//! trapezoid rule for periodic integrands.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Result of an adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature<T> {
    pub value: T,
    /// Change between the last two refinement levels.
    pub error_estimate: f64,
    /// Number of integrand evaluations.
    pub evaluations: usize,
}

const TANH_SINH_T_MAX: f64 = 4.5;
const TANH_SINH_MAX_LEVEL: u32 = 10;

/// Tanh-sinh (double exponential) quadrature of a complex integrand on `[a, b]`.
///
/// The integrand is called as `f(x, x - a, b - x)`. The two distances are
/// computed without cancellation, so integrands with endpoint singularities
/// such as `log(b - x)` stay accurate at abscissae that crowd the endpoints.
/// The step is halved until two consecutive levels agree to `rel_tol`.
pub fn tanh_sinh(
    f: impl Fn(f64, f64, f64) -> Complex64,
    a: f64,
    b: f64,
    rel_tol: f64,
) -> Result<Quadrature<Complex64>> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!(
            "tanh_sinh needs a finite interval a < b, got [{a}, {b}]"
        )));
    }
    let half = 0.5 * (b - a);
    let mut evaluations = 0usize;
    // Contribution of the node at parameter t, weight included.
    let node = |t: f64, evaluations: &mut usize| -> Complex64 {
        let s = std::f64::consts::FRAC_PI_2 * t.sinh();
        let cosh_s = s.cosh();
        let weight = half * std::f64::consts::FRAC_PI_2 * t.cosh() / (cosh_s * cosh_s);
        // distance to the nearer endpoint: half * 2 / (1 + e^{2|s|})
        let near = 2.0 * half / (1.0 + (2.0 * s.abs()).exp());
        if near == 0.0 || weight == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let far = 2.0 * half - near;
        let (x, da, db) = if s >= 0.0 {
            (b - near, far, near)
        } else {
            (a + near, near, far)
        };
        *evaluations += 1;
        f(x, da, db) * weight
    };

    let mut h = 1.0f64;
    let k_max = (TANH_SINH_T_MAX / h) as i64;
    let mut sum = node(0.0, &mut evaluations);
    for k in 1..=k_max {
        let t = k as f64 * h;
        sum += node(t, &mut evaluations) + node(-t, &mut evaluations);
    }
    let mut estimate = sum * h;
    for level in 1..=TANH_SINH_MAX_LEVEL {
        h *= 0.5;
        // new nodes sit at odd multiples of the halved step
        let k_max = (TANH_SINH_T_MAX / h) as i64;
        let mut k = 1;
        while k <= k_max {
            let t = k as f64 * h;
            sum += node(t, &mut evaluations) + node(-t, &mut evaluations);
            k += 2;
        }
        let next = sum * h;
        let change = (next - estimate).norm();
        estimate = next;
        // a single agreeing halving can be accidental on coarse levels
        if level >= 3 && change <= rel_tol * estimate.norm() {
            return Ok(Quadrature {
                value: estimate,
                error_estimate: change,
                evaluations,
            });
        }
    }
    Err(Error::Invariant(format!(
        "tanh_sinh did not reach relative tolerance {rel_tol} on [{a}, {b}]"
    )))
}

/// Trapezoid rule for `f` periodic with the given period, doubling the node
/// count from 16 until two consecutive estimates agree to `rel_tol`.
///
/// For analytic periodic integrands the error decays geometrically, so a
/// handful of doublings reaches full precision.
pub fn periodic_trapezoid(
    f: impl Fn(f64) -> f64,
    period: f64,
    rel_tol: f64,
) -> Result<Quadrature<f64>> {
    if !(period > 0.0) || !period.is_finite() {
        return Err(Error::Domain(format!(
            "period must be positive and finite, got {period}"
        )));
    }
    let mut m = 16usize;
    let mut sum: f64 = (0..m).map(|j| f(period * j as f64 / m as f64)).sum();
    let mut estimate = sum * period / m as f64;
    let mut evaluations = m;
    while m < 1 << 22 {
        let odd: f64 = (0..m)
            .map(|j| f(period * (2 * j + 1) as f64 / (2 * m) as f64))
            .sum();
        evaluations += m;
        sum += odd;
        m *= 2;
        let next = sum * period / m as f64;
        let change = (next - estimate).abs();
        estimate = next;
        if change <= rel_tol * estimate.abs() {
            return Ok(Quadrature {
                value: estimate,
                error_estimate: change,
                evaluations,
            });
        }
    }
    Err(Error::Invariant(format!(
        "periodic trapezoid did not reach relative tolerance {rel_tol}"
    )))
}
