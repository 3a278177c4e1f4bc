use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// The ellipse with foci ±1 traced by `z = (u + 1/u)/2`, `|u| = rho`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BernsteinEllipse {
    rho: f64,
}

impl BernsteinEllipse {
    /// `rho = 1` is allowed and degenerates to the interval `[-1, 1]`.
    pub fn new(rho: f64) -> Result<Self> {
        if !(rho >= 1.0) || !rho.is_finite() {
            return Err(domain(format!("rho must be finite and at least 1, got {rho}")));
        }
        Ok(BernsteinEllipse { rho })
    }

    /// Like [`BernsteinEllipse::new`] but requires `rho > 1`.
    pub fn proper(rho: f64) -> Result<Self> {
        if !(rho > 1.0) {
            return Err(domain(format!("rho must exceed 1, got {rho}")));
        }
        Self::new(rho)
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn semi_major(&self) -> f64 {
        0.5 * (self.rho + 1.0 / self.rho)
    }

    pub fn semi_minor(&self) -> f64 {
        0.5 * (self.rho - 1.0 / self.rho)
    }

    pub fn point(&self, theta: f64) -> EllipsePoint {
        EllipsePoint::on(*self, theta)
    }

    /// The `m` points `theta_j = 2 pi j / m`.
    pub fn uniform_points(&self, m: usize) -> impl Iterator<Item = EllipsePoint> + '_ {
        (0..m).map(move |j| self.point(TAU * j as f64 / m as f64))
    }
}

/// A point `u = rho e^{i theta}` together with its image `z = (u + 1/u)/2`.
///
/// `theta` is normalized to `[0, 2 pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipsePoint {
    pub rho: f64,
    pub theta: f64,
}

impl EllipsePoint {
    pub fn new(rho: f64, theta: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(domain(format!("theta must be finite, got {theta}")));
        }
        Ok(Self::on(BernsteinEllipse::new(rho)?, theta))
    }

    fn on(e: BernsteinEllipse, theta: f64) -> Self {
        EllipsePoint {
            rho: e.rho,
            theta: normalize_angle(theta),
        }
    }

    pub fn u(&self) -> Complex64 {
        Complex64::from_polar(self.rho, self.theta)
    }

    /// `u^k` formed from its polar form, so `|u^k| = rho^k` up to one rounding.
    pub fn u_pow(&self, k: i32) -> Complex64 {
        Complex64::from_polar(self.rho.powi(k), f64::from(k) * self.theta)
    }

    /// Image point, computed from the semi-axes to avoid cancellation.
    pub fn z(&self) -> Complex64 {
        let (s, c) = self.theta.sin_cos();
        Complex64::new(
            0.5 * (self.rho + 1.0 / self.rho) * c,
            0.5 * (self.rho - 1.0 / self.rho) * s,
        )
    }
}

/// Reduces an angle to `[0, 2 pi)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Distance between two angles on the circle.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}
