//! Jacobi, Gegenbauer and Chebyshev polynomials.

mod chebyshev;
mod gegenbauer;
mod jacobi;
mod zeros;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

pub use chebyshev::{cheb_t, cheb_t_at, cheb_u, cheb_u_at};
pub use gegenbauer::{gegenbauer_eval, gegenbauer_leading_coeff, gegenbauer_prefactor};
pub use jacobi::{
    jacobi_eval, jacobi_eval_def_sum, jacobi_eval_real, jacobi_eval_with_previous,
    jacobi_interval_max, jacobi_leading_coeff, IntervalMax, DEF_SUM_MAX_DEGREE,
};
pub use zeros::{gegenbauer_zeros, jacobi_zeros};

/// Jacobi parameters `(alpha, beta)` with `alpha, beta > -1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(domain(format!("alpha must exceed -1, got {alpha}")));
        }
        if !(beta > -1.0) || !beta.is_finite() {
            return Err(domain(format!("beta must exceed -1, got {beta}")));
        }
        Ok(JacobiParams { alpha, beta })
    }

    /// Legendre polynomials, `alpha = beta = 0`.
    pub fn legendre() -> Self {
        JacobiParams {
            alpha: 0.0,
            beta: 0.0,
        }
    }

    pub fn cheb_first() -> Self {
        JacobiParams {
            alpha: -0.5,
            beta: -0.5,
        }
    }

    pub fn cheb_second() -> Self {
        JacobiParams {
            alpha: 0.5,
            beta: 0.5,
        }
    }

    pub fn sum(&self) -> f64 {
        self.alpha + self.beta
    }

    /// `(beta, alpha)`, the family obtained by `x -> -x`.
    pub fn swapped(&self) -> Self {
        JacobiParams {
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    pub fn is_gegenbauer(&self) -> bool {
        self.alpha == self.beta
    }

    pub fn is_cheb_first(&self) -> bool {
        self.alpha == -0.5 && self.beta == -0.5
    }

    pub fn is_cheb_second(&self) -> bool {
        self.alpha == 0.5 && self.beta == 0.5
    }
}

/// Gegenbauer parameter `lambda > -1/2`, `lambda != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GegenbauerParam {
    pub lambda: f64,
}

impl GegenbauerParam {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda > -0.5) || !lambda.is_finite() {
            return Err(domain(format!("lambda must exceed -1/2, got {lambda}")));
        }
        if lambda == 0.0 {
            return Err(domain(
                "lambda = 0 has no normalized Gegenbauer polynomial; use Chebyshev T",
            ));
        }
        Ok(GegenbauerParam { lambda })
    }

    /// The Jacobi family `alpha = beta = lambda - 1/2`.
    pub fn jacobi(&self) -> JacobiParams {
        JacobiParams {
            alpha: self.lambda - 0.5,
            beta: self.lambda - 0.5,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_validation() {
        assert!(JacobiParams::new(-1.0, 0.0).is_err());
        assert!(JacobiParams::new(0.0, -1.5).is_err());
        assert!(JacobiParams::new(f64::NAN, 0.0).is_err());
        let msg = JacobiParams::new(-1.0, 0.0).unwrap_err().to_string();
        assert!(msg.contains("alpha must exceed -1"));
        assert!(GegenbauerParam::new(-0.5).is_err());
        assert!(GegenbauerParam::new(0.0).is_err());
        assert!(GegenbauerParam::new(-0.3).is_ok());
    }

    #[test]
    fn classifiers() {
        assert!(JacobiParams::cheb_first().is_cheb_first());
        assert!(JacobiParams::cheb_first().is_gegenbauer());
        assert!(JacobiParams::cheb_second().is_cheb_second());
        assert!(!JacobiParams::new(0.5, 0.4).unwrap().is_gegenbauer());
        let g = GegenbauerParam::new(1.0).unwrap();
        assert_eq!(g.jacobi(), JacobiParams::cheb_second());
    }
}
