use std::f64::consts::PI;
use std::ops::{Div, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// A real number stored as `sign * exp(log_magnitude)`.
///
/// Used for gamma ratios and leading coefficients whose magnitude leaves the
/// range of `f64` long before the quantities they feed into do.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogScaled {
    /// Natural logarithm of the absolute value. Ignored when `sign == 0`.
    pub log_magnitude: f64,
    /// One of -1, 0, +1.
    pub sign: i8,
}

impl LogScaled {
    pub const ZERO: LogScaled = LogScaled {
        log_magnitude: f64::NEG_INFINITY,
        sign: 0,
    };
    pub const ONE: LogScaled = LogScaled {
        log_magnitude: 0.0,
        sign: 1,
    };

    pub fn new(log_magnitude: f64, sign: i8) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            LogScaled {
                log_magnitude,
                sign: sign.signum(),
            }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            LogScaled {
                log_magnitude: x.abs().ln(),
                sign: if x > 0.0 { 1 } else { -1 },
            }
        }
    }

    /// Converts back to a plain float; overflows to ±inf and underflows to 0.
    pub fn to_f64(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_magnitude.exp(),
        }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn recip(self) -> Self {
        assert!(self.sign != 0, "reciprocal of zero");
        LogScaled {
            log_magnitude: -self.log_magnitude,
            sign: self.sign,
        }
    }

    /// Multiplies by `2^k` exactly in log space.
    pub fn scale_pow2(self, k: f64) -> Self {
        if self.sign == 0 {
            return self;
        }
        LogScaled {
            log_magnitude: self.log_magnitude + k * std::f64::consts::LN_2,
            sign: self.sign,
        }
    }
}

impl Mul for LogScaled {
    type Output = LogScaled;
    fn mul(self, rhs: LogScaled) -> LogScaled {
        if self.sign == 0 || rhs.sign == 0 {
            return LogScaled::ZERO;
        }
        LogScaled {
            log_magnitude: self.log_magnitude + rhs.log_magnitude,
            sign: self.sign * rhs.sign,
        }
    }
}

impl Div for LogScaled {
    type Output = LogScaled;
    fn div(self, rhs: LogScaled) -> LogScaled {
        self * rhs.recip()
    }
}

impl Mul<f64> for LogScaled {
    type Output = LogScaled;
    fn mul(self, rhs: f64) -> LogScaled {
        self * LogScaled::from_f64(rhs)
    }
}

// Lanczos approximation with r = 10.900511 (Pugh 2004), 16 significant digits.
const LANCZOS_R: f64 = 10.900511;
const LANCZOS_D: [f64; 11] = [
    2.485_740_891_387_535_655_46e-5,
    1.051_423_785_817_219_742_10,
    -3.456_870_972_220_162_354_69,
    4.512_277_094_668_948_237_00,
    -2.982_852_253_235_766_557_21,
    1.056_397_115_771_267_130_77,
    -1.954_287_731_916_458_695_83e-1,
    1.709_705_434_044_412_243_07e-2,
    -5.719_261_174_043_057_812_83e-4,
    4.633_994_733_599_056_367_08e-6,
    -2.719_949_084_886_077_039_10e-9,
];
// ln(2 sqrt(e / pi))
const LN_TWO_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;

fn lanczos_sum(x: f64) -> f64 {
    LANCZOS_D
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_D[0], |s, (i, &d)| s + d / (x + i as f64 - 1.0))
}

/// Natural logarithm of the gamma function for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // Reflection keeps the Lanczos sum in its accurate range.
        let reflected = log_gamma(1.0 - x)?;
        return Ok((PI / (PI * x).sin()).ln() - reflected);
    }
    // Exact for the small integers, which anchor several closed forms.
    if x <= 20.0 && x.fract() == 0.0 {
        let mut f = 1.0f64;
        for k in 2..(x as u32) {
            f *= f64::from(k);
        }
        return Ok(f.ln());
    }
    let s = lanczos_sum(x);
    Ok(s.ln() + LN_TWO_SQRT_E_OVER_PI + (x - 0.5) * ((x - 0.5 + LANCZOS_R).ln() - 1.0))
}

/// `Γ(a_1)…Γ(a_p) / (Γ(b_1)…Γ(b_q))` for positive arguments, in log form.
pub fn log_gamma_ratio(numer: &[f64], denom: &[f64]) -> Result<LogScaled> {
    let mut acc = 0.0;
    for &a in numer {
        acc += log_gamma(a)?;
    }
    for &b in denom {
        acc -= log_gamma(b)?;
    }
    Ok(LogScaled::new(acc, 1))
}
