//! Exact arithmetic on dyadic rationals (`m * 2^e`).
//!
//! Every finite `f64` is a dyadic rational, so sums and products of
//! doubles can be carried out without rounding and rounded once at the end.
//! Terminating hypergeometric sums at unit argument cancel so strongly
//! (term magnitudes exceed the result by twenty orders at degree 32) that
//! this is the only practical way to evaluate them to full precision.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LogScaled;

/// `mantissa * 2^exponent`, exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic {
            mantissa: BigInt::from(v),
            exponent: 0,
        }
    }

    /// Exact conversion. Panics on non-finite input.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "cannot represent {x} exactly");
        if x == 0.0 {
            return Self::zero();
        }
        let bits = x.to_bits();
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mut m, mut e) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        let tz = m.trailing_zeros();
        m >>= tz;
        e += i64::from(tz);
        let mut mantissa = BigInt::from(m);
        if x < 0.0 {
            mantissa = -mantissa;
        }
        Dyadic {
            mantissa,
            exponent: e,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// The integer `self * 2^(-exponent)`; `exponent` must not exceed the own exponent.
    pub fn scaled_mantissa(&self, exponent: i64) -> BigInt {
        assert!(exponent <= self.exponent);
        &self.mantissa << ((self.exponent - exponent) as usize)
    }

    pub fn to_f64(&self) -> f64 {
        Rational::new(self.mantissa.clone(), BigInt::one()).to_f64() * pow2(self.exponent)
    }

    /// `self / den` rounded once to the nearest double.
    pub fn div_to_f64(&self, den: &BigInt) -> f64 {
        if self.exponent >= 0 {
            Rational::new(&self.mantissa << (self.exponent as usize), den.clone()).to_f64()
        } else {
            Rational::new(self.mantissa.clone(), den << ((-self.exponent) as usize)).to_f64()
        }
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let e = self.exponent.min(rhs.exponent);
        Dyadic {
            mantissa: self.scaled_mantissa(e) + rhs.scaled_mantissa(e),
            exponent: e,
        }
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic {
            mantissa: &self.mantissa * &rhs.mantissa,
            exponent: self.exponent + rhs.exponent,
        }
    }
}

/// An unreduced fraction of big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational {
    pub num: BigInt,
    pub den: BigInt,
}

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn sign(&self) -> Ordering {
        let s = |b: &BigInt| match b.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        };
        (s(&self.num) * s(&self.den)).cmp(&0)
    }

    /// Returns `(q, shift)` with `|num/den| ≈ q * 2^(-shift)`, `q` in
    /// `[2^61, 2^63)` and the lowest bit of `q` set when the division was inexact.
    fn normalized_quotient(&self) -> (u64, i64) {
        let a = self.num.abs();
        let b = self.den.abs();
        let shift = 62 - (a.bits() as i64 - b.bits() as i64);
        let (q, r) = if shift >= 0 {
            (&a << shift as usize).div_rem(&b)
        } else {
            a.div_rem(&(&b << (-shift) as usize))
        };
        let mut q = q.to_u64().expect("normalized quotient fits in 64 bits");
        if !r.is_zero() {
            q |= 1;
        }
        (q, shift)
    }

    /// Rounds to the nearest double (up to a final power-of-two scaling).
    pub fn to_f64(&self) -> f64 {
        match self.sign() {
            Ordering::Equal => 0.0,
            s => {
                let (q, shift) = self.normalized_quotient();
                let v = q as f64 * pow2(-shift);
                if s == Ordering::Less {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// Log-scaled value; never overflows.
    pub fn to_log_scaled(&self) -> LogScaled {
        match self.sign() {
            Ordering::Equal => LogScaled::ZERO,
            s => {
                let (q, shift) = self.normalized_quotient();
                let log = (q as f64).ln() - shift as f64 * std::f64::consts::LN_2;
                LogScaled::new(log, if s == Ordering::Less { -1 } else { 1 })
            }
        }
    }
}

/// `2^k` as a double, saturating to 0 or infinity.
pub(crate) fn pow2(k: i64) -> f64 {
    let mut result = 1.0f64;
    let mut k = k;
    while k > 1000 {
        result *= 2f64.powi(1000);
        k -= 1000;
        if result.is_infinite() {
            return result;
        }
    }
    while k < -1000 {
        result *= 2f64.powi(-1000);
        k += 1000;
        if result == 0.0 {
            return 0.0;
        }
    }
    result * 2f64.powi(k as i32)
}
