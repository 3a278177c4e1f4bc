use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::exact::{Dyadic, Rational};
use super::LogScaled;
use crate::error::{domain, Result};

/// Rising factorial `(a)_j = a (a+1) … (a+j-1)`, with `(a)_0 = 1`.
///
/// Formed as a direct product, so a nonpositive integer `a` produces an
/// exact zero as soon as the product passes through it.
pub fn pochhammer(a: f64, j: u32) -> f64 {
    (0..j).fold(1.0, |acc, i| acc * (a + f64::from(i)))
}

/// `(a)_j` in signed log form, for products that leave the range of `f64`.
pub fn log_pochhammer(a: f64, j: u32) -> LogScaled {
    let mut log = 0.0;
    let mut sign = 1i8;
    for i in 0..j {
        let v = a + f64::from(i);
        if v == 0.0 {
            return LogScaled::ZERO;
        }
        if v < 0.0 {
            sign = -sign;
        }
        log += v.abs().ln();
    }
    LogScaled::new(log, sign)
}

/// Terminating `3F2(a1, a2, a3; b1, b2; 1)` with `a1 = -m` a nonpositive integer.
///
/// The real parameters are taken as the exact binary values they hold. The
/// sum is formed exactly and rounded once, so the result is correct to
/// within an ulp no matter how badly the terms cancel.
pub fn hyp3f2_terminating(a1: i64, a2: f64, a3: f64, b1: f64, b2: f64) -> Result<f64> {
    if a1 > 0 {
        return Err(domain(format!(
            "hyp3f2_terminating requires a nonpositive integer a1, got {a1}"
        )));
    }
    for (name, v) in [("a2", a2), ("a3", a3), ("b1", b1), ("b2", b2)] {
        if !v.is_finite() {
            return Err(domain(format!("{name} must be finite, got {v}")));
        }
    }
    let m = u32::try_from(-a1).map_err(|_| domain("a1 out of range"))?;
    let sum = hyp3f2_terminating_exact(
        m,
        &Dyadic::from_f64(a2),
        &Dyadic::from_f64(a3),
        &Dyadic::from_f64(b1),
        &Dyadic::from_f64(b2),
    )?;
    Ok(sum.to_f64())
}

/// Exact value of `3F2(-m, a2, a3; b1, b2; 1)` as a fraction.
///
/// The series is nested Horner-style, `1 + r_0 (1 + r_1 (1 + …))` with
/// `r_j = t_{j+1}/t_j`, so a single numerator/denominator pair is carried
/// from the innermost term outwards without any gcd reductions.
pub fn hyp3f2_terminating_exact(
    m: u32,
    a2: &Dyadic,
    a3: &Dyadic,
    b1: &Dyadic,
    b2: &Dyadic,
) -> Result<Rational> {
    // Common binary exponent so every parameter becomes an integer X / 2^s.
    let e = [a2, a3, b1, b2]
        .iter()
        .map(|d| d.exponent())
        .min()
        .unwrap_or(0)
        .min(0);
    let unit = BigInt::one() << ((-e) as usize);
    let [a2s, a3s, b1s, b2s] = [a2, a3, b1, b2].map(|d| d.scaled_mantissa(e));

    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in (0..m).rev() {
        let jj = BigInt::from(j);
        let shift = &jj * &unit;
        let q = (&b1s + &shift) * (&b2s + &shift) * (&jj + 1u32);
        if q.is_zero() {
            return Err(domain(format!(
                "denominator parameter reaches zero at term {j} before termination"
            )));
        }
        let p = (BigInt::from(j) - BigInt::from(m)) * (&a2s + &shift) * (&a3s + &shift);
        // 1 + (p/q)(num/den) = (q den + p num) / (q den)
        num = &q * &den + p * num;
        den *= q;
    }
    Ok(Rational::new(num, den))
}
