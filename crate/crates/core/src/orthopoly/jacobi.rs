use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::JacobiParams;
use crate::error::{domain, Error, Result};
use crate::scalar::exact::Dyadic;
use crate::scalar::LogScaled;
use crate::search::golden_max;

/// Largest degree accepted by [`jacobi_eval_def_sum`].
pub const DEF_SUM_MAX_DEGREE: u32 = 64;

/// Arithmetic shared by real and complex evaluation.
trait Field:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Mul<f64, Output = Self>
{
    fn real(x: f64) -> Self;
}

impl Field for f64 {
    fn real(x: f64) -> Self {
        x
    }
}

impl Field for Complex64 {
    fn real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
}

/// `(P_n(x), P_{n-1}(x))` from the three-term recurrence, with `P_{-1} = 0`.
fn recurrence<T: Field>(p: JacobiParams, n: u32, x: T) -> (T, T) {
    let (a, b) = (p.alpha, p.beta);
    let s = a + b;
    if n == 0 {
        return (T::real(1.0), T::real(0.0));
    }
    let mut prev = T::real(1.0);
    let mut cur = x * (0.5 * (s + 2.0)) + T::real(0.5 * (a - b));
    for k in 1..n {
        let k = f64::from(k);
        let c = 2.0 * k + s;
        let inv = 1.0 / (2.0 * (k + 1.0) * (k + s + 1.0) * c);
        let lin = (c + 1.0) * c * (c + 2.0);
        let shift = (c + 1.0) * (a * a - b * b);
        let back = 2.0 * (k + a) * (k + b) * (c + 2.0);
        let next = ((x * lin + T::real(shift)) * cur - prev * back) * inv;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// `P_n^{(alpha, beta)}(z)` by the three-term recurrence.
pub fn jacobi_eval(p: JacobiParams, n: u32, z: Complex64) -> Complex64 {
    recurrence(p, n, z).0
}

/// Real-argument version of [`jacobi_eval`].
pub fn jacobi_eval_real(p: JacobiParams, n: u32, x: f64) -> f64 {
    recurrence(p, n, x).0
}

/// `(P_n(x), P_{n-1}(x))` at a real point, as needed for derivatives.
pub fn jacobi_eval_with_previous(p: JacobiParams, n: u32, x: f64) -> (f64, f64) {
    recurrence(p, n, x)
}

type ComplexDyadic = (Dyadic, Dyadic);

fn cmul(a: &ComplexDyadic, b: &ComplexDyadic) -> ComplexDyadic {
    (
        &(&a.0 * &b.0) - &(&a.1 * &b.1),
        &(&a.0 * &b.1) + &(&a.1 * &b.0),
    )
}

fn powers(base: &ComplexDyadic, n: u32) -> Vec<ComplexDyadic> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push((Dyadic::from_int(1), Dyadic::zero()));
    for k in 0..n as usize {
        let next = cmul(&out[k], base);
        out.push(next);
    }
    out
}

/// `P_n^{(alpha, beta)}(z)` from the explicit double-binomial sum
/// `2^{-n} sum_k C(n+alpha, n-k) C(n+beta, k) (z-1)^k (z+1)^{n-k}`.
///
/// The sum is carried out exactly on the binary values of `alpha`, `beta`
/// and `z` and rounded once, so it serves as a reference for
/// [`jacobi_eval`] even where the terms cancel heavily.
pub fn jacobi_eval_def_sum(p: JacobiParams, n: u32, z: Complex64) -> Result<Complex64> {
    if n > DEF_SUM_MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            n,
            max: DEF_SUM_MAX_DEGREE,
        });
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain(format!("z must be finite, got {z}")));
    }
    let one = Dyadic::from_int(1);
    let x = Dyadic::from_f64(z.re);
    let y = Dyadic::from_f64(z.im);
    let minus = powers(&(&x - &one, y.clone()), n);
    let plus = powers(&(&x + &one, y), n);
    let alpha = Dyadic::from_f64(p.alpha);
    let beta = Dyadic::from_f64(p.beta);

    // C(n+a, n-k) C(n+b, k) = C(n, k) (a+k+1)_{n-k} (b+n-k+1)_k / n!
    let mut re = Dyadic::zero();
    let mut im = Dyadic::zero();
    let mut binom: i128 = 1;
    for k in 0..=n {
        let mut c = Dyadic::from_int(binom as i64);
        for i in 0..(n - k) {
            c = &c * &(&alpha + &Dyadic::from_int(i64::from(k + 1 + i)));
        }
        for i in 0..k {
            c = &c * &(&beta + &Dyadic::from_int(i64::from(n - k + 1 + i)));
        }
        let term = cmul(&minus[k as usize], &plus[(n - k) as usize]);
        re = &re + &(&c * &term.0);
        im = &im + &(&c * &term.1);
        binom = binom * i128::from(n - k) / i128::from(k + 1);
    }
    let mut den = BigInt::from(1) << (n as usize);
    for i in 2..=n {
        den *= i;
    }
    Ok(Complex64::new(re.div_to_f64(&den), im.div_to_f64(&den)))
}

/// Leading coefficient `k_n = Gamma(2n+a+b+1) / (2^n n! Gamma(n+a+b+1))`.
///
/// Written as `(n+a+b+1)_n / (2^n n!)` and summed in log space.
pub fn jacobi_leading_coeff(p: JacobiParams, n: u32) -> LogScaled {
    let s = p.sum();
    let nf = f64::from(n);
    let log = (0..n)
        .map(|i| {
            let i = f64::from(i);
            ((nf + s + 1.0 + i) / (2.0 * (i + 1.0))).ln()
        })
        .sum();
    LogScaled::new(log, 1)
}

/// Maximum of `|P_n|` over `[-1, 1]` and every point attaining it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalMax {
    pub value: f64,
    pub locations: Vec<f64>,
}

const INTERVAL_GRID: usize = 100_000;
const INTERVAL_TIE: f64 = 1e-12;

/// Maximum of `|P_n^{(alpha, beta)}(x)|` for `x` in `[-1, 1]`.
///
/// When `q = max(alpha, beta) >= -1/2` the maximum is `C(n+q, n)` at the
/// endpoint belonging to the larger parameter (both endpoints when they are
/// equal). Otherwise it is interior and found by a dense grid followed by
/// golden-section refinement; locations whose values tie to `1e-12` are all
/// reported.
pub fn jacobi_interval_max(p: JacobiParams, n: u32) -> Result<IntervalMax> {
    if n == 0 {
        return Err(domain("interval maximum needs n >= 1"));
    }
    let q = p.alpha.max(p.beta);
    if q >= -0.5 {
        let value = (1..=n)
            .map(|i| (q + f64::from(i)) / f64::from(i))
            .product();
        let locations = if p.alpha == p.beta {
            vec![-1.0, 1.0]
        } else if p.alpha > p.beta {
            vec![1.0]
        } else {
            vec![-1.0]
        };
        return Ok(IntervalMax { value, locations });
    }

    let f = |x: f64| jacobi_eval_real(p, n, x).abs();
    let h = 2.0 / INTERVAL_GRID as f64;
    let xs: Vec<f64> = (0..=INTERVAL_GRID)
        .map(|i| (-1.0 + h * i as f64).min(1.0))
        .collect();
    let vals: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut candidates = Vec::new();
    for i in 0..xs.len() {
        let left = if i > 0 { vals[i - 1] } else { f64::NEG_INFINITY };
        let right = vals.get(i + 1).copied().unwrap_or(f64::NEG_INFINITY);
        if vals[i] >= left && vals[i] >= right {
            let lo = xs[i.saturating_sub(1)];
            let hi = xs[(i + 1).min(xs.len() - 1)];
            candidates.push(golden_max(f, lo, hi, 1e-12));
        }
    }
    let value = candidates
        .iter()
        .map(|c| c.1)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut locations: Vec<f64> = candidates
        .iter()
        .filter(|c| c.1 >= value * (1.0 - INTERVAL_TIE))
        .map(|c| c.0)
        .collect();
    locations.sort_by(f64::total_cmp);
    locations.dedup_by(|a, b| (*a - *b).abs() < 1e-8);
    Ok(IntervalMax { value, locations })
}
