use std::f64::consts::{LN_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::orthopoly::{jacobi_eval_real, JacobiParams};
use crate::scalar::exact::Dyadic;
use crate::scalar::{hyp3f2_terminating_exact, log_gamma, log_pochhammer, LogScaled};

/// Largest degree for which coefficient tables are built. Beyond it
/// `d_{n,n} ~ 2^{n+a+b} / sqrt(pi n)` approaches the overflow threshold.
pub const MAX_DEGREE: u32 = 512;

/// How a [`CoefficientTable`] was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "explicit-3F2")]
    Explicit3F2,
    #[serde(rename = "recurrence")]
    Recurrence,
    #[serde(rename = "transform-oracle")]
    TransformOracle,
    #[serde(rename = "gegenbauer-closed")]
    GegenbauerClosed,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Explicit3F2 => "explicit-3F2",
            Method::Recurrence => "recurrence",
            Method::TransformOracle => "transform-oracle",
            Method::GegenbauerClosed => "gegenbauer-closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "explicit-3F2" | "explicit" => Ok(Method::Explicit3F2),
            "recurrence" => Ok(Method::Recurrence),
            "transform-oracle" | "transform" => Ok(Method::TransformOracle),
            "gegenbauer-closed" => Ok(Method::GegenbauerClosed),
            other => Err(domain(format!("unknown coefficient method {other:?}"))),
        }
    }
}

/// The coefficients `d_{0,n}, ..., d_{n,n}` of
/// `P_n^{(a,b)}((u + 1/u)/2) = sum_{k=-n}^{n} d_{|k|,n} u^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    n: u32,
    params: JacobiParams,
    d: Vec<f64>,
    method: Method,
}

impl CoefficientTable {
    /// Wraps precomputed coefficients; `d` must have length `n + 1`.
    pub fn from_parts(params: JacobiParams, d: Vec<f64>, method: Method) -> Result<Self> {
        if d.is_empty() {
            return Err(domain("a coefficient table needs at least d_0"));
        }
        let n = u32::try_from(d.len() - 1).map_err(|_| domain("table too long"))?;
        check_degree(n)?;
        Ok(CoefficientTable {
            n,
            params,
            d,
            method,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn params(&self) -> JacobiParams {
        self.params
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// `d_0, ..., d_n`.
    pub fn d(&self) -> &[f64] {
        &self.d
    }

    pub fn max_abs(&self) -> f64 {
        self.d.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest entrywise difference to `other`, relative to the larger `max|d|`.
    pub fn relative_distance(&self, other: &CoefficientTable) -> f64 {
        assert_eq!(self.n, other.n, "tables of different degree");
        let scale = self.max_abs().max(other.max_abs());
        let diff = self
            .d
            .iter()
            .zip(&other.d)
            .fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()));
        if scale == 0.0 {
            diff
        } else {
            diff / scale
        }
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::DegreeTooLarge { n, max: MAX_DEGREE })
    } else {
        Ok(())
    }
}

/// Coefficients from the explicit terminating `3F2` representation
/// `d_k = (n+a+b+1)_k (k+a+1)_{n-k} / ((n-k)! 4^k k!)
///        * 3F2(k-n, n+k+a+b+1, k+1/2; k+a+1, 2k+1; 1)`.
///
/// The hypergeometric factor is summed exactly, the prefactor in log space.
pub fn coeffs_explicit(p: JacobiParams, n: u32) -> Result<CoefficientTable> {
    check_degree(n)?;
    let s = p.sum();
    let nf = f64::from(n);
    let alpha = Dyadic::from_f64(p.alpha);
    let upper = &alpha + &Dyadic::from_f64(p.beta);
    let mut d = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let kf = f64::from(k);
        let log_pre = log_pochhammer(nf + s + 1.0, k).log_magnitude
            + log_pochhammer(kf + p.alpha + 1.0, n - k).log_magnitude
            - log_gamma(nf - kf + 1.0)?
            - log_gamma(kf + 1.0)?
            - 2.0 * kf * LN_2;
        let a2 = &upper + &Dyadic::from_int(i64::from(n + k + 1));
        let a3 = Dyadic::from_f64(kf + 0.5);
        let b1 = &alpha + &Dyadic::from_int(i64::from(k + 1));
        let b2 = Dyadic::from_int(i64::from(2 * k + 1));
        let f = hyp3f2_terminating_exact(n - k, &a2, &a3, &b1, &b2)?;
        let value = LogScaled::new(log_pre, 1) * f.to_log_scaled();
        d.push(value.to_f64());
    }
    CoefficientTable::from_parts(p, d, Method::Explicit3F2)
}

/// Coefficients from the downward three-term recurrence in `k`, started at
/// `d_{n,n} = (n+a+b+1)_n / (4^n n!)` and
/// `d_{n-1,n} = (a-b) (n+a+b+1)_{n-1} / (2^{2n-1} (n-1)!)`.
pub fn coeffs_recurrence(p: JacobiParams, n: u32) -> Result<CoefficientTable> {
    check_degree(n)?;
    if n == 0 {
        return CoefficientTable::from_parts(p, vec![1.0], Method::Recurrence);
    }
    let (a, b) = (p.alpha, p.beta);
    let s = a + b;
    let nf = f64::from(n);
    let mut d = vec![0.0; n as usize + 1];
    let top = log_pochhammer(nf + s + 1.0, n) / log_pochhammer(1.0, n);
    d[n as usize] = top.scale_pow2(-2.0 * nf).to_f64();
    let next = log_pochhammer(nf + s + 1.0, n - 1) / log_pochhammer(1.0, n - 1);
    d[n as usize - 1] = (a - b) * next.scale_pow2(1.0 - 2.0 * nf).to_f64();
    let big = nf * (nf + s + 1.0);
    for k in (0..n.saturating_sub(1)).rev() {
        let kf = f64::from(k);
        let k2 = kf + 2.0;
        let num = 2.0 * (a - b) * (kf + 1.0) * d[k as usize + 1]
            + (big - k2 * k2 + (s + 1.0) * k2) * d[k as usize + 2];
        d[k as usize] = num / (big - kf * kf - (s + 1.0) * kf);
    }
    CoefficientTable::from_parts(p, d, Method::Recurrence)
}

/// Closed form for `a = b`:
/// `d_k = 2^{2a} Gamma(n+a+1) Gamma((k+n+1)/2+a) (a+1/2)_{(n-k)/2}
///        / (sqrt(pi) Gamma(n+2a+1) Gamma((k+n)/2+1) ((n-k)/2)!)`
/// for even `n - k`, and 0 otherwise.
pub fn coeffs_gegenbauer_closed(p: JacobiParams, n: u32) -> Result<CoefficientTable> {
    check_degree(n)?;
    if !p.is_gegenbauer() {
        return Err(domain(format!(
            "the closed form needs alpha = beta, got ({}, {})",
            p.alpha, p.beta
        )));
    }
    if n == 0 {
        return CoefficientTable::from_parts(p, vec![1.0], Method::GegenbauerClosed);
    }
    let a = p.alpha;
    let nf = f64::from(n);
    let common = 2.0 * a * LN_2 - 0.5 * PI.ln() + log_gamma(nf + a + 1.0)?
        - log_gamma(nf + 2.0 * a + 1.0)?;
    let mut d = vec![0.0; n as usize + 1];
    for k in (0..=n).rev().step_by(2) {
        let j = (n - k) / 2;
        let kf = f64::from(k);
        let log = common + log_gamma((kf + nf + 1.0) / 2.0 + a)?
            - log_gamma((kf + nf) / 2.0 + 1.0)?
            - log_gamma(f64::from(j) + 1.0)?;
        d[k as usize] = (LogScaled::new(log, 1) * log_pochhammer(a + 0.5, j)).to_f64();
    }
    CoefficientTable::from_parts(p, d, Method::GegenbauerClosed)
}

/// Coefficients recovered from samples as
/// `d_k = (1/pi) int_0^pi P_n(cos t) cos(k t) dt`,
/// by the midpoint rule on `m` nodes. The rule is exact once `m > n`; at
/// least `4n` nodes are required.
pub fn coeffs_transform_oracle(p: JacobiParams, n: u32, m: usize) -> Result<CoefficientTable> {
    check_degree(n)?;
    if m < 4 * n as usize || m == 0 {
        return Err(domain(format!(
            "the transform needs at least 4n = {} nodes, got {m}",
            4 * n
        )));
    }
    let mut d = vec![0.0; n as usize + 1];
    let mf = m as f64;
    for j in 0..m {
        let t = (j as f64 + 0.5) * PI / mf;
        let v = jacobi_eval_real(p, n, t.cos());
        for (k, dk) in d.iter_mut().enumerate() {
            *dk += v * (k as f64 * t).cos();
        }
    }
    for dk in &mut d {
        *dk /= mf;
    }
    CoefficientTable::from_parts(p, d, Method::TransformOracle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(a: f64, b: f64) -> JacobiParams {
        JacobiParams::new(a, b).unwrap()
    }

    #[test]
    fn legendre_degree_two() {
        let want = [0.25, 0.0, 0.375];
        let p = JacobiParams::legendre();
        for t in [
            coeffs_explicit(p, 2).unwrap(),
            coeffs_recurrence(p, 2).unwrap(),
            coeffs_gegenbauer_closed(p, 2).unwrap(),
            coeffs_transform_oracle(p, 2, 8).unwrap(),
        ] {
            for (got, want) in t.d().iter().zip(want) {
                assert!((got - want).abs() < 1e-14, "{}: {:?}", t.method(), t.d());
            }
        }
    }

    #[test]
    fn top_coefficient() {
        let t = coeffs_explicit(params(1.0, 0.0), 2).unwrap();
        assert_relative_eq!(t.d()[2], 0.625, max_relative = 1e-14);
        let r = coeffs_recurrence(params(1.0, 0.0), 2).unwrap();
        assert_relative_eq!(r.d()[2], 0.625, max_relative = 1e-14);
    }

    #[test]
    fn first_kind_is_single_mode() {
        let p = JacobiParams::cheb_first();
        let t = coeffs_explicit(p, 3).unwrap();
        assert!(t.d()[3] > 0.0);
        assert_eq!(&t.d()[1..3], &[0.0, 0.0]);
        // P_5^{(-1/2,-1/2)} = T_5 (1/2)_5 / 5!, so d_5 is half that factor
        let o = coeffs_transform_oracle(p, 5, 20).unwrap();
        let scale = 0.5 * 1.5 * 2.5 * 3.5 * 4.5 / 120.0;
        assert_relative_eq!(o.d()[5], 0.5 * scale, max_relative = 1e-13);
        for &v in &o.d()[..5] {
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn degree_zero() {
        let p = params(0.3, 1.7);
        for t in [
            coeffs_explicit(p, 0).unwrap(),
            coeffs_recurrence(p, 0).unwrap(),
            coeffs_transform_oracle(p, 0, 4).unwrap(),
        ] {
            assert_eq!(t.d(), &[1.0]);
        }
    }

    #[test]
    fn symmetric_case_has_vanishing_odd_offsets() {
        for n in 1..20 {
            let r = coeffs_recurrence(params(0.8, 0.8), n).unwrap();
            assert_eq!(r.d()[n as usize - 1], 0.0);
        }
        // U_4 = u^4 + u^2 + 1 + u^-2 + u^-4 and U_4 = P_4^{(1/2,1/2)} (3/2)_4 / (1/2)_4 ... up to
        // a constant, so the even entries are all equal.
        let r = coeffs_recurrence(JacobiParams::cheb_second(), 4).unwrap();
        assert_relative_eq!(r.d()[0], r.d()[2], max_relative = 1e-14);
        assert_relative_eq!(r.d()[2], r.d()[4], max_relative = 1e-14);
        assert_eq!((r.d()[1], r.d()[3]), (0.0, 0.0));
    }

    #[test]
    fn cross_method_examples() {
        let p = params(0.7, -0.3);
        let e = coeffs_explicit(p, 12).unwrap();
        let r = coeffs_recurrence(p, 12).unwrap();
        for (a, b) in e.d().iter().zip(r.d()) {
            assert_relative_eq!(a, b, max_relative = 1e-11);
        }
        let g = coeffs_gegenbauer_closed(params(1.0, 1.0), 3).unwrap();
        let r = coeffs_recurrence(params(1.0, 1.0), 3).unwrap();
        assert!(g.relative_distance(&r) < 1e-12);
        let p = params(2.0, 0.5);
        let e = coeffs_explicit(p, 10).unwrap();
        let o = coeffs_transform_oracle(p, 10, 40).unwrap();
        for (a, b) in e.d().iter().zip(o.d()) {
            assert_relative_eq!(a, b, max_relative = 1e-10);
        }
    }

    #[test]
    fn gegenbauer_closed_matches_explicit() {
        for &a in &[-0.9, -0.7, -0.5, 0.0, 0.5, 1.0, 2.5] {
            for n in 0..=24 {
                let g = coeffs_gegenbauer_closed(params(a, a), n).unwrap();
                let e = coeffs_explicit(params(a, a), n).unwrap();
                assert!(g.relative_distance(&e) < 1e-12, "a {a} n {n}");
                for k in 0..=n {
                    if (n - k) % 2 == 1 {
                        assert_eq!(g.d()[k as usize], 0.0);
                        assert!(e.d()[k as usize].abs() <= 1e-14 * e.max_abs());
                    }
                }
            }
        }
        assert!(coeffs_gegenbauer_closed(params(0.5, 0.4), 3).is_err());
    }

    #[test]
    fn preconditions() {
        let p = JacobiParams::legendre();
        assert!(coeffs_transform_oracle(p, 8, 31).is_err());
        assert!(matches!(
            coeffs_recurrence(p, 513),
            Err(Error::DegreeTooLarge { n: 513, max: 512 })
        ));
        assert!(coeffs_recurrence(p, 512).unwrap().d().iter().all(|v| v.is_finite()));
    }

    #[test]
    fn method_names_round_trip() {
        for m in [
            Method::Explicit3F2,
            Method::Recurrence,
            Method::TransformOracle,
            Method::GegenbauerClosed,
        ] {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
            assert_eq!(serde_json::to_string(&m).unwrap(), format!("\"{m}\""));
        }
    }
}
