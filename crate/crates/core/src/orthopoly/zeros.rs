use std::f64::consts::PI;

use super::{jacobi_eval_with_previous, GegenbauerParam, JacobiParams};
use crate::error::{domain, Error, Result};
use crate::search::bisect;

/// `(P_n(x), P_n'(x))` for `-1 < x < 1`.
fn value_and_derivative(p: JacobiParams, n: u32, x: f64) -> (f64, f64) {
    let (pn, pm) = jacobi_eval_with_previous(p, n, x);
    let (a, b) = (p.alpha, p.beta);
    let nf = f64::from(n);
    let c = 2.0 * nf + a + b;
    let d = (nf * ((a - b) - c * x) * pn + 2.0 * (nf + a) * (nf + b) * pm) / (c * (1.0 - x * x));
    (pn, d)
}

fn newton_with_deflation(p: JacobiParams, n: u32) -> Option<Vec<f64>> {
    let nf = f64::from(n);
    let mut roots: Vec<f64> = Vec::with_capacity(n as usize);
    for k in 1..=n {
        let mut x = ((f64::from(k) - 0.5) * PI / nf).cos();
        let mut converged = false;
        for _ in 0..100 {
            let (f, df) = value_and_derivative(p, n, x);
            if f == 0.0 {
                converged = true;
                break;
            }
            let corr = f / df;
            let deflate: f64 = roots.iter().map(|r| 1.0 / (x - r)).sum();
            let dx = corr / (1.0 - corr * deflate);
            x -= dx;
            if !x.is_finite() || x.abs() >= 1.0 {
                return None;
            }
            if dx.abs() <= 1e-15 {
                converged = true;
                break;
            }
        }
        if !converged {
            return None;
        }
        roots.push(x);
    }
    Some(roots)
}

fn bracketed(p: JacobiParams, n: u32) -> Result<Vec<f64>> {
    let f = |x: f64| jacobi_eval_with_previous(p, n, x).0;
    let mut m = 64 * n as usize;
    for _ in 0..6 {
        // cosine spacing resolves the clustering of zeros at the endpoints
        let xs: Vec<f64> = (0..=m).map(|i| (PI * i as f64 / m as f64).cos()).collect();
        let mut roots = Vec::new();
        for w in xs.windows(2) {
            let (hi, lo) = (w[0], w[1]);
            let (fh, fl) = (f(hi), f(lo));
            if fh == 0.0 && hi < 1.0 {
                roots.push(hi);
            } else if fh.signum() != fl.signum() && fl != 0.0 {
                roots.push(bisect(f, lo, hi, 1e-16)?);
            }
        }
        if roots.len() == n as usize {
            return Ok(roots);
        }
        m *= 4;
    }
    Err(Error::Invariant(format!(
        "could not isolate the {n} zeros of P_{n}^({}, {})",
        p.alpha, p.beta
    )))
}

fn acceptable(roots: &[f64], n: u32) -> bool {
    roots.len() == n as usize
        && roots.iter().all(|x| x.abs() < 1.0)
        && roots.windows(2).all(|w| w[0] - w[1] > 1e-12)
}

/// Zeros of `P_n^{(alpha, beta)}` in decreasing order.
///
/// Newton's method with deflation from the Chebyshev zeros, falling back to
/// bisection on a sign-change scan. For `alpha = beta` the result is made
/// exactly symmetric about 0.
pub fn jacobi_zeros(p: JacobiParams, n: u32) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(domain("zeros need n >= 1"));
    }
    let mut roots = match newton_with_deflation(p, n) {
        Some(mut r) => {
            r.sort_by(|a, b| b.total_cmp(a));
            r
        }
        None => Vec::new(),
    };
    if !acceptable(&roots, n) {
        roots = bracketed(p, n)?;
    }
    if !acceptable(&roots, n) {
        return Err(Error::Invariant(format!(
            "zeros of P_{n}^({}, {}) are not simple and interior",
            p.alpha, p.beta
        )));
    }
    if p.is_gegenbauer() {
        let len = roots.len();
        for j in 0..len / 2 {
            let x = 0.5 * (roots[j] - roots[len - 1 - j]);
            roots[j] = x;
            roots[len - 1 - j] = -x;
        }
        if len % 2 == 1 {
            roots[len / 2] = 0.0;
        }
    }
    Ok(roots)
}

/// Zeros of `C_n^lambda` in decreasing order.
pub fn gegenbauer_zeros(g: GegenbauerParam, n: u32) -> Result<Vec<f64>> {
    jacobi_zeros(g.jacobi(), n)
}
