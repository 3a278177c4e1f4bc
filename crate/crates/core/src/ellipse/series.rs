use std::f64::consts::PI;

use num_complex::Complex64;

use super::{CoefficientTable, EllipsePoint};

/// `sum_{k=-n}^{n} d_{|k|} u^k`, accumulated from `k = -n` upwards so the
/// small terms enter first when `rho > 1`.
pub fn eval_ellipse_series(t: &CoefficientTable, pt: &EllipsePoint) -> Complex64 {
    let n = t.n() as i32;
    let d = t.d();
    (-n..=n).fold(Complex64::new(0.0, 0.0), |acc, k| {
        acc + d[k.unsigned_abs() as usize] * pt.u_pow(k)
    })
}

/// `sqrt(pi n) 2^{-a-b} sum_{k=-n}^{n} d_{|k|} u^{k-n}`, the polynomial
/// divided by its growth `u^n`, evaluated by Horner's rule in `1/u` so no
/// power of `u` above 1 in modulus is ever formed.
pub fn eval_ellipse_series_scaled(t: &CoefficientTable, pt: &EllipsePoint) -> Complex64 {
    let n = t.n() as usize;
    let d = t.d();
    let w = pt.u_pow(-1);
    // coefficient of w^j is d_{|n-j|}, j = 0..2n
    let mut acc = Complex64::new(d[n], 0.0);
    for j in (0..2 * n).rev() {
        acc = acc * w + d[n.abs_diff(j)];
    }
    let s = t.params().sum();
    let scale = (PI * n as f64).sqrt() * (-s * std::f64::consts::LN_2).exp();
    acc * scale
}
