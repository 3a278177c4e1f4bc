use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use super::{rho_star, sample_extremum, CertMethod, ExtremumKind, ExtremumReport, SamplerConfig};
use crate::ellipse::{BernsteinEllipse, EllipsePoint};
use crate::error::{domain, Result};
use crate::orthopoly::{cheb_u_at, gegenbauer_eval, jacobi_eval, GegenbauerParam, JacobiParams};

/// `rho_2* = (sqrt 2 + sqrt 6)/2`, the radius from which minor-axis minima
/// of Gegenbauer polynomials are guaranteed.
pub const RHO2_STAR: f64 = 1.931_851_652_578_136_6;

fn closed(
    kind: ExtremumKind,
    e: BernsteinEllipse,
    value: f64,
    thetas: &[f64],
    tag: &str,
) -> ExtremumReport {
    ExtremumReport {
        kind,
        value,
        locations: thetas.iter().map(|&t| e.point(t)).collect(),
        method: CertMethod::ClosedForm,
        conditions_met: true,
        theorem_tag: tag.into(),
        rho: e.rho(),
        resolution: 0.0,
        notes: Vec::new(),
    }
}

fn fallback(mut r: ExtremumReport, tag: &str) -> ExtremumReport {
    r.conditions_met = false;
    r.theorem_tag = tag.into();
    r
}

const MINOR_AXIS: [f64; 2] = [FRAC_PI_2, 3.0 * FRAC_PI_2];

/// Maximum of `|P_n^{(a,b)}|` over the ellipse.
///
/// Closed form at the right end of the major axis when `a > b` and
/// `a + b >= -1`, the left end when `a < b` and `a + b >= -1`, both ends
/// when `a = b >= -1/2` (the `2n` points `k pi / n` for `a = b = -1/2`).
/// Otherwise sampled.
pub fn max_on_ellipse(
    p: JacobiParams,
    n: u32,
    e: BernsteinEllipse,
    cfg: &SamplerConfig,
) -> Result<ExtremumReport> {
    if n == 0 {
        return Err(domain("n must be at least 1"));
    }
    let a = e.semi_major();
    let at = |x: f64| jacobi_eval(p, n, Complex64::new(x, 0.0)).norm();
    let s = p.sum();
    let report = if p.alpha > p.beta && s >= -1.0 {
        closed(ExtremumKind::Max, e, at(a), &[0.0], "max-right-endpoint")
    } else if p.alpha < p.beta && s >= -1.0 {
        closed(ExtremumKind::Max, e, at(-a), &[PI], "max-left-endpoint")
    } else if p.is_cheb_first() {
        let thetas: Vec<f64> = (0..2 * n).map(|k| f64::from(k) * PI / f64::from(n)).collect();
        closed(ExtremumKind::Max, e, at(a), &thetas, "max-chebyshev-first")
    } else if p.is_gegenbauer() && p.alpha >= -0.5 {
        closed(ExtremumKind::Max, e, at(a), &[0.0, PI], "max-both-endpoints")
    } else {
        let r = sample_extremum(|pt| jacobi_eval(p, n, pt.z()), e, ExtremumKind::Max, cfg);
        fallback(r, "max-outside-hypotheses")
    };
    Ok(report)
}

/// Minimum of `|T_n|`: `(rho^n - rho^{-n})/2` at `theta = (2k+1) pi / (2n)`.
pub fn min_cheb_t(n: u32, e: BernsteinEllipse) -> Result<ExtremumReport> {
    if n == 0 || e.rho() <= 1.0 {
        return Err(domain("min of T_n needs n >= 1 and rho > 1"));
    }
    let k = n as i32;
    let value = 0.5 * (e.rho().powi(k) - e.rho().powi(-k));
    let thetas: Vec<f64> = (0..2 * n)
        .map(|j| f64::from(2 * j + 1) * PI / f64::from(2 * n))
        .collect();
    Ok(closed(ExtremumKind::Min, e, value, &thetas, "min-chebyshev-first"))
}

/// Whether `theta`, folded into `[0, pi/2]` by the symmetries of the
/// ellipse, lies in `(n/(n+1) pi/2, pi/2)`.
pub fn remark_interval_contains(n: u32, theta: f64) -> bool {
    let t = theta.rem_euclid(PI);
    let folded = if t > FRAC_PI_2 { PI - t } else { t };
    let lo = f64::from(n) / f64::from(n + 1) * FRAC_PI_2;
    folded > lo && folded < FRAC_PI_2
}

/// Minimum of `|U_n|`.
///
/// Odd `n`: `(rho^{n+1} - rho^{-n-1})/(rho + 1/rho)` at the minor-axis ends.
/// Even `n` with `rho >= rho_n*`: `(rho^{n+1} + rho^{-n-1})/(rho + 1/rho)`
/// there. Otherwise sampled; the report notes whether the minimizer lies in
/// `(n/(n+1) pi/2, pi/2)` up to symmetry.
pub fn min_cheb_u(n: u32, e: BernsteinEllipse, cfg: &SamplerConfig) -> Result<ExtremumReport> {
    if n == 0 || e.rho() <= 1.0 {
        return Err(domain("min of U_n needs n >= 1 and rho > 1"));
    }
    let rho = e.rho();
    let k = n as i32 + 1;
    let den = rho + 1.0 / rho;
    if n % 2 == 1 {
        let value = (rho.powi(k) - rho.powi(-k)) / den;
        return Ok(closed(ExtremumKind::Min, e, value, &MINOR_AXIS, "min-chebyshev-second-odd"));
    }
    let critical = rho_star(n)?;
    if rho >= critical.rho_star {
        let value = (rho.powi(k) + rho.powi(-k)) / den;
        return Ok(closed(ExtremumKind::Min, e, value, &MINOR_AXIS, "min-chebyshev-second-even"));
    }
    let mut r = sample_extremum(|pt| cheb_u_at(n, pt), e, ExtremumKind::Min, cfg);
    let inside = r.locations.iter().all(|p| remark_interval_contains(n, p.theta));
    r.notes.push(format!(
        "rho < rho_n* = {}; minimizers {} the interval (n/(n+1) pi/2, pi/2) up to symmetry",
        critical.rho_star,
        if inside { "lie in" } else { "do not all lie in" }
    ));
    Ok(fallback(r, "min-chebyshev-second-below-critical"))
}

/// Minimum of `|C_n^lambda|`.
///
/// Closed form at the minor-axis ends when `n = 1`, or `rho >= rho_2*` and
/// either `lambda > 1` or `0 < lambda < 1` with odd `n`. `lambda = 1` is
/// delegated to [`min_cheb_u`]. Everything else is sampled.
pub fn min_gegenbauer(
    g: GegenbauerParam,
    n: u32,
    e: BernsteinEllipse,
    cfg: &SamplerConfig,
) -> Result<ExtremumReport> {
    if n == 0 || e.rho() <= 1.0 {
        return Err(domain("min of C_n needs n >= 1 and rho > 1"));
    }
    let l = g.lambda;
    if l == 1.0 {
        return min_cheb_u(n, e, cfg);
    }
    let axis_value = gegenbauer_eval(g, n, e.point(FRAC_PI_2).z()).norm();
    if n == 1 {
        return Ok(closed(ExtremumKind::Min, e, axis_value, &MINOR_AXIS, "min-gegenbauer-linear"));
    }
    let applies = e.rho() >= RHO2_STAR && (l > 1.0 || (l > 0.0 && l < 1.0 && n % 2 == 1));
    if applies {
        return Ok(closed(ExtremumKind::Min, e, axis_value, &MINOR_AXIS, "min-gegenbauer-minor-axis"));
    }
    let r = sample_extremum(|pt| gegenbauer_eval(g, n, pt.z()), e, ExtremumKind::Min, cfg);
    Ok(fallback(r, "min-gegenbauer-outside-hypotheses"))
}

/// Maximum of `|(z^2 - s^2)/(z^2 - t^2)|` over the ellipse for `0 < t < s < 1`,
/// at the minor-axis ends once `rho >= rho_2*`.
pub fn rational_modulus_max(
    s: f64,
    t: f64,
    e: BernsteinEllipse,
    cfg: &SamplerConfig,
) -> Result<ExtremumReport> {
    if !(0.0 < t && t < s && s < 1.0) {
        return Err(domain(format!("need 0 < t < s < 1, got s = {s}, t = {t}")));
    }
    if e.rho() <= 1.0 {
        return Err(domain("rho must exceed 1"));
    }
    let f = |pt: &EllipsePoint| {
        let z2 = pt.z() * pt.z();
        (z2 - s * s) / (z2 - t * t)
    };
    let mut r = if e.rho() >= RHO2_STAR {
        let b2 = e.semi_minor().powi(2);
        let value = (b2 + s * s) / (b2 + t * t);
        closed(ExtremumKind::Max, e, value, &MINOR_AXIS, "rational-max-minor-axis")
    } else {
        fallback(
            sample_extremum(f, e, ExtremumKind::Max, cfg),
            "rational-max-outside-hypotheses",
        )
    };
    if s - t < 1e-6 || r.value - 1.0 < 1e-9 {
        r.notes.push("near-degenerate: the ratio is within 1e-9 of 1".into());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ellipse::angle_distance;
    use crate::orthopoly::{cheb_t, jacobi_interval_max};

    fn e(rho: f64) -> BernsteinEllipse {
        BernsteinEllipse::new(rho).unwrap()
    }

    fn cfg() -> SamplerConfig {
        SamplerConfig::default()
    }

    fn same_set(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().all(|x| b.iter().any(|y| angle_distance(*x, *y) < tol))
    }

    #[test]
    fn rho2_constant() {
        assert!((RHO2_STAR - 0.5 * (2f64.sqrt() + 6f64.sqrt())).abs() <= f64::EPSILON);
    }

    #[test]
    fn maximum_examples() {
        let p = JacobiParams::new(1.0, 0.0).unwrap();
        let r = max_on_ellipse(p, 3, e(1.0), &cfg()).unwrap();
        assert!((r.value - 4.0).abs() < 1e-14);
        assert_eq!(r.thetas(), vec![0.0]);
        assert_eq!(r.value, jacobi_interval_max(p, 3).unwrap().value);
        let r = max_on_ellipse(JacobiParams::legendre(), 2, e(2.0), &cfg()).unwrap();
        assert!((r.value - 1.84375).abs() < 1e-14);
        assert_eq!(r.thetas(), vec![0.0, PI]);
        let q = JacobiParams::new(-0.9, -0.8).unwrap();
        let r = max_on_ellipse(q, 4, e(1.5), &cfg()).unwrap();
        assert_eq!(r.method, CertMethod::Sampled);
        assert!(!r.conditions_met);
    }

    #[test]
    fn closed_maxima_agree_with_sampling() {
        for &(a, b) in &[(1.0, 0.0), (0.0, 1.0), (0.5, 0.5), (-0.5, -0.5), (2.0, -0.9)] {
            let p = JacobiParams::new(a, b).unwrap();
            for n in [1, 4, 7] {
                let ell = e(1.3);
                let c = max_on_ellipse(p, n, ell, &cfg()).unwrap();
                let s = sample_extremum(|pt| jacobi_eval(p, n, pt.z()), ell, ExtremumKind::Max, &cfg());
                assert!((c.value - s.value).abs() <= 1e-9 * c.value);
                assert!(same_set(&c.thetas(), &s.thetas(), 1e-6), "{a} {b} {n}: {:?}", s.thetas());
                for loc in &c.locations {
                    let v = jacobi_eval(p, n, loc.z()).norm();
                    assert!((v - c.value).abs() <= 1e-9 * c.value);
                }
            }
        }
    }

    #[test]
    fn first_kind_minimum() {
        let r = min_cheb_t(3, e(2.0)).unwrap();
        assert!((r.value - 3.9375).abs() < 1e-15);
        assert_eq!(r.locations.len(), 6);
        let r = min_cheb_t(1, e(2.0)).unwrap();
        assert_eq!(r.value, 0.75);
        assert!(same_set(&r.thetas(), &MINOR_AXIS, 1e-15));
        let c = min_cheb_t(4, e(1.5)).unwrap();
        let s = sample_extremum(|pt| cheb_t(4, pt.z()), e(1.5), ExtremumKind::Min, &cfg());
        assert!((c.value - s.value).abs() < 1e-12 * c.value);
    }

    #[test]
    fn second_kind_minimum() {
        let r = min_cheb_u(1, e(2.0), &cfg()).unwrap();
        assert!((r.value - 1.5).abs() < 1e-15);
        let r = min_cheb_u(2, e(2.0), &cfg()).unwrap();
        assert!((r.value - 3.25).abs() < 1e-14);
        assert_eq!(r.method, CertMethod::ClosedForm);
        let r = min_cheb_u(2, e(1.5), &cfg()).unwrap();
        assert_eq!(r.method, CertMethod::Sampled);
        assert!(r.locations.len() > 2);
        for p in &r.locations {
            assert!(remark_interval_contains(2, p.theta));
            let folded = p.theta.rem_euclid(PI);
            let folded = folded.min(PI - folded);
            assert!(folded > PI / 3.0 && folded < PI / 2.0);
        }
    }

    #[test]
    fn interval_folding() {
        assert!(remark_interval_contains(2, 1.2));
        assert!(remark_interval_contains(2, PI - 1.2));
        assert!(remark_interval_contains(2, PI + 1.2));
        assert!(!remark_interval_contains(2, FRAC_PI_2));
        assert!(!remark_interval_contains(2, 0.9));
    }

    #[test]
    fn gegenbauer_minimum() {
        let g = GegenbauerParam::new(2.0).unwrap();
        let r = min_gegenbauer(g, 1, e(2.0), &cfg()).unwrap();
        assert!((r.value - 3.0).abs() < 1e-14);
        let u = GegenbauerParam::new(1.0).unwrap();
        let r = min_gegenbauer(u, 3, e(2.0), &cfg()).unwrap();
        assert!((r.value - 6.375).abs() < 1e-13);
        let g = GegenbauerParam::new(2.5).unwrap();
        let c = min_gegenbauer(g, 6, e(2.0), &cfg()).unwrap();
        assert_eq!(c.method, CertMethod::ClosedForm);
        let s = sample_extremum(|pt| gegenbauer_eval(g, 6, pt.z()), e(2.0), ExtremumKind::Min, &cfg());
        assert!((c.value - s.value).abs() < 1e-10 * c.value);
        let neg = GegenbauerParam::new(-0.3).unwrap();
        let r = min_gegenbauer(neg, 7, e(2.0), &cfg()).unwrap();
        assert!(!r.conditions_met);
    }

    #[test]
    fn rational_factor() {
        let r = rational_modulus_max(0.8, 0.3, e(2.0), &cfg()).unwrap();
        let s = sample_extremum(
            |pt| {
                let z2 = pt.z() * pt.z();
                (z2 - 0.64) / (z2 - 0.09)
            },
            e(2.0),
            ExtremumKind::Max,
            &cfg(),
        );
        assert!((r.value - s.value).abs() < 1e-9 * r.value);
        assert!(same_set(&s.thetas(), &MINOR_AXIS, 1e-6));
        let r = rational_modulus_max(0.3 + 1e-9, 0.3, e(2.0), &cfg()).unwrap();
        assert!(r.notes.iter().any(|n| n.starts_with("near-degenerate")));
        let r = rational_modulus_max(0.9, 0.1, e(1.2), &cfg()).unwrap();
        assert_eq!(r.method, CertMethod::Sampled);
        assert!(rational_modulus_max(0.2, 0.3, e(2.0), &cfg()).is_err());
    }
}
