use std::f64::consts::TAU;

use num_complex::Complex64;

use super::{CertMethod, ExtremumKind, ExtremumReport};
use crate::ellipse::{angle_distance, normalize_angle, BernsteinEllipse, EllipsePoint};
use crate::search::golden_max;

/// Tuning of [`sample_extremum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    /// Number of uniform grid points in `theta`.
    pub grid: usize,
    /// Relative tolerance for treating two refined values as tied.
    pub tie_tol: f64,
    /// Bracket width at which golden-section refinement stops.
    pub theta_tol: f64,
    /// Relative slack when deciding which grid-local extrema to refine.
    pub prefilter: f64,
    /// Cap on the number of refined candidates.
    pub max_candidates: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            grid: 1 << 16,
            tie_tol: 1e-9,
            theta_tol: 1e-12,
            prefilter: 1e-9,
            max_candidates: 4096,
        }
    }
}

impl SamplerConfig {
    pub fn with_grid(grid: usize) -> Self {
        SamplerConfig {
            grid,
            ..Self::default()
        }
    }
}

/// Global extremum of `|f|` over the ellipse.
///
/// `|f|` is sampled on a uniform `theta` grid. Every grid-local extremum
/// whose value, widened by the change to its neighbours, comes within
/// `prefilter` of the best grid value is refined by golden-section search.
/// All refined points tying with the best to `tie_tol`, and to a thousandth
/// of the grid spread of `|f|`, are returned. A
/// function that is constant to 1e-12 on the grid is reported as degenerate
/// with every grid point as a location.
pub fn sample_extremum(
    f: impl Fn(&EllipsePoint) -> Complex64,
    e: BernsteinEllipse,
    kind: ExtremumKind,
    cfg: &SamplerConfig,
) -> ExtremumReport {
    let m = cfg.grid.max(8);
    let h = TAU / m as f64;
    let abs_at = |t: f64| f(&e.point(t)).norm();
    // maximize `score` in both cases
    let sign = match kind {
        ExtremumKind::Max => 1.0,
        ExtremumKind::Min => -1.0,
    };
    let score: Vec<f64> = (0..m).map(|j| sign * abs_at(h * j as f64)).collect();
    let best_grid = score.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let worst_grid = score.iter().copied().fold(f64::INFINITY, f64::min);
    let vmax = best_grid.abs().max(worst_grid.abs());

    let mut report = ExtremumReport {
        kind,
        value: sign * best_grid,
        locations: Vec::new(),
        method: CertMethod::Sampled,
        conditions_met: false,
        theorem_tag: "sampled".into(),
        rho: e.rho(),
        resolution: h,
        notes: Vec::new(),
    };
    if best_grid - worst_grid <= 1e-12 * vmax {
        report.locations = (0..m).map(|j| e.point(h * j as f64)).collect();
        report.resolution = std::f64::consts::PI;
        report
            .notes
            .push("degenerate: |f| is constant to 1e-12 on the grid".into());
        return report;
    }

    let slack = cfg.prefilter * best_grid.abs();
    let mut candidates: Vec<(usize, f64)> = Vec::new();
    for j in 0..m {
        let (l, r) = (score[(j + m - 1) % m], score[(j + 1) % m]);
        let s = score[j];
        if s >= l && s >= r {
            let reach = s + (s - l).max(s - r);
            if reach >= best_grid - slack {
                candidates.push((j, s));
            }
        }
    }
    if candidates.len() > cfg.max_candidates {
        candidates.sort_by(|a, b| b.1.total_cmp(&a.1));
        candidates.truncate(cfg.max_candidates);
        report.notes.push(format!(
            "refined only the best {} grid-local extrema",
            cfg.max_candidates
        ));
    }

    let scored = |t: f64| sign * abs_at(t);
    let refined: Vec<(f64, f64)> = candidates
        .iter()
        .map(|&(j, _)| {
            let c = h * j as f64;
            let (t, s) = golden_max(scored, c - h, c + h, cfg.theta_tol);
            (normalize_angle(t), s)
        })
        .collect();
    let best = refined
        .iter()
        .map(|r| r.1)
        .fold(f64::NEG_INFINITY, f64::max)
        .max(best_grid);
    // the absolute floor lets zeros of f tie with each other; the spread cap
    // keeps ties meaningful when |f| varies little relative to its size
    let spread = best_grid - worst_grid;
    let tie = (cfg.tie_tol * (best.abs() + 1e-3 * vmax)).min(1e-3 * spread);
    let mut tied: Vec<(f64, f64)> = refined
        .into_iter()
        .filter(|r| r.1 >= best - tie)
        .collect();
    tied.sort_by(|a, b| a.0.total_cmp(&b.0));

    // Angular uncertainty: how far theta can move before |f| changes by a
    // few ulps, from the local curvature. Points within the distance over
    // which |f| changes by the tie tolerance are one location.
    let reach = |t: f64, s: f64, level: f64| {
        // widen the difference step until it clears rounding noise
        let mut step = h;
        let mut diff = (scored(t + step) + scored(t - step) - 2.0 * s).abs();
        while diff < 256.0 * f64::EPSILON * s.abs() && step < 0.05 {
            step *= 2.0;
            diff = (scored(t + step) + scored(t - step) - 2.0 * s).abs();
        }
        let curv = diff / (step * step);
        if curv > 0.0 {
            (2.0 * level / curv).sqrt()
        } else {
            h
        }
    };
    let mut unique: Vec<(f64, f64, f64, f64)> = Vec::new();
    for (t, s) in tied {
        let r = reach(t, s, 4.0 * f64::EPSILON * s.abs());
        let merge = (reach(t, s, tie) + r).max(1e-7);
        match unique.iter_mut().find(|u| angle_distance(u.0, t) < u.3.max(merge)) {
            Some(u) => {
                u.2 = u.2.max(r);
                u.3 = u.3.max(merge);
                if s > u.1 {
                    (u.0, u.1) = (t, s);
                }
            }
            None => unique.push((t, s, r, merge)),
        }
    }
    let resolution = unique.iter().map(|u| u.2).fold(cfg.theta_tol, f64::max);

    report.value = sign * best;
    report.locations = unique.iter().map(|u| e.point(u.0)).collect();
    report.resolution = resolution;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::{cheb_t, jacobi_eval, JacobiParams};
    use std::f64::consts::PI;

    fn ellipse(rho: f64) -> BernsteinEllipse {
        BernsteinEllipse::new(rho).unwrap()
    }

    #[test]
    fn constant_is_degenerate() {
        let cfg = SamplerConfig::with_grid(256);
        let r = sample_extremum(|_| Complex64::new(1.0, 0.0), ellipse(2.0), ExtremumKind::Max, &cfg);
        assert_eq!(r.value, 1.0);
        assert_eq!(r.locations.len(), 256);
        assert!(r.is_degenerate());
    }

    #[test]
    fn chebyshev_minimum() {
        let r = sample_extremum(
            |p| cheb_t(3, p.z()),
            ellipse(2.0),
            ExtremumKind::Min,
            &SamplerConfig::default(),
        );
        assert!((r.value - 3.9375).abs() < 1e-12 * 3.9375);
        assert_eq!(r.locations.len(), 6);
        for (k, p) in r.locations.iter().enumerate() {
            let want = (2 * k + 1) as f64 * PI / 6.0;
            assert!(angle_distance(p.theta, want) < 1e-6, "{} vs {want}", p.theta);
        }
        assert!(r.resolution < 1e-6);
    }

    #[test]
    fn jacobi_maximum_at_right_endpoint() {
        let p = JacobiParams::new(1.0, 0.0).unwrap();
        let r = sample_extremum(
            |pt| jacobi_eval(p, 5, pt.z()),
            ellipse(1.5),
            ExtremumKind::Max,
            &SamplerConfig::default(),
        );
        assert_eq!(r.locations.len(), 1);
        assert!(angle_distance(r.locations[0].theta, 0.0) < 1e-6);
    }

    #[test]
    fn ties_across_the_wrap() {
        // |cos(theta)|-like profile with maxima at 0 and pi
        let r = sample_extremum(
            |p| Complex64::new(p.theta.cos().abs() + 1.0, 0.0),
            ellipse(1.5),
            ExtremumKind::Max,
            &SamplerConfig::with_grid(1000),
        );
        let t = r.thetas();
        assert_eq!(t.len(), 2, "{t:?}");
        for want in [0.0, PI] {
            assert!(t.iter().any(|&x| angle_distance(x, want) < 1e-6), "{t:?}");
        }
    }

    #[test]
    fn zeros_on_the_curve_tie() {
        let r = sample_extremum(
            |p| Complex64::new(p.theta.cos().powi(2), 0.0),
            ellipse(3.0),
            ExtremumKind::Min,
            &SamplerConfig::with_grid(997),
        );
        assert_eq!(r.locations.len(), 2, "{:?}", r.thetas());
        assert!(r.value < 1e-12);
    }
}
