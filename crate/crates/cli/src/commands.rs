use anyhow::{bail, Result};
use num_complex::Complex64;
use serde_json::{json, Value};

use jacobi_ellipse::asymptotics::{
    asymptotic_reports_to_csv, estimate_error, lower_bound, AsymptoticConfig, CIRCLE_GRID,
};
use jacobi_ellipse::ellipse::{
    angle_distance, coeffs_explicit, coeffs_gegenbauer_closed, coeffs_recurrence,
    coeffs_transform_oracle, eval_ellipse_series, BernsteinEllipse, CoefficientTable, EllipsePoint,
};
use jacobi_ellipse::extrema::{
    estimate_gegenbauer_critical_radius, max_on_ellipse, min_cheb_t, min_cheb_u, min_gegenbauer,
    rho_star_table, sample_extremum, CertMethod, ExtremumKind, ExtremumReport, SamplerConfig,
};
use jacobi_ellipse::figures::{figure_csv, gegenbauer_columns, FigureSpec};
use jacobi_ellipse::interp::{interp_bound, InterpBoundRequest};
use jacobi_ellipse::orthopoly::{
    cheb_t_at, cheb_u_at, gegenbauer_eval, gegenbauer_prefactor, jacobi_eval, GegenbauerParam,
    JacobiParams,
};
use jacobi_ellipse::scalar::log_pochhammer;

use crate::args::{ChebKind, Cli, CoeffMethodArg, Command, Format, JacobiArgs, KindArg};
use crate::output::{invariant, json_text, num, write_output, Csv};

/// Relative agreement required between a closed-form extremum and sampling.
const EXTREMUM_VALUE_TOL: f64 = 1e-9;
/// Relative agreement required between the series and direct evaluation.
const EVAL_TOL: f64 = 1e-9;

enum Rendered {
    Csv(String),
    Json(Value),
}

pub fn run(cli: &Cli) -> Result<()> {
    if let Some(g) = cli.grid {
        if g < 8 {
            bail!("grid must be at least 8, got {g}");
        }
    }
    let format = cli.format;
    let rendered = match &cli.command {
        Command::Coeffs { params, n, method } => coeffs(jacobi(params)?, *n, *method, format)?,
        Command::Eval { params, n, rho, theta, points } => {
            eval(jacobi(params)?, *n, *rho, theta, *points, format)?
        }
        Command::Extrema { kind, alpha, beta, lambda, cheb, n, rho, estimate_critical } => {
            let target = target(*alpha, *beta, *lambda, *cheb)?;
            extrema(cli, *kind, target, *n, *rho, *estimate_critical, format)?
        }
        Command::RhoStar { n_max } => rho_star(*n_max, format)?,
        Command::Asymptotic { params, rho, n, c_n } => {
            asymptotic(cli, jacobi(params)?, *rho, n, *c_n, format)?
        }
        Command::LowerBound { params, n, rho, c_n } => {
            lower_bound_cmd(cli, jacobi(params)?, *n, *rho, *c_n, format)?
        }
        Command::Figure { id, rhos, theta_samples, n_max } => {
            figure(*id, rhos, *theta_samples, *n_max, format)?
        }
        Command::InterpBound { params, n, rho, m } => {
            interp(jacobi(params)?, *n, *rho, *m, format)?
        }
    };
    let text = match rendered {
        Rendered::Csv(text) => text,
        Rendered::Json(value) => json_text(&value)?,
    };
    write_output(&text, cli.out.as_deref())
}

fn jacobi(a: &JacobiArgs) -> Result<JacobiParams> {
    Ok(JacobiParams::new(a.alpha, a.beta)?)
}

fn sampler(cli: &Cli) -> SamplerConfig {
    cli.grid.map_or_else(SamplerConfig::default, SamplerConfig::with_grid)
}

fn coeffs(p: JacobiParams, n: u32, method: CoeffMethodArg, format: Option<Format>) -> Result<Rendered> {
    let table: CoefficientTable = match method {
        CoeffMethodArg::Explicit => coeffs_explicit(p, n)?,
        CoeffMethodArg::Recurrence => coeffs_recurrence(p, n)?,
        CoeffMethodArg::Transform => coeffs_transform_oracle(p, n, (4 * n as usize).max(8))?,
        CoeffMethodArg::GegenbauerClosed => coeffs_gegenbauer_closed(p, n)?,
    };
    Ok(match format.unwrap_or(Format::Csv) {
        Format::Csv => Rendered::Csv(table.to_csv()),
        Format::Json => Rendered::Json(table.to_json()),
    })
}

fn eval(
    p: JacobiParams,
    n: u32,
    rho: f64,
    thetas: &[f64],
    points: usize,
    format: Option<Format>,
) -> Result<Rendered> {
    let e = BernsteinEllipse::new(rho)?;
    let thetas: Vec<f64> = if thetas.is_empty() {
        if points == 0 {
            bail!("points must be positive");
        }
        e.uniform_points(points).map(|pt| pt.theta).collect()
    } else {
        thetas.to_vec()
    };
    let table = coeffs_recurrence(p, n)?;
    let mut rows = Vec::with_capacity(thetas.len());
    for &t in &thetas {
        let pt = EllipsePoint::new(rho, t)?;
        let series = eval_ellipse_series(&table, &pt);
        let direct = jacobi_eval(p, n, pt.z());
        let discrepancy = (series - direct).norm();
        invariant(discrepancy <= EVAL_TOL * direct.norm().max(1.0), || {
            format!("series and direct evaluation differ by {discrepancy:e} at theta = {t}")
        })?;
        rows.push((pt, series, direct, discrepancy));
    }
    Ok(match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut csv = Csv::new(&["theta", "z_re", "z_im", "p_re", "p_im", "abs", "direct_re", "direct_im", "discrepancy"]);
            for (pt, s, d, disc) in &rows {
                let z = pt.z();
                csv.row(&[num(pt.theta), num(z.re), num(z.im), num(s.re), num(s.im), num(s.norm()), num(d.re), num(d.im), num(*disc)]);
            }
            Rendered::Csv(csv.finish())
        }
        Format::Json => {
            let pair = |c: Complex64| json!([c.re, c.im]);
            let points: Vec<Value> = rows
                .iter()
                .map(|(pt, s, d, disc)| {
                    json!({
                        "theta": pt.theta,
                        "z": pair(pt.z()),
                        "value": pair(*s),
                        "abs": s.norm(),
                        "direct": pair(*d),
                        "discrepancy": disc,
                    })
                })
                .collect();
            Rendered::Json(json!({
                "alpha": p.alpha,
                "beta": p.beta,
                "n": n,
                "rho": rho,
                "points": points,
            }))
        }
    })
}

#[derive(Debug, Clone, Copy)]
enum Target {
    Jacobi(JacobiParams),
    Gegenbauer(GegenbauerParam),
    Cheb(ChebKind),
}

fn target(alpha: Option<f64>, beta: Option<f64>, lambda: Option<f64>, cheb: Option<ChebKind>) -> Result<Target> {
    match (alpha, beta, lambda, cheb) {
        (Some(a), Some(b), None, None) => Ok(Target::Jacobi(JacobiParams::new(a, b)?)),
        (None, None, Some(l), None) => Ok(Target::Gegenbauer(GegenbauerParam::new(l)?)),
        (None, None, None, Some(c)) => Ok(Target::Cheb(c)),
        _ => bail!("give exactly one of --alpha/--beta, --lambda or --cheb"),
    }
}

impl Target {
    fn eval(&self, n: u32, pt: &EllipsePoint) -> Complex64 {
        match self {
            Target::Jacobi(p) => jacobi_eval(*p, n, pt.z()),
            Target::Gegenbauer(g) => gegenbauer_eval(*g, n, pt.z()),
            Target::Cheb(ChebKind::T) => cheb_t_at(n, pt),
            Target::Cheb(ChebKind::U) => cheb_u_at(n, pt),
        }
    }

    /// The Jacobi parameters and the factor `c` with `f = c P_n^{(a,b)}`.
    fn as_jacobi(&self, n: u32) -> Result<(JacobiParams, f64)> {
        Ok(match self {
            Target::Jacobi(p) => (*p, 1.0),
            Target::Gegenbauer(g) => (
                JacobiParams::new(g.lambda - 0.5, g.lambda - 0.5)?,
                gegenbauer_prefactor(*g, n).to_f64(),
            ),
            Target::Cheb(ChebKind::T) => (
                JacobiParams::cheb_first(),
                (log_pochhammer(1.0, n) / log_pochhammer(0.5, n)).to_f64(),
            ),
            Target::Cheb(ChebKind::U) => {
                let g = GegenbauerParam::new(1.0)?;
                (JacobiParams::cheb_second(), gegenbauer_prefactor(g, n).to_f64())
            }
        })
    }
}

fn scaled(mut r: ExtremumReport, factor: f64) -> ExtremumReport {
    r.value *= factor.abs();
    r
}

fn primary_extremum(kind: KindArg, target: Target, n: u32, e: BernsteinEllipse, cfg: &SamplerConfig) -> Result<ExtremumReport> {
    Ok(match (kind, target) {
        (KindArg::Max, t) => {
            let (p, factor) = t.as_jacobi(n)?;
            scaled(max_on_ellipse(p, n, e, cfg)?, factor)
        }
        (KindArg::Min, Target::Cheb(ChebKind::T)) => min_cheb_t(n, e)?,
        (KindArg::Min, Target::Cheb(ChebKind::U)) => min_cheb_u(n, e, cfg)?,
        (KindArg::Min, Target::Gegenbauer(g)) => min_gegenbauer(g, n, e, cfg)?,
        (KindArg::Min, Target::Jacobi(p)) if p.is_cheb_first() => {
            let (_, factor) = Target::Cheb(ChebKind::T).as_jacobi(n)?;
            scaled(min_cheb_t(n, e)?, 1.0 / factor)
        }
        (KindArg::Min, Target::Jacobi(p)) if p.is_gegenbauer() && p.alpha != -0.5 => {
            let g = GegenbauerParam::new(p.alpha + 0.5)?;
            scaled(min_gegenbauer(g, n, e, cfg)?, 1.0 / gegenbauer_prefactor(g, n).to_f64())
        }
        (KindArg::Min, t) => sample_extremum(|pt| t.eval(n, pt), e, ExtremumKind::Min, cfg),
    })
}

fn extrema(
    cli: &Cli,
    kind: KindArg,
    target: Target,
    n: u32,
    rho: f64,
    estimate_critical: bool,
    format: Option<Format>,
) -> Result<Rendered> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    let e = BernsteinEllipse::new(rho)?;
    let cfg = sampler(cli);
    let report = primary_extremum(kind, target, n, e, &cfg)?;
    let sampled = match kind {
        KindArg::Max => sample_extremum(|pt| target.eval(n, pt), e, ExtremumKind::Max, &cfg),
        KindArg::Min => sample_extremum(|pt| target.eval(n, pt), e, ExtremumKind::Min, &cfg),
    };
    let value_discrepancy = (report.value - sampled.value).abs() / report.value.abs().max(f64::MIN_POSITIVE);
    let location_discrepancy = report
        .thetas()
        .iter()
        .map(|t| sampled.thetas().iter().map(|s| angle_distance(*t, *s)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max);
    if report.method == CertMethod::ClosedForm {
        invariant(value_discrepancy <= EXTREMUM_VALUE_TOL, || {
            format!(
                "closed form {} and sampled {} differ by relative {value_discrepancy:e}",
                report.value, sampled.value
            )
        })?;
    }
    let critical = match (estimate_critical, target) {
        (true, Target::Gegenbauer(g)) => Some(estimate_gegenbauer_critical_radius(g, n, &cfg, 1e-6)?),
        _ => None,
    };
    Ok(match format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut out = json!({
                "report": report.to_json(),
                "sampled": sampled.to_json(),
                "value_discrepancy": value_discrepancy,
                "location_discrepancy": location_discrepancy,
            });
            if let Some(c) = critical {
                out["critical_radius_estimate"] = serde_json::to_value(c)?;
            }
            Rendered::Json(out)
        }
        Format::Csv => {
            let mut csv = Csv::new(&["source", "kind", "method", "value", "theta"]);
            for (source, r) in [("report", &report), ("sampled", &sampled)] {
                let method = serde_json::to_value(r.method)?;
                for t in r.thetas() {
                    csv.row(&[source.to_string(), r.kind.to_string(), method.as_str().unwrap_or("").to_string(), num(r.value), num(t)]);
                }
            }
            Rendered::Csv(csv.finish())
        }
    })
}

fn rho_star(n_max: u32, format: Option<Format>) -> Result<Rendered> {
    let table = rho_star_table(n_max)?;
    invariant(
        table.windows(2).all(|w| w[1].rho_star < w[0].rho_star) && table.iter().all(|r| r.rho_star > 1.0),
        || "critical radii are not strictly decreasing above 1".into(),
    )?;
    Ok(match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut csv = Csv::new(&["n", "rho_star"]);
            for r in &table {
                csv.row(&[r.n.to_string(), num(r.rho_star)]);
            }
            Rendered::Csv(csv.finish())
        }
        Format::Json => Rendered::Json(json!({ "rows": table })),
    })
}

fn asymptotic_config(cli: &Cli, c_n: f64) -> AsymptoticConfig {
    AsymptoticConfig {
        grid: cli.grid.unwrap_or(CIRCLE_GRID),
        c_n,
    }
}

fn asymptotic(cli: &Cli, p: JacobiParams, rho: f64, degrees: &[u32], c_n: f64, format: Option<Format>) -> Result<Rendered> {
    let e = BernsteinEllipse::proper(rho)?;
    let cfg = asymptotic_config(cli, c_n);
    let reports = degrees
        .iter()
        .map(|&n| {
            let r = estimate_error(p, n, e, &cfg)?;
            r.check_invariants()?;
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(match format.unwrap_or(Format::Csv) {
        Format::Csv => Rendered::Csv(asymptotic_reports_to_csv(&reports)),
        Format::Json => Rendered::Json(json!({ "reports": reports })),
    })
}

fn lower_bound_cmd(cli: &Cli, p: JacobiParams, n: u32, rho: f64, c_n: f64, format: Option<Format>) -> Result<Rendered> {
    let e = BernsteinEllipse::proper(rho)?;
    let bound = lower_bound(p, n, e, c_n)?;
    let report = estimate_error(p, n, e, &asymptotic_config(cli, c_n))?;
    report.check_invariants()?;
    let holds = report.bound_margin >= 1.0;
    Ok(match format.unwrap_or(Format::Json) {
        Format::Json => Rendered::Json(json!({
            "alpha": p.alpha,
            "beta": p.beta,
            "n": n,
            "rho": rho,
            "c_n": c_n,
            "circle_max": bound.circle_max.value,
            "circle_max_sampled": bound.circle_max.sampled,
            "circle_max_closed_form": bound.circle_max.closed_form,
            "circle_maximizers": bound.circle_max.thetas,
            "lower_bound": bound.value,
            "log_lower_bound": bound.log_value,
            "min_abs_poly": report.min_abs_poly,
            "margin": report.bound_margin,
            "holds": holds,
        })),
        Format::Csv => {
            let mut csv = Csv::new(&["n", "rho", "alpha", "beta", "c_n", "circle_max", "lower_bound", "log_lower_bound", "min_abs", "margin", "holds"]);
            csv.row(&[
                n.to_string(),
                num(rho),
                num(p.alpha),
                num(p.beta),
                num(c_n),
                num(bound.circle_max.value),
                num(bound.value),
                num(bound.log_value),
                num(report.min_abs_poly),
                num(report.bound_margin),
                holds.to_string(),
            ]);
            Rendered::Csv(csv.finish())
        }
    })
}

fn figure(id: u8, rhos: &[f64], theta_samples: Option<usize>, n_max: Option<u32>, format: Option<Format>) -> Result<Rendered> {
    let mut spec = FigureSpec::default_for(id)?;
    match &mut spec {
        FigureSpec::Gegenbauer { rhos: r, theta_samples: s, .. } => {
            if n_max.is_some() {
                bail!("--n-max applies only to figure 4");
            }
            if !rhos.is_empty() {
                *r = rhos.to_vec();
            }
            if let Some(ts) = theta_samples {
                *s = ts;
            }
        }
        FigureSpec::CriticalRadii { n_max: m, .. } => {
            if !rhos.is_empty() || theta_samples.is_some() {
                bail!("--rhos and --theta-samples apply only to figures 1 to 3");
            }
            if let Some(v) = n_max {
                *m = v;
            }
        }
    }
    Ok(match format.unwrap_or(Format::Csv) {
        Format::Csv => Rendered::Csv(figure_csv(&spec)?),
        Format::Json => match &spec {
            FigureSpec::Gegenbauer { lambda, n, rhos, theta_samples, .. } => {
                let (thetas, columns) = gegenbauer_columns(*lambda, *n, rhos, *theta_samples)?;
                Rendered::Json(json!({ "spec": spec, "theta": thetas, "columns": columns }))
            }
            FigureSpec::CriticalRadii { n_max, .. } => {
                Rendered::Json(json!({ "spec": spec, "rows": rho_star_table(*n_max)? }))
            }
        },
    })
}

fn interp(p: JacobiParams, n: u32, rho: f64, m: f64, format: Option<Format>) -> Result<Rendered> {
    let b = interp_bound(InterpBoundRequest { params: p, n, rho, m })?;
    let gap = (rho - 1.0).powi(2) / (2.0 * rho);
    invariant(b.distance > 0.0 && b.distance <= gap + 1e-12, || {
        format!("distance {} exceeds the vertex gap {gap}", b.distance)
    })?;
    for w in &b.warnings {
        eprintln!("warning: {w}");
    }
    Ok(match format.unwrap_or(Format::Json) {
        Format::Json => Rendered::Json(serde_json::to_value(&b)?),
        Format::Csv => {
            let mut csv = Csv::new(&["n", "alpha", "beta", "rho", "M", "circumference", "distance", "numerator", "denominator", "denominator_tag", "bound"]);
            csv.row(&[
                n.to_string(),
                num(p.alpha),
                num(p.beta),
                num(rho),
                num(m),
                num(b.circumference),
                num(b.distance),
                num(b.numerator),
                num(b.denominator),
                b.denominator_tag.clone(),
                num(b.bound),
            ]);
            Rendered::Csv(csv.finish())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    #[test]
    fn chebyshev_targets_rescale_to_jacobi() {
        let n = 5;
        let pt = EllipsePoint::new(1.7, 0.9).unwrap();
        for t in [Target::Cheb(ChebKind::T), Target::Cheb(ChebKind::U), Target::Gegenbauer(GegenbauerParam::new(2.5).unwrap())] {
            let (p, factor) = t.as_jacobi(n).unwrap();
            let direct = t.eval(n, &pt);
            let via = jacobi_eval(p, n, pt.z()) * factor;
            assert!((direct - via).norm() <= 1e-12 * direct.norm(), "{t:?}");
        }
    }

    #[test]
    fn target_needs_exactly_one_family() {
        assert!(target(None, None, None, None).is_err());
        assert!(target(Some(0.0), Some(0.0), Some(1.0), None).is_err());
        assert!(target(Some(-1.0), Some(0.0), None, None).is_err());
        assert!(matches!(target(None, None, Some(0.25), None), Ok(Target::Gegenbauer(_))));
    }

    #[test]
    fn uniform_angles_cover_the_circle() {
        let e = BernsteinEllipse::new(2.0).unwrap();
        let pts: Vec<EllipsePoint> = e.uniform_points(4).collect();
        assert_eq!(pts[1].theta, TAU / 4.0);
    }
}
