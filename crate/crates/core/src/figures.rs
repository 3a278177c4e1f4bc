//! Reproducible figure data: `|C_n^lambda|` along Bernstein ellipses and the
//! sequence of critical radii `rho_n*`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::ellipse::BernsteinEllipse;
use crate::error::{domain, Result};
use crate::extrema::rho_star_table;
use crate::orthopoly::{gegenbauer_eval, GegenbauerParam};

/// Number of uniform `theta` samples in `[0, 2 pi)` for the ellipse figures.
pub const FIGURE_THETA_SAMPLES: usize = 2048;

/// Data behind one figure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FigureSpec {
    /// `|C_n^lambda(z(theta))|` on several ellipses, one column per radius.
    Gegenbauer {
        figure_id: u8,
        lambda: f64,
        n: u32,
        rhos: Vec<f64>,
        theta_samples: usize,
    },
    /// `rho_n*` for even `n` up to `n_max`.
    CriticalRadii { figure_id: u8, n_max: u32 },
}

impl FigureSpec {
    /// Defaults for figures 1 to 4:
    /// `|C_5^{1/4}|`, `|C_8^{1/3}|`, `|C_7^{-1/3}|` and `rho_n*` for `n = 2, 4, ..., 100`.
    pub fn default_for(figure_id: u8) -> Result<Self> {
        let gegenbauer = |lambda: f64, n: u32, rhos: &[f64]| FigureSpec::Gegenbauer {
            figure_id,
            lambda,
            n,
            rhos: rhos.to_vec(),
            theta_samples: FIGURE_THETA_SAMPLES,
        };
        match figure_id {
            1 => Ok(gegenbauer(0.25, 5, &[1.05, 1.25, 2.0])),
            2 => Ok(gegenbauer(1.0 / 3.0, 8, &[1.1, 1.2, 2.0])),
            3 => Ok(gegenbauer(-1.0 / 3.0, 7, &[1.1, 1.2, 2.0])),
            4 => Ok(FigureSpec::CriticalRadii { figure_id, n_max: 100 }),
            other => Err(domain(format!("figure id must be 1, 2, 3 or 4, got {other}"))),
        }
    }

    pub fn figure_id(&self) -> u8 {
        match self {
            FigureSpec::Gegenbauer { figure_id, .. } | FigureSpec::CriticalRadii { figure_id, .. } => {
                *figure_id
            }
        }
    }
}

/// `x` with 12 significant digits in scientific notation.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Columns of a Gegenbauer figure: the `theta` grid and one `|C_n^lambda|` column per radius.
pub fn gegenbauer_columns(
    lambda: f64,
    n: u32,
    rhos: &[f64],
    theta_samples: usize,
) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let g = GegenbauerParam::new(lambda)?;
    if theta_samples == 0 {
        return Err(domain("theta_samples must be positive"));
    }
    let thetas: Vec<f64> = (0..theta_samples)
        .map(|j| TAU * j as f64 / theta_samples as f64)
        .collect();
    let columns = rhos
        .iter()
        .map(|&rho| {
            let e = BernsteinEllipse::new(rho)?;
            Ok(thetas
                .iter()
                .map(|&t| gegenbauer_eval(g, n, e.point(t).z()).norm())
                .collect())
        })
        .collect::<Result<Vec<Vec<f64>>>>()?;
    Ok((thetas, columns))
}

/// CSV for a figure. Ellipse figures have a `theta` column followed by one
/// column per radius, 12 significant digits; the critical-radius figure has
/// columns `n,rho_star` with shortest round-trip decimals.
pub fn figure_csv(spec: &FigureSpec) -> Result<String> {
    match spec {
        FigureSpec::Gegenbauer {
            lambda,
            n,
            rhos,
            theta_samples,
            ..
        } => {
            let (thetas, columns) = gegenbauer_columns(*lambda, *n, rhos, *theta_samples)?;
            let mut out = String::from("theta");
            for rho in rhos {
                out.push_str(&format!(",rho_{rho}"));
            }
            out.push('\n');
            for (j, t) in thetas.iter().enumerate() {
                out.push_str(&sig12(*t));
                for col in &columns {
                    out.push(',');
                    out.push_str(&sig12(col[j]));
                }
                out.push('\n');
            }
            Ok(out)
        }
        FigureSpec::CriticalRadii { n_max, .. } => rho_star_csv(*n_max),
    }
}

/// `n,rho_star` rows for `n = 2, 4, ..., n_max`.
pub fn rho_star_csv(n_max: u32) -> Result<String> {
    let mut out = String::from("n,rho_star\n");
    for r in rho_star_table(n_max)? {
        out.push_str(&format!("{},{:?}\n", r.n, r.rho_star));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn defaults() {
        match FigureSpec::default_for(1).unwrap() {
            FigureSpec::Gegenbauer { lambda, n, rhos, theta_samples, .. } => {
                assert_eq!((lambda, n, theta_samples), (0.25, 5, 2048));
                assert_eq!(rhos, vec![1.05, 1.25, 2.0]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            FigureSpec::default_for(4).unwrap(),
            FigureSpec::CriticalRadii { figure_id: 4, n_max: 100 }
        );
        assert!(FigureSpec::default_for(5).is_err());
        assert_eq!(FigureSpec::default_for(3).unwrap().figure_id(), 3);
    }

    #[test]
    fn first_row_is_the_right_vertex() {
        let spec = FigureSpec::default_for(1).unwrap();
        let csv = figure_csv(&spec).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "theta,rho_1.05,rho_1.25,rho_2");
        let first: Vec<f64> = lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(first[0], 0.0);
        let g = GegenbauerParam::new(0.25).unwrap();
        for (i, rho) in [1.05, 1.25, 2.0].iter().enumerate() {
            let x = 0.5 * (rho + 1.0 / rho);
            let want = gegenbauer_eval(g, 5, Complex64::new(x, 0.0)).norm();
            assert!((first[i + 1] - want).abs() <= 1e-11 * want);
        }
        assert_eq!(csv.lines().count(), 2049);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn output_is_deterministic() {
        let spec = FigureSpec::default_for(3).unwrap();
        assert_eq!(figure_csv(&spec).unwrap(), figure_csv(&spec).unwrap());
    }

    #[test]
    fn critical_radius_rows() {
        let csv = figure_csv(&FigureSpec::CriticalRadii { figure_id: 4, n_max: 6 }).unwrap();
        let rows: Vec<&str> = csv.lines().collect();
        assert_eq!(rows[0], "n,rho_star");
        assert!(rows[1].starts_with("2,1.93185165257813"));
        assert_eq!(rows.len(), 4);
        assert!(rho_star_csv(5).is_err());
    }
}
