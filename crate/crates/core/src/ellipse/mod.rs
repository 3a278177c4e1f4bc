//! Bernstein ellipses and the ellipse-series coefficients of Jacobi polynomials.

mod coeffs;
mod geometry;
mod io;
mod series;
mod signs;

pub use coeffs::{
    coeffs_explicit, coeffs_gegenbauer_closed, coeffs_recurrence, coeffs_transform_oracle,
    CoefficientTable, Method, MAX_DEGREE,
};
pub use geometry::{angle_distance, normalize_angle, BernsteinEllipse, EllipsePoint};
pub use io::parse_coefficient_csv;
pub use series::{eval_ellipse_series, eval_ellipse_series_scaled};
pub use signs::{classify_signs, coefficient_signs, SignClass, ZERO_THRESHOLD};
