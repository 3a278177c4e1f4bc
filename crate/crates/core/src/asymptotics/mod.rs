//! First-order asymptotics of Jacobi polynomials on Bernstein ellipses:
//! the conformal map, the Szegő function, correction terms, the error
//! constant `Lambda` and the resulting lower bound for `min |P_n|`.

mod estimate;
mod szego;

pub use estimate::{
    asymptotic_reports_to_csv, circle_max, estimate_error, first_order_profile, kn_expansion,
    kn_expansion_residual, lambda_constant, lower_bound, AsymptoticConfig, AsymptoticReport,
    CircleMax, KnExpansion, LowerBound, ASYMPTOTIC_CSV_HEADER, CIRCLE_GRID, DEFAULT_C_N,
};
pub use szego::{leading_term, phi, pi1, pi1_hat, pi2, szego_d, szego_d_infinity, szego_d_quadrature};
