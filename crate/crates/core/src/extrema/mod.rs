//! Extrema of `|polynomial|` over Bernstein ellipses: closed forms where a
//! known closed form applies and a dense-sampling search otherwise.

mod closed;
mod critical;
mod report;
mod sampler;

pub use closed::{
    rational_modulus_max, max_on_ellipse, min_cheb_t, min_cheb_u, min_gegenbauer,
    remark_interval_contains, RHO2_STAR,
};
pub use critical::{
    critical_residual, estimate_gegenbauer_critical_radius, rho_star, rho_star_table,
    CriticalEstimate, CriticalRadius,
};
pub use report::{CertMethod, ExtremumKind, ExtremumReport};
pub use sampler::{sample_extremum, SamplerConfig};
