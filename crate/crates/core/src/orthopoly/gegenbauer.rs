use num_complex::Complex64;

use super::{jacobi_eval, GegenbauerParam};
use crate::scalar::{log_pochhammer, LogScaled};

/// `C_n^lambda / P_n^{(lambda-1/2, lambda-1/2)}`, i.e.
/// `Gamma(lambda+1/2) Gamma(n+2 lambda) / (Gamma(2 lambda) Gamma(n+lambda+1/2))`.
///
/// Computed as `(2 lambda)_n / (lambda + 1/2)_n`, which also covers
/// `-1/2 < lambda < 0` where `Gamma(2 lambda)` is negative.
pub fn gegenbauer_prefactor(g: GegenbauerParam, n: u32) -> LogScaled {
    log_pochhammer(2.0 * g.lambda, n) / log_pochhammer(g.lambda + 0.5, n)
}

/// `C_n^lambda(z)`.
pub fn gegenbauer_eval(g: GegenbauerParam, n: u32, z: Complex64) -> Complex64 {
    jacobi_eval(g.jacobi(), n, z) * gegenbauer_prefactor(g, n).to_f64()
}

/// Leading coefficient `2^n (lambda)_n / n!` of `C_n^lambda`.
pub fn gegenbauer_leading_coeff(g: GegenbauerParam, n: u32) -> LogScaled {
    (log_pochhammer(g.lambda, n) / log_pochhammer(1.0, n)).scale_pow2(f64::from(n))
}
