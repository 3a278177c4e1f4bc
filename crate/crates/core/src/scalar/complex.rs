use num_complex::Complex64;

use crate::error::{domain, Result};

/// The branch of `sqrt(z^2 - 1)` analytic off `[-1, 1]` and asymptotic to `z`.
///
/// Formed as `sqrt(z - 1) * sqrt(z + 1)` with principal roots; the two
/// branch cuts overlap on `(-inf, -1)` and cancel there.
pub fn sqrt_zsq_minus_1(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && (-1.0..=1.0).contains(&z.re) {
        return Err(domain(format!("z = {z} lies on the cut [-1, 1]")));
    }
    // Sign of zero imaginary parts matters for the principal root on the
    // negative axis; normalize so z and conj(z) see mirrored branches.
    let z = if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    };
    let w = (z - 1.0).sqrt() * (z + 1.0).sqrt();
    Ok(w)
}
