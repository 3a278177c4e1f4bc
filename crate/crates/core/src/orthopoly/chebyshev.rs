use num_complex::Complex64;

use crate::ellipse::EllipsePoint;

fn recurrence(n: u32, z: Complex64, first: Complex64) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut prev = Complex64::new(1.0, 0.0);
    let mut cur = first;
    for _ in 1..n {
        let next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the first kind, `T_n(z)`, by recurrence.
pub fn cheb_t(n: u32, z: Complex64) -> Complex64 {
    recurrence(n, z, z)
}

/// Chebyshev polynomial of the second kind, `U_n(z)`, by recurrence.
pub fn cheb_u(n: u32, z: Complex64) -> Complex64 {
    recurrence(n, z, 2.0 * z)
}

/// `T_n(z) = (u^n + u^{-n})/2` at an ellipse point.
pub fn cheb_t_at(n: u32, pt: &EllipsePoint) -> Complex64 {
    let k = n as i32;
    0.5 * (pt.u_pow(k) + pt.u_pow(-k))
}

/// `U_n(z) = (u^{n+1} - u^{-n-1}) / (u - u^{-1})` at an ellipse point.
///
/// Falls back to the recurrence at the foci, where the quotient is `0/0`.
pub fn cheb_u_at(n: u32, pt: &EllipsePoint) -> Complex64 {
    let den = pt.u() - 1.0 / pt.u();
    if den.norm() < 1e-6 {
        return cheb_u(n, pt.z());
    }
    let k = n as i32 + 1;
    (pt.u_pow(k) - pt.u_pow(-k)) / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn u_forms() {
        let pt = EllipsePoint::new(2.0, 0.0).unwrap();
        assert!((pt.z() - 1.25).norm() < 1e-16);
        assert!((cheb_t_at(3, &pt) - 4.0625).norm() < 1e-14);
        let z = Complex64::new(0.0, 0.75);
        assert!((cheb_u(1, z) - Complex64::new(0.0, 1.5)).norm() < 1e-16);
    }

    #[test]
    fn trigonometric_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let t: f64 = rng.gen_range(0.0..std::f64::consts::PI);
            let z = Complex64::new(t.cos(), 0.0);
            assert!((cheb_t(5, z).re - (5.0 * t).cos()).abs() < 1e-14);
            let u = cheb_u(4, z).re;
            if t.sin() > 1e-3 {
                assert!((u - (5.0 * t).sin() / t.sin()).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn ellipse_forms_match_recurrence() {
        for &rho in &[1.0, 1.05, 1.5, 3.0] {
            for j in 0..64 {
                let pt = EllipsePoint::new(rho, 0.1 * f64::from(j)).unwrap();
                for n in 0..24 {
                    let t = cheb_t(n, pt.z());
                    let u = cheb_u(n, pt.z());
                    assert!((cheb_t_at(n, &pt) - t).norm() <= 1e-12 * t.norm().max(1.0));
                    assert!((cheb_u_at(n, &pt) - u).norm() <= 1e-12 * u.norm().max(1.0));
                }
            }
        }
    }

    #[test]
    fn foci_fall_back() {
        let pt = EllipsePoint::new(1.0, 0.0).unwrap();
        assert!((cheb_u_at(5, &pt) - 6.0).norm() < 1e-14);
    }
}
