//! Jacobi, Gegenbauer and Chebyshev polynomials on Bernstein ellipses:
//! coefficient series, extrema of the modulus, first-order asymptotics and
//! interpolation error bounds.

pub mod asymptotics;
pub mod ellipse;
pub mod error;
pub mod extrema;
pub mod figures;
pub mod interp;
pub mod orthopoly;
pub mod quadrature;
pub mod scalar;
pub mod search;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/coefficients.md")]
    mod coefficients {}
    #[doc = include_str!("../../../book/src/extrema.md")]
    mod extrema {}
    #[doc = include_str!("../../../book/src/asymptotics.md")]
    mod asymptotics {}
    #[doc = include_str!("../../../book/src/interpolation.md")]
    mod interpolation {}
    #[doc = include_str!("../../../book/src/figures.md")]
    mod figures {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
