//! Scalar building blocks: gamma-family functions, Pochhammer symbols,
//! terminating hypergeometric sums and the cut-plane square root.

mod complex;
pub mod exact;
mod gamma;
mod hypergeometric;

pub use complex::sqrt_zsq_minus_1;
pub use gamma::{log_gamma, log_gamma_ratio, LogScaled};
pub use hypergeometric::{
    hyp3f2_terminating, hyp3f2_terminating_exact, log_pochhammer, pochhammer,
};
