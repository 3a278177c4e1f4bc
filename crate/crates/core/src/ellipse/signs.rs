use serde::{Deserialize, Serialize};

use super::CoefficientTable;

/// Relative size below which a coefficient counts as zero.
pub const ZERO_THRESHOLD: f64 = 1e-14;

/// Sign pattern of a coefficient table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum SignClass {
    /// `a > b`, `a + b >= -1`: every `d_k > 0`.
    AllPositive,
    /// `a < b`, `a + b >= -1`: `(-1)^{n-k} d_k > 0`.
    Alternating,
    /// `a = b > -1/2`: `d_k > 0` for even `n - k`, zero for odd.
    GegenbauerEvenPositive,
    /// `a = b = -1/2`: `d_n > 0` and `d_1 = ... = d_{n-1} = 0`.
    ChebyshevFirstDegenerate,
    /// No case applies or the observed signs contradict it.
    Unclassified { signs: Vec<i8> },
}

/// Signs of `d_0..d_n`, with entries below `ZERO_THRESHOLD * max|d|` taken as 0.
pub fn coefficient_signs(t: &CoefficientTable) -> Vec<i8> {
    let cut = ZERO_THRESHOLD * t.max_abs();
    t.d()
        .iter()
        .map(|&v| {
            if v.abs() <= cut {
                0
            } else if v > 0.0 {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// Classifies the sign pattern, confirming it against the parameter case.
pub fn classify_signs(t: &CoefficientTable) -> SignClass {
    let signs = coefficient_signs(t);
    let p = t.params();
    let n = t.n() as usize;
    let (a, b) = (p.alpha, p.beta);
    let parity = |k: usize| if (n - k) % 2 == 0 { 1 } else { -1 };
    let holds = if a > b && a + b >= -1.0 {
        signs.iter().all(|&s| s == 1).then_some(SignClass::AllPositive)
    } else if a < b && a + b >= -1.0 {
        signs
            .iter()
            .enumerate()
            .all(|(k, &s)| s == parity(k))
            .then_some(SignClass::Alternating)
    } else if p.is_cheb_first() {
        (signs[n] == 1 && signs[1.min(n)..n].iter().all(|&s| s == 0))
            .then_some(SignClass::ChebyshevFirstDegenerate)
    } else if a == b && a > -0.5 {
        signs
            .iter()
            .enumerate()
            .all(|(k, &s)| s == if parity(k) == 1 { 1 } else { 0 })
            .then_some(SignClass::GegenbauerEvenPositive)
    } else {
        None
    };
    holds.unwrap_or(SignClass::Unclassified { signs })
}
