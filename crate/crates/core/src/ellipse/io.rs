use serde::{Deserialize, Serialize};

use super::{CoefficientTable, Method};
use crate::error::{domain, Result};
use crate::orthopoly::JacobiParams;

#[derive(Serialize, Deserialize)]
struct TableRecord {
    n: u32,
    alpha: f64,
    beta: f64,
    method: Method,
    d: Vec<f64>,
}

impl CoefficientTable {
    /// `k,d_k` rows under a header, LF line endings, shortest round-trip decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,d_k\n");
        for (k, v) in self.d().iter().enumerate() {
            out.push_str(&format!("{k},{v:?}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableRecord {
            n: self.n(),
            alpha: self.params().alpha,
            beta: self.params().beta,
            method: self.method(),
            d: self.d().to_vec(),
        })
        .expect("table serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let r: TableRecord = serde_json::from_value(value.clone())
            .map_err(|e| domain(format!("malformed coefficient table: {e}")))?;
        if r.d.len() != r.n as usize + 1 {
            return Err(domain(format!(
                "table of degree {} has {} entries",
                r.n,
                r.d.len()
            )));
        }
        CoefficientTable::from_parts(JacobiParams::new(r.alpha, r.beta)?, r.d, r.method)
    }
}

/// Reads the `d_k` column back from [`CoefficientTable::to_csv`] output.
pub fn parse_coefficient_csv(text: &str) -> Result<Vec<f64>> {
    let mut lines = text.lines();
    if lines.next() != Some("k,d_k") {
        return Err(domain("expected header k,d_k"));
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let (k, v) = line
                .split_once(',')
                .ok_or_else(|| domain(format!("bad row {line:?}")))?;
            if k.parse::<usize>().ok() != Some(i) {
                return Err(domain(format!("row {i} has index {k:?}")));
            }
            v.parse::<f64>()
                .map_err(|e| domain(format!("bad value {v:?}: {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ellipse::{coeffs_explicit, coeffs_recurrence};

    #[test]
    fn legendre_csv() {
        let t = coeffs_recurrence(JacobiParams::legendre(), 2).unwrap();
        assert_eq!(t.to_csv(), "k,d_k\n0,0.25\n1,0.0\n2,0.375\n");
    }

    #[test]
    fn round_trips_are_exact() {
        let t = coeffs_explicit(JacobiParams::new(0.7, -0.3).unwrap(), 17).unwrap();
        assert_eq!(parse_coefficient_csv(&t.to_csv()).unwrap(), t.d());
        let json = t.to_json();
        assert_eq!(json["method"], "explicit-3F2");
        let text = serde_json::to_string(&json).unwrap();
        let back = CoefficientTable::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn malformed_input() {
        assert!(parse_coefficient_csv("k,x\n").is_err());
        assert!(parse_coefficient_csv("k,d_k\n1,0.5\n").is_err());
        let bad = serde_json::json!({"n": 2, "alpha": 0.0, "beta": 0.0, "method": "recurrence", "d": [1.0]});
        assert!(CoefficientTable::from_json(&bad).is_err());
    }
}
