use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ellipse::EllipsePoint;
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Max,
    Min,
}

impl fmt::Display for ExtremumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremumKind::Max => "max",
            ExtremumKind::Min => "min",
        })
    }
}

impl FromStr for ExtremumKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(ExtremumKind::Max),
            "min" => Ok(ExtremumKind::Min),
            other => Err(domain(format!("kind must be max or min, got {other:?}"))),
        }
    }
}

/// How the extremum was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertMethod {
    ClosedForm,
    Sampled,
}

/// An extremum of `|f|` over an ellipse and the points attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremumReport {
    pub kind: ExtremumKind,
    pub value: f64,
    pub locations: Vec<EllipsePoint>,
    pub method: CertMethod,
    pub conditions_met: bool,
    pub theorem_tag: String,
    pub rho: f64,
    /// For sampled reports, the angular uncertainty of the locations implied
    /// by the flatness of `|f|` at double precision. Zero for closed forms.
    pub resolution: f64,
    pub notes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ReportRecord {
    kind: ExtremumKind,
    value: f64,
    theta_locations: Vec<f64>,
    rho: f64,
    method: CertMethod,
    theorem_tag: String,
    conditions_met: bool,
    resolution: f64,
    notes: Vec<String>,
}

impl ExtremumReport {
    pub fn thetas(&self) -> Vec<f64> {
        self.locations.iter().map(|p| p.theta).collect()
    }

    pub fn is_degenerate(&self) -> bool {
        self.notes.iter().any(|n| n.starts_with("degenerate"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportRecord {
            kind: self.kind,
            value: self.value,
            theta_locations: self.thetas(),
            rho: self.rho,
            method: self.method,
            theorem_tag: self.theorem_tag.clone(),
            conditions_met: self.conditions_met,
            resolution: self.resolution,
            notes: self.notes.clone(),
        })
        .expect("report serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let r: ReportRecord = serde_json::from_value(value.clone())
            .map_err(|e| domain(format!("malformed extremum report: {e}")))?;
        let locations = r
            .theta_locations
            .iter()
            .map(|&t| EllipsePoint::new(r.rho, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExtremumReport {
            kind: r.kind,
            value: r.value,
            locations,
            method: r.method,
            conditions_met: r.conditions_met,
            theorem_tag: r.theorem_tag,
            rho: r.rho,
            resolution: r.resolution,
            notes: r.notes,
        })
    }
}
