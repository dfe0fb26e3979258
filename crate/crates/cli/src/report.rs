//! Output schema. Field order is declaration order and is part of the
//! format; bump `SCHEMA` when it changes.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

pub const SCHEMA: u32 = 1;

/// A binary64 written with 17 significant digits; non-finite values become
/// `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl Real {
    pub fn text(self) -> String {
        // -0 prints as 0 so reruns that land on either sign agree.
        let x = if self.0 == 0.0 { 0.0 } else { self.0 };
        format!("{x:.16e}")
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(self.text()).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

pub fn reals(xs: &[f64]) -> Vec<Real> {
    xs.iter().copied().map(Real).collect()
}

#[derive(Debug, Serialize)]
pub struct GroupInfo {
    pub family: &'static str,
    pub n: u64,
    pub name: String,
    pub order: usize,
}

#[derive(Debug, Serialize)]
pub struct ParamsInfo {
    pub alpha: Real,
    pub beta: Real,
    pub gamma: Real,
    pub eta: Real,
}

#[derive(Debug, Serialize)]
pub struct ExactParamsInfo {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub eta: String,
}

#[derive(Debug, Serialize)]
pub struct EigenspaceInfo {
    pub value: Real,
    pub multiplicity: usize,
    pub provenance: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<Vec<Real>>>,
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub max_residual: Real,
    pub tolerance: Real,
    /// Largest gap to the independent dense eigenvalues.
    pub dense_gap: Real,
    pub closed_form: Option<&'static str>,
    pub closed_form_gap: Option<Real>,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct SpectrumReport {
    pub schema: u32,
    pub command: &'static str,
    pub group: GroupInfo,
    pub variant: &'static str,
    pub complement: bool,
    /// Parameters as given, before any complement transform.
    pub params: ParamsInfo,
    /// Parameters applied to the uncomplemented graph.
    pub effective_params: ParamsInfo,
    pub route: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route_note: Option<String>,
    pub order: usize,
    pub eigenspaces: Vec<EigenspaceInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_order: Option<Vec<String>>,
    pub verification: Option<Verification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<Real>,
}

#[derive(Debug, Serialize)]
pub struct RootInfo {
    pub value: Real,
    pub multiplicity: usize,
}

#[derive(Debug, Serialize)]
pub struct QuotientPolyReport {
    pub schema: u32,
    pub command: &'static str,
    pub mode: &'static str,
    pub group: GroupInfo,
    pub variant: &'static str,
    pub complement: bool,
    pub params: ExactParamsInfo,
    pub block_labels: Vec<String>,
    pub block_sizes: Vec<usize>,
    pub degree: usize,
    /// Monic `det(lambda I - B)`, highest power first.
    pub coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<RootInfo>>,
}

#[derive(Debug, Serialize)]
pub struct NormalizedReport {
    pub schema: u32,
    pub command: &'static str,
    pub mode: &'static str,
    pub group: GroupInfo,
    pub variant: &'static str,
    pub complement: bool,
    pub at: String,
    pub value: Real,
    /// Present when the order is small enough for exact elimination.
    pub exact: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 1e300, std::f64::consts::PI, -0.0] {
            let s = serde_json::to_string(&Real(x)).unwrap();
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, if x == 0.0 { 0.0 } else { x }, "{s}");
        }
        assert_eq!(serde_json::to_string(&Real(f64::NAN)).unwrap(), "null");
        assert_eq!(serde_json::to_string(&Real(4.0)).unwrap(), "4.0000000000000000e0");
    }
}
