//! Report serialization: JSON documents, CSV rows, and human-readable numbers.
//!
//! JSON numbers are written in shortest round-trip form, so every `f64`
//! survives a write/read cycle bit-for-bit.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::verify::GraphRecord;

pub const SCHEMA_VERSION: &str = "1";

/// A versioned JSON document wrapping one payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument<T> {
    pub schema_version: String,
    #[serde(flatten)]
    pub payload: T,
}

impl<T: Serialize> ReportDocument<T> {
    pub fn new(payload: T) -> Self {
        ReportDocument { schema_version: SCHEMA_VERSION.to_string(), payload }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types serialize")
    }
}

impl<T: DeserializeOwned> ReportDocument<T> {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// CSV with one row per analysed graph:
/// `graph6,n,kappa,rho,threshold,verdict`.
pub fn records_to_csv(records: &[GraphRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["graph6", "n", "kappa", "rho", "threshold", "verdict"]).expect("in-memory write");
    for r in records {
        w.write_record([
            r.graph6.clone(),
            r.n.to_string(),
            r.kappa.to_string(),
            r.rho.to_string(),
            r.threshold.to_string(),
            r.verdict_label().to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush to Vec")).expect("CSV is UTF-8")
}

/// `x` with 10 significant digits.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}
