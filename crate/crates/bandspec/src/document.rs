//! The serialized form of a spectrum computation.
//!
//! JSON keys are fixed:
//!
//! ```text
//! {"expr": str, "kind": str, "degree": int|null, "band_count": int,
//!  "bands": [{"lo": float, "hi": float}], "verification": {...}|null}
//! ```

use std::fmt::Write as _;

use bandspec_core::{OperatorKind, SpectrumSet, VerificationReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandDoc {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub eigenvalue: f64,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub truncation: usize,
    pub vertices: usize,
    pub tol: f64,
    pub eigenvalue_count: usize,
    pub distinct_eigenvalues: usize,
    pub containment_violations: Vec<ViolationDoc>,
    pub uncovered_bands: Vec<usize>,
    pub max_band_distance: f64,
    pub passed: bool,
}

impl From<&VerificationReport> for VerificationSummary {
    fn from(r: &VerificationReport) -> Self {
        VerificationSummary {
            truncation: r.truncation,
            vertices: r.vertices,
            tol: r.tol,
            eigenvalue_count: r.computed.dimension(),
            distinct_eigenvalues: r.computed.distinct_count(),
            containment_violations: r
                .containment_violations
                .iter()
                .map(|&(eigenvalue, distance)| ViolationDoc { eigenvalue, distance })
                .collect(),
            uncovered_bands: r.uncovered_bands.clone(),
            max_band_distance: r.max_band_distance,
            passed: r.passed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDocument {
    #[serde(rename = "expr")]
    pub expression_text: String,
    pub kind: String,
    pub degree: Option<u64>,
    pub band_count: usize,
    pub bands: Vec<BandDoc>,
    pub verification: Option<VerificationSummary>,
}

impl SpectrumDocument {
    pub fn new(expression_text: &str, kind: OperatorKind, degree: Option<usize>, spectrum: &SpectrumSet) -> Self {
        let bands: Vec<BandDoc> = spectrum.bands().iter().map(|b| BandDoc { lo: b.lo, hi: b.hi }).collect();
        SpectrumDocument {
            expression_text: expression_text.to_owned(),
            kind: kind.name().to_owned(),
            degree: degree.map(|k| k as u64),
            band_count: bands.len(),
            bands,
            verification: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One `[lo, hi]` line per band, then the band count and degree.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for b in &self.bands {
            let _ = writeln!(out, "[{}, {}]", format_sig(b.lo, 12), format_sig(b.hi, 12));
        }
        let degree = self.degree.map_or_else(|| "unknown".to_owned(), |k| k.to_string());
        let _ = writeln!(out, "bands: {}  degree: {}", self.band_count, degree);
        out
    }
}

/// Formats `x` with `sig` significant digits, dropping trailing zeros, in the
/// manner of C's `%g`.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sig = sig.max(1);
    // the exponent after rounding to `sig` digits
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if exp < -5 || exp >= sig as i32 {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (sig as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_owned()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
