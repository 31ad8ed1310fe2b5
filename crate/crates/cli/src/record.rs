//! Persisted run records.

use std::fs;
use std::io;
use std::path::Path;

use invtoep_core::catalog::Expected;
use invtoep_core::{BoundReport, ClassKind, CoeffBundle, Complex64, FunctionalKind, PhiSpec, VerificationReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub phi: String,
    pub class: ClassKind,
    pub functional: FunctionalKind,
    pub expected: Expected,
    pub computed: f64,
    /// Exact value of the bound formula, as `p/q`, when the Taylor data is rational.
    pub computed_exact: Option<String>,
    pub attained: f64,
    pub applicable: bool,
    #[serde(rename = "match")]
    pub matched: bool,
    pub notes: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub param: f64,
    pub bound: f64,
    pub applicable: bool,
    pub attained: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionalValue {
    pub functional: FunctionalKind,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalListing {
    pub class: ClassKind,
    pub phi: PhiSpec,
    pub label: String,
    /// `a1..aN`
    pub a: Vec<Complex64>,
    pub bundle: CoeffBundle,
    pub functionals: Vec<FunctionalValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum Report {
    Bound(BoundReport),
    Verification(VerificationReport),
    Table(Vec<TableRow>),
    Sweep(Vec<SweepRow>),
    Extremal(ExtremalListing),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    /// RFC 3339, UTC.
    pub timestamp: String,
    pub command: Vec<String>,
    pub version: String,
    pub report: Report,
}

impl RunRecord {
    pub fn new(command: Vec<String>, report: Report) -> Self {
        Self {
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
            command,
            version: env!("CARGO_PKG_VERSION").to_string(),
            report,
        }
    }

    pub fn write(&self, path: &Path) -> io::Result<()> {
        let mut text = serde_json::to_string_pretty(self).map_err(io::Error::other)?;
        text.push('\n');
        fs::write(path, text)
    }

    pub fn read(path: &Path) -> io::Result<Self> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(io::Error::other)
    }
}
