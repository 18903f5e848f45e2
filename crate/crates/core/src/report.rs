//! Verification report types.
//!
//! Reports are deterministic for a fixed configuration and seed: properties
//! appear in a fixed order and no wall-clock data is embedded (runtimes are
//! printed to the console instead).

use serde::Serialize;

/// One verified property.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    /// Suite the property belongs to.
    pub suite: String,
    /// Stable identifier of the mathematical identity being checked.
    pub anchor: String,
    /// Human-readable statement.
    pub name: String,
    /// Measured defect (0 means exact).
    pub defect: f64,
    /// Tolerance the defect is compared against.
    pub tolerance: f64,
    pub pass: bool,
}

impl PropertyResult {
    pub fn new(
        suite: &str,
        anchor: &str,
        name: &str,
        defect: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            suite: suite.to_string(),
            anchor: anchor.to_string(),
            name: name.to_string(),
            defect,
            tolerance,
            pass: defect.is_finite() && defect <= tolerance,
        }
    }

    /// For witnesses phrased as "quantity must exceed a floor".
    pub fn at_least(suite: &str, anchor: &str, name: &str, value: f64, floor: f64) -> Self {
        Self {
            suite: suite.to_string(),
            anchor: anchor.to_string(),
            name: name.to_string(),
            defect: value,
            tolerance: floor,
            pass: value.is_finite() && value >= floor,
        }
    }
}

/// Aggregate of one `verify` run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub version: u32,
    pub seed: u64,
    pub lambda: f64,
    pub mu: f64,
    pub suites: Vec<String>,
    pub properties: Vec<PropertyResult>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn new(
        version: u32,
        seed: u64,
        lambda: f64,
        mu: f64,
        suites: Vec<String>,
        properties: Vec<PropertyResult>,
    ) -> Self {
        let all_pass = properties.iter().all(|p| p.pass);
        Self {
            version,
            seed,
            lambda,
            mu,
            suites,
            properties,
            all_pass,
        }
    }
}
