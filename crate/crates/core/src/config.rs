//! Run configuration: versioned JSON schema with validation.
//!
//! Unknown keys are rejected; every tolerance the suites use is surfaced
//! here and overridable. Defaults match the documented acceptance targets.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Which verification suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    Hopf,
    Algebra,
    Operators,
    Spectral,
    Real,
}

impl SuiteName {
    pub const ALL: [SuiteName; 5] = [
        SuiteName::Hopf,
        SuiteName::Algebra,
        SuiteName::Operators,
        SuiteName::Spectral,
        SuiteName::Real,
    ];

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "hopf" => Some(Self::Hopf),
            "algebra" => Some(Self::Algebra),
            "operators" => Some(Self::Operators),
            "spectral" => Some(Self::Spectral),
            "real" => Some(Self::Real),
            _ => None,
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Hopf => "hopf",
            Self::Algebra => "algebra",
            Self::Operators => "operators",
            Self::Spectral => "spectral",
            Self::Real => "real",
        };
        write!(f, "{}", s)
    }
}

/// Grid block of the configuration (λ lives at top level).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridConfig {
    pub p0_max: f64,
    pub n_p0: usize,
    pub x1_max: f64,
    pub n_x1: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            p0_max: 6.0,
            n_p0: 256,
            x1_max: 20.0,
            n_x1: 256,
        }
    }
}

/// Top-level run configuration.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    /// Schema version; this crate writes and reads version 1.
    pub version: u32,
    pub lambda: f64,
    pub mu: f64,
    pub grid: GridConfig,
    /// Named tolerance overrides; missing names fall back to the defaults
    /// in [`RunConfig::tolerance`].
    pub tolerances: BTreeMap<String, f64>,
    pub suites: Vec<SuiteName>,
    /// ε-ladder for the residue extrapolation.
    pub epsilons: Vec<f64>,
    /// s samples for the zeta table.
    pub s_list: Vec<f64>,
    pub seed: u64,
    /// Lagrange stencil size for scaled x₁ reads (even, ≥ 4).
    pub interp_order: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            version: 1,
            lambda: 0.5,
            mu: 1.0,
            grid: GridConfig::default(),
            tolerances: BTreeMap::new(),
            suites: SuiteName::ALL.to_vec(),
            epsilons: vec![1e-2, 1e-3, 1e-4],
            s_list: vec![2.5, 3.0, 4.0],
            seed: 7,
            interp_order: 12,
        }
    }
}

/// Default tolerances, exposed so reports can echo them.
pub const TOLERANCE_DEFAULTS: &[(&str, f64)] = &[
    ("star-associativity", 1e-6),
    ("classical-limit-band", 0.2),
    ("star-involution", 1e-8),
    ("involution-involutive", 1e-6),
    ("gns-positivity", 1e-12),
    ("u-isometry", 1e-8),
    ("intertwining", 1e-7),
    ("kms-defect", 1e-8),
    ("modular-conjugation", 1e-10),
    ("clifford", 0.0),
    ("casimir-symbol-ulp", 4.0),
    ("eq-casimir-symbol", 1e-12),
    ("twisted-factorization", 1e-6),
    ("twist-compatibility", 1e-12),
    ("dsq-twisted-commutation", 1e-10),
    ("dirac-symmetry", 1e-12),
    ("untwisted-growth-min", 5.0),
    ("twisted-variation-max", 1.5),
    ("c-gap", 1e-6),
    ("c-residue", 1e-3),
    ("phi-residue", 1e-2),
    ("residue-linearity", 1e-8),
    ("hs-ratio-low", 1.8),
    ("hs-ratio-high", 2.2),
    ("lambda0-ratio-max", 1.1),
    ("kernel-trace", 1e-4),
    ("real-structure", 1e-6),
    ("jd-multiplier", 1e-13),
];

impl RunConfig {
    /// Tolerance lookup: explicit override, else documented default.
    pub fn tolerance(&self, name: &str) -> f64 {
        if let Some(v) = self.tolerances.get(name) {
            return *v;
        }
        TOLERANCE_DEFAULTS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
            .unwrap_or_else(|| panic!("unknown tolerance name {:?}", name))
    }

    /// Field-naming validation; the CLI maps errors to exit code 2.
    pub fn validate(&self) -> Result<(), String> {
        if self.version != 1 {
            return Err(format!("version: unsupported schema version {}", self.version));
        }
        if !self.lambda.is_finite() || self.lambda < 0.0 {
            return Err(format!(
                "lambda: must be finite and non-negative (got {})",
                self.lambda
            ));
        }
        if !self.mu.is_finite() || self.mu <= 0.0 {
            return Err(format!("mu: must be finite and positive (got {})", self.mu));
        }
        if self.grid.p0_max <= 0.0 || self.grid.x1_max <= 0.0 {
            return Err("grid: p0_max and x1_max must be positive".into());
        }
        for (name, n) in [("n_p0", self.grid.n_p0), ("n_x1", self.grid.n_x1)] {
            if n < 8 || n % 2 != 0 {
                return Err(format!("grid.{}: must be an even integer >= 8 (got {})", name, n));
            }
        }
        if self.interp_order < 4 || self.interp_order % 2 != 0 || self.interp_order > 16 {
            return Err(format!(
                "interp_order: must be even, between 4 and 16 (got {})",
                self.interp_order
            ));
        }
        if self.epsilons.iter().any(|&e| !(e > 0.0)) {
            return Err("epsilons: all entries must be positive".into());
        }
        if self.s_list.iter().any(|&s| !(s > 2.0)) {
            return Err("s_list: all entries must exceed 2".into());
        }
        for (name, value) in &self.tolerances {
            if TOLERANCE_DEFAULTS.iter().all(|(n, _)| n != name) {
                return Err(format!("tolerances: unknown name {:?}", name));
            }
            if !value.is_finite() || *value < 0.0 {
                return Err(format!("tolerances.{}: must be finite and >= 0", name));
            }
        }
        Ok(())
    }

    /// Parses and validates a JSON configuration.
    pub fn from_json(text: &str) -> Result<Self, String> {
        let cfg: RunConfig =
            serde_json::from_str(text).map_err(|e| format!("config parse error: {}", e))?;
        cfg.validate()?;
        Ok(cfg)
    }
}
