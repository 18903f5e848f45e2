//! Fixture import/export: JSON header plus base64 row-major complex data.
//!
//! The payload is little-endian f64 pairs (re, im) in p₀-row-major order,
//! matching the in-memory layout. Used by the CLI for grid fixtures.

use super::function::PartialFourierFunction;
use super::grid::GridSpec;
use super::AlgebraError;
use crate::scalar::Real;
use base64::engine::general_purpose::STANDARD as B64;
use base64::Engine;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// On-disk form of a function: grid header plus base64 payload.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub grid: GridSpec<f64>,
    pub data_b64: String,
}

pub fn export_function<F: Real>(f: &PartialFourierFunction<F>) -> FunctionFile {
    let grid = GridSpec {
        p0_max: f.grid().p0_max.to_f64_lossy(),
        n_p0: f.grid().n_p0,
        x1_max: f.grid().x1_max.to_f64_lossy(),
        n_x1: f.grid().n_x1,
        lambda: f.grid().lambda.to_f64_lossy(),
    };
    let mut bytes = Vec::with_capacity(f.values().len() * 16);
    for v in f.values() {
        bytes.extend_from_slice(&v.re.to_f64_lossy().to_le_bytes());
        bytes.extend_from_slice(&v.im.to_f64_lossy().to_le_bytes());
    }
    FunctionFile {
        grid,
        data_b64: B64.encode(bytes),
    }
}

pub fn import_function(file: &FunctionFile) -> Result<PartialFourierFunction<f64>, AlgebraError> {
    let grid = GridSpec::new(
        file.grid.p0_max,
        file.grid.n_p0,
        file.grid.x1_max,
        file.grid.n_x1,
        file.grid.lambda,
    )?;
    let bytes = B64
        .decode(&file.data_b64)
        .map_err(|e| AlgebraError::Io(format!("base64: {}", e)))?;
    let expected = grid.n_p0 * grid.n_x1 * 16;
    if bytes.len() != expected {
        return Err(AlgebraError::Io(format!(
            "payload has {} bytes, grid wants {}",
            bytes.len(),
            expected
        )));
    }
    let mut out = PartialFourierFunction::zero(grid);
    for (i, v) in out.values_mut().iter_mut().enumerate() {
        let re = f64::from_le_bytes(bytes[16 * i..16 * i + 8].try_into().unwrap());
        let im = f64::from_le_bytes(bytes[16 * i + 8..16 * i + 16].try_into().unwrap());
        if !re.is_finite() || !im.is_finite() {
            return Err(AlgebraError::Io("non-finite sample in payload".into()));
        }
        *v = Complex::new(re, im);
    }
    Ok(out)
}
