//! Summability analysis: the zeta integrand c(s), its closed form and
//! quadrature cross-check, Schwartz kernels, Hilbert–Schmidt witnesses and
//! the residue suite that exhibits spectral dimension 2.
//!
//! The central object is the per-component momentum integral
//!
//! ```text
//! c(s) = (1/(2π)²) ∫ e^(−λξ₀) (λ⁻²(1−e^(−λξ₀))² + ξ₁² + μ²)^(−s/2) d²ξ,
//! ```
//!
//! finite for s > 2, with a simple pole at s = 2 of residue 1/(4π)
//! independent of λ and μ. The weighted trace of π(f)(D²+μ²)^(−s/2)
//! factorizes as 2·ω(f)·c(s) (the 2 counts the spinor components), so the
//! residue at s = 2 recovers ω(f)/(2π).

mod cs;
mod kernel;
mod quad;
mod residue;
mod special;

pub use cs::{c_closed_form, c_quadrature, QuadSpec, ZetaParams};
pub use kernel::{
    gs_norm_sq_lambda0, hs_norm_factorized, truncated_gs_norm_sq, HsNormWitness, SchwartzKernel,
};
pub use quad::{integrate, integrate_complex, QuadResult};
pub use residue::{neville_extrapolate, phi_residue, CSample, ResidueEntry, ZetaReport};
pub use special::{gamma_fn, gauss_2f1_half};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ZetaError {
    #[error("gamma pole at x = {x}")]
    GammaPole { x: f64 },
    #[error("zeta quantities need s > 2 (got s = {s})")]
    InvalidS { s: f64 },
    #[error("s − 2 = {gap:.3e} is closer to the pole than 1e-6; the Γ(s/2−1) factor dominates everything")]
    PoleProximity { gap: f64 },
    #[error("the transformed hypergeometric series did not converge")]
    HypergeometricDivergence,
    #[error("quadrature tolerance not met: value {value:.6e}, achieved error {achieved:.3e}, requested {requested:.3e}")]
    ToleranceNotMet {
        value: f64,
        achieved: f64,
        requested: f64,
    },
    #[error("symbol window too small: boundary mass {boundary:.3e} of {scale:.3e}")]
    WindowTooSmall { boundary: f64, scale: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}
