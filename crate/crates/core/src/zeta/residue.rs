//! The residue suite: lim_{s→2} (s−2) Φ(π(f)(D²+μ²)^(−s/2)) = ω(f)/(2π).
//!
//! The weighted trace factorizes as Φ(π(f)(D²+μ²)^(−s/2)) = 2·ω(f)·c(s)
//! (modular conjugation moves Δ_ω next to the resolvent and leaves ω(f)
//! invariant; the 2 is the spinor-bundle dimension, applied exactly once
//! here). Residues are extracted by evaluating (s−2)·2·ω(f)·c(s) on an
//! ε-ladder and extrapolating polynomially to ε = 0, never differentiating
//! through the Γ pole.

use super::cs::{c_closed_form, ZetaParams};
use super::ZetaError;
use crate::algebra::PartialFourierFunction;
use crate::scalar::Real;
use num_complex::Complex;
use serde::Serialize;

/// Polynomial (Neville) extrapolation of (ε_i, g_i) to ε = 0.
pub fn neville_extrapolate<F: Real>(points: &[(F, F)]) -> F {
    let n = points.len();
    assert!(n >= 1);
    let mut p: Vec<F> = points.iter().map(|&(_, g)| g).collect();
    for level in 1..n {
        for i in 0..n - level {
            let (xi, _) = points[i];
            let (xj, _) = points[i + level];
            // value at 0 of the interpolant through levels below
            p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
        }
    }
    p[0]
}

/// One fixture's residue record.
#[derive(Clone, Debug, Serialize)]
pub struct ResidueEntry {
    pub fixture: String,
    pub omega_re: f64,
    pub omega_im: f64,
    /// (ε, (s−2)·2·ω(f)·c(2+ε)) samples, real and imaginary parts.
    pub samples: Vec<(f64, f64, f64)>,
    pub extrapolated_re: f64,
    pub extrapolated_im: f64,
    /// |extrapolated / (ω(f)/2π) − 1|; the headline defect.
    pub ratio_defect: f64,
}

/// Evaluates the residue ladder for one algebra element.
///
/// Needs at least 3 epsilons (all > 0) for a stable extrapolation.
pub fn phi_residue<F: Real>(
    f: &PartialFourierFunction<F>,
    name: &str,
    params: &ZetaParams<F>,
    epsilons: &[F],
) -> Result<ResidueEntry, ZetaError> {
    if epsilons.len() < 3 {
        return Err(ZetaError::InvalidParams(
            "residue extrapolation needs at least 3 epsilons".into(),
        ));
    }
    if epsilons.iter().any(|&e| !(e > F::zero())) {
        return Err(ZetaError::InvalidParams("epsilons must be positive".into()));
    }
    let omega = f.omega();
    let two = F::of(2.0);
    let mut samples = Vec::with_capacity(epsilons.len());
    let mut pts_re = Vec::with_capacity(epsilons.len());
    let mut pts_im = Vec::with_capacity(epsilons.len());
    for &eps in epsilons {
        let p = ZetaParams {
            s: two + eps,
            ..*params
        };
        let c = c_closed_form(&p)?;
        let value = omega * Complex::new(eps * two * c, F::zero());
        samples.push((
            eps.to_f64_lossy(),
            value.re.to_f64_lossy(),
            value.im.to_f64_lossy(),
        ));
        pts_re.push((eps, value.re));
        pts_im.push((eps, value.im));
    }
    let ex_re = neville_extrapolate(&pts_re);
    let ex_im = neville_extrapolate(&pts_im);

    let expected = omega / Complex::new(two * F::PI(), F::zero());
    let ratio_defect = if expected.norm() > F::zero() {
        (Complex::new(ex_re, ex_im) - expected).norm() / expected.norm()
    } else {
        Complex::new(ex_re, ex_im).norm()
    };

    Ok(ResidueEntry {
        fixture: name.to_string(),
        omega_re: omega.re.to_f64_lossy(),
        omega_im: omega.im.to_f64_lossy(),
        samples,
        extrapolated_re: ex_re.to_f64_lossy(),
        extrapolated_im: ex_im.to_f64_lossy(),
        ratio_defect: ratio_defect.to_f64_lossy(),
    })
}

/// One row of the c(s) comparison table.
#[derive(Clone, Debug, Serialize)]
pub struct CSample {
    pub lambda: f64,
    pub mu: f64,
    pub s: f64,
    pub c_closed: f64,
    pub c_quadrature: f64,
    pub rel_gap: f64,
}

/// Aggregate record for the spectral suite.
#[derive(Clone, Debug, Serialize, Default)]
pub struct ZetaReport {
    pub c_samples: Vec<CSample>,
    pub residues: Vec<ResidueEntry>,
    /// extrapolated (s−2)c(s) against 1/(4π), per (λ, μ) pair.
    pub c_residue_defects: Vec<(f64, f64, f64)>,
}
