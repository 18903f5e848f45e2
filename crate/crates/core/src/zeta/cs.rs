//! The zeta integrand c(s): closed form and independent quadrature.

use super::quad::integrate;
use super::special::{gamma_fn, gauss_2f1_half};
use super::ZetaError;
use crate::scalar::Real;

/// Quadrature controls for [`c_quadrature`]; window `None` means "derive
/// from the integrand asymptotics with a safety factor 2".
#[derive(Clone, Copy, Debug)]
pub struct QuadSpec<F> {
    pub tol_rel: F,
    pub max_panels: usize,
    /// ξ₀ window override (negative side, positive side).
    pub xi0_window: Option<(F, F)>,
    /// ξ₁ half-width override.
    pub xi1_halfwidth: Option<F>,
}

impl<F: Real> Default for QuadSpec<F> {
    fn default() -> Self {
        Self {
            tol_rel: F::of(1e-9),
            max_panels: 4000,
            xi0_window: None,
            xi1_halfwidth: None,
        }
    }
}

/// Parameters of the zeta suite. Trace-class statements need s > 2 and a
/// mass regulator μ > 0.
#[derive(Clone, Copy, Debug)]
pub struct ZetaParams<F> {
    pub lambda: F,
    pub mu: F,
    pub s: F,
    pub quad: QuadSpec<F>,
}

impl<F: Real> ZetaParams<F> {
    pub fn new(lambda: F, mu: F, s: F) -> Result<Self, ZetaError> {
        if !(lambda > F::zero()) {
            return Err(ZetaError::InvalidParams("lambda must be positive".into()));
        }
        if !(mu > F::zero()) {
            return Err(ZetaError::InvalidParams("mu must be positive".into()));
        }
        if !(s > F::of(2.0)) {
            return Err(ZetaError::InvalidS { s: s.to_f64_lossy() });
        }
        Ok(Self {
            lambda,
            mu,
            s,
            quad: QuadSpec::default(),
        })
    }

    pub fn with_s(mut self, s: F) -> Result<Self, ZetaError> {
        if !(s > F::of(2.0)) {
            return Err(ZetaError::InvalidS { s: s.to_f64_lossy() });
        }
        self.s = s;
        Ok(self)
    }
}

/// Closed form of c(s) through Γ ratios and ₂F₁(1/2, (s−1)/2, 3/2, −1/(λμ)²):
///
/// ```text
/// c(s) = (√π/(2π)²) · Γ((s−1)/2)/Γ(s/2) · λ^(s−2) (λμ)^(1−s)
///        · [ λμ·(√π/2)·Γ(s/2−1)/Γ((s−1)/2) + ₂F₁(1/2, (s−1)/2, 3/2, −1/(λ²μ²)) ]
/// ```
///
/// Errors within 1e−6 of the s = 2 pole of Γ(s/2−1).
pub fn c_closed_form<F: Real>(params: &ZetaParams<F>) -> Result<F, ZetaError> {
    let s = params.s;
    let two = F::of(2.0);
    if !(s > two) {
        return Err(ZetaError::InvalidS { s: s.to_f64_lossy() });
    }
    if s - two < F::of(1e-6) {
        return Err(ZetaError::PoleProximity {
            gap: (s - two).to_f64_lossy(),
        });
    }
    let lambda = params.lambda;
    let mu = params.mu;
    let lm = lambda * mu;
    let sqrt_pi = F::PI().sqrt();
    let four_pi_sq = F::of(4.0) * F::PI() * F::PI();

    let g_half = gamma_fn((s - F::one()) / two)?; // Γ((s−1)/2)
    let g_s2 = gamma_fn(s / two)?; // Γ(s/2)
    let g_pole = gamma_fn(s / two - F::one())?; // Γ(s/2−1)
    let f21 = gauss_2f1_half((s - F::one()) / two, -(lm * lm).recip())?;

    let bracket = lm * sqrt_pi / two * g_pole / g_half + f21;
    Ok(sqrt_pi / four_pi_sq * g_half / g_s2 * lambda.powf(s - two) * lm.powf(F::one() - s) * bracket)
}

/// The integrand A(ξ₀) = λ⁻²(1−e^(−λξ₀))² + μ², through expm1 for small λξ₀.
fn a_of_xi0<F: Real>(lambda: F, mu: F, xi0: F) -> F {
    let t = -(-lambda * xi0).exp_m1() / lambda; // (1−e^(−λξ₀))/λ
    t * t + mu * mu
}

/// Direct 2D quadrature of c(s) = ∫ G^Δ_s(ξ) d²ξ/(2π)², iterated adaptively
/// with analytic tail bounds:
///
/// * ξ₁ tail: (A+ξ₁²)^(−s/2) ≤ ξ₁^(−s), so the truncated mass past Ξ is at
///   most Ξ^(1−s)/(s−1) per unit e^(−λξ₀);
/// * ξ₀ → +∞: the inner integral tends to a constant ≤ πμ^(1−s), leaving
///   e^(−λξ₀) decay;
/// * ξ₀ → −∞: after the ξ₁ integration the integrand decays like
///   e^((s−2)λξ₀).
///
/// Windows are derived from these asymptotics with a safety factor 2, or
/// taken from [`QuadSpec`] overrides. This path never touches the Γ/₂F₁
/// implementations, so it is an independent cross-check of the closed form.
pub fn c_quadrature<F: Real>(params: &ZetaParams<F>) -> Result<F, ZetaError> {
    let s = params.s;
    let two = F::of(2.0);
    if !(s > two) {
        return Err(ZetaError::InvalidS { s: s.to_f64_lossy() });
    }
    let lambda = params.lambda;
    let mu = params.mu;
    let tol = params.quad.tol_rel;
    let one = F::one();
    let pi = F::PI();

    // Two passes: a crude pass fixes the scale, the second runs at the real
    // tolerance with windows sized against that scale.
    let mut value = F::zero();
    let mut achieved = F::infinity();
    for (pass_tol, safety) in [(F::of(1e-3), F::of(1.0)), (tol, F::of(2.0))] {
        let scale = if value == F::zero() { one } else { value.abs() };
        let tol_abs = pass_tol * scale;

        // ξ₀ windows from the asymptotics (safety factor on the log scale).
        let (t_neg, t_pos) = params.quad.xi0_window.unwrap_or_else(|| {
            // positive side: π μ^(1−s) e^(−λT)/λ ≤ tol_abs/4
            let t_pos = ((pi * mu.powf(one - s) / (lambda * tol_abs * F::of(0.25))).ln()
                / lambda)
                .max(one / lambda)
                * safety;
            // negative side: π λ^(s−2) 2^(s−1) e^(−(s−2)λT)/(s−2) ≤ tol_abs/4
            let amp = pi * lambda.powf(s - two) * two.powf(s - one) / (s - two);
            let t_neg = ((amp / (tol_abs * F::of(0.25))).ln() / ((s - two) * lambda))
                .max(two.ln() / lambda * two)
                * safety;
            (t_neg, t_pos)
        });

        // ξ₁ cut Ξ = R·√A: the relative inner tail obeys
        // tail/value ≤ R^(1−s)·2^(s/2)/(s−1), targeted at pass_tol/8. The
        // analytic tail estimate Ξ^(1−s)/(s−1) is added back to the value,
        // so only its own O(s/R²) relative slack counts as error.
        let r_factor = {
            let target = pass_tol * F::of(0.125);
            (target * (s - one) / two.powf(s / two))
                .powf((one - s).recip())
                .max(F::of(8.0))
        };

        let max_panels = params.quad.max_panels;
        let outer = integrate(
            |xi0: F| {
                let a = a_of_xi0(lambda, mu, xi0);
                let cut = params.quad.xi1_halfwidth.unwrap_or(r_factor * a.sqrt());
                let inner = integrate(
                    |xi1: F| (a + xi1 * xi1).powf(-s / two),
                    F::zero(),
                    cut,
                    F::zero(),
                    pass_tol * F::of(0.125),
                    max_panels,
                );
                let tail = cut.powf(one - s) / (s - one);
                (-lambda * xi0).exp() * two * (inner.value + tail)
            },
            -t_neg,
            t_pos,
            tol_abs * F::of(0.25),
            pass_tol * F::of(0.25),
            max_panels,
        );

        let four_pi_sq = F::of(4.0) * pi * pi;
        value = outer.value / four_pi_sq;
        // outer quadrature error + the inner relative share + window tails
        achieved = (outer.error + pass_tol * F::of(0.25) * outer.value.abs()
            + tol_abs * F::of(0.5))
            / four_pi_sq;
    }

    let requested = tol * value.abs().max(F::min_positive_value());
    if !(achieved <= requested * F::of(20.0)) {
        return Err(ZetaError::ToleranceNotMet {
            value: value.to_f64_lossy(),
            achieved: achieved.to_f64_lossy(),
            requested: requested.to_f64_lossy(),
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_matches_quadrature() {
        for &(lambda, mu, s) in &[(0.5f64, 1.0, 3.0), (0.3, 0.5, 2.5), (1.0, 2.0, 4.0)] {
            let params = ZetaParams::new(lambda, mu, s).unwrap();
            let closed = c_closed_form(&params).unwrap();
            let quad = c_quadrature(&params).unwrap();
            let gap = (closed - quad).abs() / closed.abs();
            assert!(
                gap < 1e-6,
                "λ={} μ={} s={}: closed {} vs quad {} (gap {:.2e})",
                lambda,
                mu,
                s,
                closed,
                quad,
                gap
            );
        }
    }

    #[test]
    fn residue_limit_quarter_pi() {
        // (s−2)·c(s) → 1/(4π), independent of λ and μ
        let expect = 0.25 / std::f64::consts::PI;
        for &(lambda, mu) in &[(0.5f64, 1.0), (0.3, 2.0), (1.0, 0.5)] {
            let mut prev = f64::INFINITY;
            for &eps in &[1e-2f64, 1e-3, 1e-4] {
                let params = ZetaParams::new(lambda, mu, 2.0 + eps).unwrap();
                let v = eps * c_closed_form(&params).unwrap();
                let defect = (v - expect).abs() / expect;
                assert!(defect < prev, "λ={} μ={} ε={}", lambda, mu, eps);
                prev = defect;
            }
            assert!(prev < 1e-3);
        }
    }

    #[test]
    fn c_decreases_in_s() {
        let base = ZetaParams::new(0.5, 1.0, 2.5).unwrap();
        let mut prev = f64::INFINITY;
        for &s in &[2.5, 3.0, 4.0, 6.0, 9.0] {
            let v = c_closed_form(&base.with_s(s).unwrap()).unwrap();
            assert!(v < prev && v > 0.0, "s={} v={}", s, v);
            prev = v;
        }
    }

    #[test]
    fn mu_scaling_matches_prefactor() {
        // at large λμ the bracket tends to 1·(…); check the (λμ)^(1−s)
        // scaling against the quadrature across a μ ratio
        let p1 = ZetaParams::new(0.5f64, 40.0, 3.0).unwrap();
        let p2 = ZetaParams::new(0.5f64, 80.0, 3.0).unwrap();
        let r_closed = c_closed_form(&p1).unwrap() / c_closed_form(&p2).unwrap();
        let r_quad = c_quadrature(&p1).unwrap() / c_quadrature(&p2).unwrap();
        assert!((r_closed - r_quad).abs() / r_closed < 1e-5);
    }

    #[test]
    fn pole_guard() {
        assert!(matches!(
            ZetaParams::new(0.5, 1.0, 2.0 + 1e-9)
                .and_then(|p| c_closed_form(&p)),
            Err(ZetaError::PoleProximity { .. })
        ));
        assert!(ZetaParams::new(0.5, 1.0, 1.9).is_err());
    }
}
