//! Momentum multipliers g(P̂₀, P̂₁) and the standard symbols.
//!
//! In the partial-Fourier representation P̂₀ acts as multiplication by p₀ on
//! the rows and P̂₁ = −i∂₁ acts as a Fourier multiplier in x₁; the two
//! commute, so a function g(P̂) acts by conjugating with the x₁ FFT and
//! multiplying the samples by g(p₀, κ).

use crate::algebra::{AlgebraError, PartialFourierFunction};
use crate::scalar::Real;
use num_complex::Complex;
use std::sync::Arc;

type Eval<F> = dyn Fn(F, F) -> Complex<F> + Send + Sync;

/// Scalar function of (p₀, p₁), evaluated lazily on whatever grid it meets.
#[derive(Clone)]
pub struct MomentumSymbol<F> {
    eval: Arc<Eval<F>>,
}

impl<F: Real> MomentumSymbol<F> {
    pub fn from_fn(f: impl Fn(F, F) -> Complex<F> + Send + Sync + 'static) -> Self {
        Self { eval: Arc::new(f) }
    }

    pub fn from_real_fn(f: impl Fn(F, F) -> F + Send + Sync + 'static) -> Self {
        Self::from_fn(move |p0, p1| Complex::new(f(p0, p1), F::zero()))
    }

    pub fn constant(c: Complex<F>) -> Self {
        Self::from_fn(move |_, _| c)
    }

    pub fn eval(&self, p0: F, p1: F) -> Complex<F> {
        (self.eval)(p0, p1)
    }

    /// Pointwise sum with `rhs` scaled by `c`.
    pub fn add_scaled(&self, rhs: &Self, c: Complex<F>) -> Self {
        let a = self.eval.clone();
        let b = rhs.eval.clone();
        Self::from_fn(move |p0, p1| a(p0, p1) + b(p0, p1) * c)
    }

    /// Pointwise product.
    pub fn product(&self, rhs: &Self) -> Self {
        let a = self.eval.clone();
        let b = rhs.eval.clone();
        Self::from_fn(move |p0, p1| a(p0, p1) * b(p0, p1))
    }

    // -- the standard symbols of this geometry --------------------------------

    /// D̂₀ = (1 − e^(−λp₀))/λ, the classical p₀ at λ = 0.
    pub fn dirac_d0(lambda: F) -> Self {
        Self::from_real_fn(move |p0, _| d0_value(lambda, p0))
    }

    /// D̂₁ = p₁.
    pub fn dirac_d1() -> Self {
        Self::from_real_fn(|_, p1| p1)
    }

    /// Modular operator Δ_ω = e^(−λp₀).
    pub fn modular(lambda: F) -> Self {
        Self::from_real_fn(move |p0, _| (-lambda * p0).exp())
    }

    /// Δ_ω⁻¹ = e^(λp₀).
    pub fn modular_inv(lambda: F) -> Self {
        Self::from_real_fn(move |p0, _| (lambda * p0).exp())
    }

    /// First Casimir C = (4/λ²)sinh²(λp₀/2) + e^(λp₀)p₁²; p² at λ = 0.
    pub fn casimir(lambda: F) -> Self {
        Self::from_real_fn(move |p0, p1| {
            if lambda == F::zero() {
                p0 * p0 + p1 * p1
            } else {
                let s = (lambda * p0 / F::of(2.0)).sinh();
                let four = F::of(4.0);
                four / (lambda * lambda) * s * s + (lambda * p0).exp() * p1 * p1
            }
        })
    }

    /// G^Δ_s(p) = e^(−λp₀)(λ⁻²(1−e^(−λp₀))² + p₁² + μ²)^(−s/2), the
    /// multiplier of Δ_ω(D²+μ²)^(−s/2); its momentum integral is c(s).
    pub fn g_delta(lambda: F, mu: F, s: F) -> Self {
        Self::from_real_fn(move |p0, p1| {
            let t = d0_value(lambda, p0);
            (-lambda * p0).exp() * (t * t + p1 * p1 + mu * mu).powf(-s / F::of(2.0))
        })
    }

    /// Equivariant components D₀^eq = (1/2λ)(E⁻¹−E) − (λ/2)E⁻¹P₁²,
    /// D₁^eq = E⁻¹P₁, with E ↦ e^(−λp₀). Classical limits p₀ and p₁.
    pub fn equivariant_dirac(lambda: F) -> (Self, Self) {
        let d0 = Self::from_real_fn(move |p0, p1| {
            if lambda == F::zero() {
                p0
            } else {
                (lambda * p0).sinh() / lambda
                    - lambda / F::of(2.0) * (lambda * p0).exp() * p1 * p1
            }
        });
        let d1 = Self::from_real_fn(move |p0, p1| {
            if lambda == F::zero() {
                p1
            } else {
                (lambda * p0).exp() * p1
            }
        });
        (d0, d1)
    }
}

/// (1 − e^(−λp₀))/λ through expm1, stable near λp₀ = 0.
pub(crate) fn d0_value<F: Real>(lambda: F, p0: F) -> F {
    if lambda == F::zero() {
        p0
    } else {
        -(-lambda * p0).exp_m1() / lambda
    }
}

/// Applies g(P̂) to a function: x₁-FFT, multiply by g(p₀, κ), transform back.
pub fn apply_multiplier<F: Real>(
    s: &MomentumSymbol<F>,
    f: &PartialFourierFunction<F>,
) -> Result<PartialFourierFunction<F>, AlgebraError> {
    f.x1_fourier_multiplier(|p0, k| s.eval(p0, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{act_generator, FamilyParams, Generator, GridSpec, TestFunctionFamily};

    fn grid(lambda: f64) -> GridSpec<f64> {
        GridSpec::new(6.0, 64, 20.0, 256, lambda).unwrap()
    }

    #[test]
    fn constant_symbol_is_identity() {
        let mut fam = TestFunctionFamily::new(grid(0.5), FamilyParams::default(), 1);
        let f = fam.next();
        let one = MomentumSymbol::constant(Complex::new(1.0, 0.0));
        let g = apply_multiplier(&one, &f).unwrap();
        let defect = g.sub(&f).max_abs();
        assert!(defect < 1e-13 * f.max_abs(), "defect={}", defect);
    }

    #[test]
    fn modular_symbol_reproduces_e_action() {
        let mut fam = TestFunctionFamily::new(grid(0.5), FamilyParams::default(), 2);
        let f = fam.next();
        let viasym = apply_multiplier(&MomentumSymbol::modular(0.5), &f).unwrap();
        let direct = act_generator(Generator::E, &f);
        let defect = viasym.sub(&direct).max_abs();
        assert!(defect < 1e-12 * f.max_abs(), "defect={}", defect);
    }

    #[test]
    fn p1_symbol_is_spectral_derivative() {
        // s = p₁ on a Gaussian row reproduces −i∂₁ against the analytic
        // derivative: −i ∂₁ e^(−x²/2) = i x e^(−x²/2).
        let g = grid(0.0);
        let f = PartialFourierFunction::from_fn(g, |p, x| {
            let b = if p.abs() < 1.0 {
                ((1.0 - 1.0 / (1.0 - p * p)) as f64).exp()
            } else {
                0.0
            };
            Complex::new(b * (-x * x / 2.0).exp(), 0.0)
        });
        let d = apply_multiplier(&MomentumSymbol::dirac_d1(), &f).unwrap();
        let k0 = g.zero_row();
        for l in 30..g.n_x1 - 30 {
            let x = g.x1(l);
            let expect = x * (-x * x / 2.0).exp();
            assert!((d.get(k0, l).im - expect).abs() < 1e-9);
            assert!(d.get(k0, l).re.abs() < 1e-9);
        }
    }

    #[test]
    fn casimir_reference_values() {
        let c = MomentumSymbol::casimir(0.7f64);
        assert_eq!(c.eval(0.0, 0.0).re, 0.0);
        // λ → 0: C(p) → p₀² + p₁²
        for &(p0, p1) in &[(0.4f64, -1.1), (2.0, 0.3)] {
            let mut prev = f64::INFINITY;
            for &lambda in &[1e-2f64, 1e-3, 1e-4] {
                let v = MomentumSymbol::casimir(lambda).eval(p0, p1).re;
                let gap = (v - (p0 * p0 + p1 * p1)).abs();
                assert!(gap < prev);
                prev = gap;
            }
        }
    }

    #[test]
    fn equivariant_symbols_classical_limit() {
        for &(p0, p1) in &[(0.5f64, -0.7), (-1.2, 1.6)] {
            let mut prev0 = f64::INFINITY;
            let mut prev1 = f64::INFINITY;
            for &lambda in &[1e-2f64, 1e-3, 1e-4] {
                let (d0, d1) = MomentumSymbol::equivariant_dirac(lambda);
                let g0 = (d0.eval(p0, p1).re - p0).abs();
                let g1 = (d1.eval(p0, p1).re - p1).abs();
                assert!(g0 < prev0 && g1 < prev1);
                prev0 = g0;
                prev1 = g1;
            }
        }
    }

    #[test]
    fn d0_symbol_classical_limit() {
        // (1 − e^(−λp₀))/λ → p₀ pointwise as λ → 0
        for &p0 in &[0.3f64, -1.7, 2.5] {
            let mut prev = f64::INFINITY;
            for &lambda in &[1e-2f64, 1e-4, 1e-6] {
                let gap: f64 = (d0_value(lambda, p0) - p0).abs();
                assert!(gap < prev);
                prev = gap;
            }
            assert_eq!(d0_value(0.0, p0), p0);
        }
    }
}
