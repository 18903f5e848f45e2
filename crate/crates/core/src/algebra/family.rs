//! Seeded generator of desk-scale algebra elements.
//!
//! Profiles are smooth compact bumps in p₀ times Hermite-Gaussian packets in
//! x₁ with a phase modulation:
//!
//! ```text
//! φ(p₀, x₁) = A · w((p₀−b)/a) · H_h((x₁−c)/s) · e^(−(x₁−c)²/(2s²)) · e^(i m x₁),
//! w(u) = exp(1 − 1/(1−u²)) on |u| < 1, 0 outside.
//! ```
//!
//! Exact compact p₀ support and Schwartz x₁ decay make every draw a valid
//! algebra element. The default parameter ranges keep the support narrow
//! enough that the x₁ rescalings e^(±λp₀) stay harmless on the default grid
//! for λ up to 1.

use super::function::PartialFourierFunction;
use super::grid::GridSpec;
use crate::scalar::Real;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parameter ranges for the generated profiles (uniform draws).
#[derive(Clone, Copy, Debug)]
pub struct FamilyParams {
    pub p0_width: (f64, f64),
    pub p0_center: (f64, f64),
    pub x1_width: (f64, f64),
    pub x1_center: (f64, f64),
    pub x1_freq: (f64, f64),
    pub amp: (f64, f64),
    pub max_hermite: u8,
}

impl Default for FamilyParams {
    fn default() -> Self {
        Self {
            p0_width: (0.35, 0.7),
            p0_center: (-0.5, 0.5),
            x1_width: (0.9, 1.1),
            x1_center: (-0.5, 0.5),
            x1_freq: (-1.0, 1.0),
            amp: (0.5, 1.5),
            max_hermite: 2,
        }
    }
}

/// One concrete profile.
#[derive(Clone, Copy, Debug)]
pub struct BumpProfile {
    pub amp: Complex<f64>,
    pub p0_width: f64,
    pub p0_center: f64,
    pub x1_width: f64,
    pub x1_center: f64,
    pub x1_freq: f64,
    pub hermite: u8,
}

impl BumpProfile {
    pub fn eval<F: Real>(&self, p0: F, x1: F) -> Complex<F> {
        let u = (p0.to_f64_lossy() - self.p0_center) / self.p0_width;
        if u.abs() >= 1.0 {
            return Complex::new(F::zero(), F::zero());
        }
        let bump = (1.0 - 1.0 / (1.0 - u * u)).exp();
        let y = (x1.to_f64_lossy() - self.x1_center) / self.x1_width;
        let h = match self.hermite {
            0 => 1.0,
            1 => y,
            _ => y * y - 1.0,
        };
        let envelope = bump * h * (-y * y / 2.0).exp();
        let phase = self.x1_freq * x1.to_f64_lossy();
        let v = self.amp * Complex::new(0.0, phase).exp() * envelope;
        Complex::new(F::of(v.re), F::of(v.im))
    }
}

/// Deterministic family of algebra elements on a fixed grid.
pub struct TestFunctionFamily<F: Real> {
    grid: GridSpec<F>,
    params: FamilyParams,
    rng: ChaCha8Rng,
}

impl<F: Real> TestFunctionFamily<F> {
    pub fn new(grid: GridSpec<F>, params: FamilyParams, seed: u64) -> Self {
        Self {
            grid,
            params,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn grid(&self) -> &GridSpec<F> {
        &self.grid
    }

    pub fn next_profile(&mut self) -> BumpProfile {
        let p = &self.params;
        let r = &mut self.rng;
        let phase = r.gen_range(0.0..std::f64::consts::TAU);
        let amp = r.gen_range(p.amp.0..p.amp.1) * Complex::new(0.0, phase).exp();
        BumpProfile {
            amp,
            p0_width: r.gen_range(p.p0_width.0..p.p0_width.1),
            p0_center: r.gen_range(p.p0_center.0..p.p0_center.1),
            x1_width: r.gen_range(p.x1_width.0..p.x1_width.1),
            x1_center: r.gen_range(p.x1_center.0..p.x1_center.1),
            x1_freq: r.gen_range(p.x1_freq.0..p.x1_freq.1),
            hermite: r.gen_range(0..=p.max_hermite),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> PartialFourierFunction<F> {
        let profile = self.next_profile();
        PartialFourierFunction::from_fn(self.grid, |p0, x1| profile.eval(p0, x1))
    }

    pub fn take(&mut self, n: usize) -> Vec<PartialFourierFunction<F>> {
        (0..n).map(|_| self.next()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_valid_algebra_elements() {
        let grid = GridSpec::<f64>::new(6.0, 128, 20.0, 256, 1.0).unwrap();
        let mut fam = TestFunctionFamily::new(grid, FamilyParams::default(), 42);
        for _ in 0..5 {
            let f = fam.next();
            assert!(f.is_finite());
            assert!(f.max_abs() > 0.0);
            // compact p₀ support strictly inside the window
            let supp = f.support_rows();
            assert!(*supp.first().unwrap() > 0);
            assert!(*supp.last().unwrap() < grid.n_p0 - 1);
            // Schwartz tail well below everything we tolerate
            assert!(f.boundary_decay() < 1e-12 * f.max_abs());
        }
    }

    #[test]
    fn same_seed_same_function() {
        let grid = GridSpec::<f64>::new(6.0, 64, 10.0, 64, 0.3).unwrap();
        let a = TestFunctionFamily::<f64>::new(grid, FamilyParams::default(), 9).next();
        let b = TestFunctionFamily::<f64>::new(grid, FamilyParams::default(), 9).next();
        assert_eq!(a.values(), b.values());
    }
}
