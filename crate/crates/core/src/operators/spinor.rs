//! Two-component spinors over the reduced Hilbert space.

use crate::algebra::PartialFourierFunction;
use crate::scalar::Real;
use num_complex::Complex;

/// ψ = (ψ₁, ψ₂) ∈ H_r ⊗ ℂ², components on a shared grid.
#[derive(Clone, Debug)]
pub struct Spinor<F: Real> {
    pub c1: PartialFourierFunction<F>,
    pub c2: PartialFourierFunction<F>,
}

impl<F: Real> Spinor<F> {
    pub fn new(c1: PartialFourierFunction<F>, c2: PartialFourierFunction<F>) -> Self {
        assert_eq!(c1.grid(), c2.grid(), "spinor components on different grids");
        Self { c1, c2 }
    }

    pub fn zero(grid: crate::algebra::GridSpec<F>) -> Self {
        Self {
            c1: PartialFourierFunction::zero(grid),
            c2: PartialFourierFunction::zero(grid),
        }
    }

    pub fn grid(&self) -> &crate::algebra::GridSpec<F> {
        self.c1.grid()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            c1: self.c1.add(&rhs.c1),
            c2: self.c2.add(&rhs.c2),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self {
            c1: self.c1.sub(&rhs.c1),
            c2: self.c2.sub(&rhs.c2),
        }
    }

    pub fn scale(&self, c: Complex<F>) -> Self {
        Self {
            c1: self.c1.scale(c),
            c2: self.c2.scale(c),
        }
    }

    /// GNS norm squared: (ψ₁, ψ₁) + (ψ₂, ψ₂).
    pub fn norm_sq(&self) -> F {
        self.c1.gns_norm_sq() + self.c2.gns_norm_sq()
    }

    /// GNS inner product (φ, ψ) on H.
    pub fn inner(&self, rhs: &Self) -> Complex<F> {
        self.c1.gns_inner(&rhs.c1) + self.c2.gns_inner(&rhs.c2)
    }

    pub fn max_abs(&self) -> F {
        self.c1.max_abs().max(self.c2.max_abs())
    }

    /// Componentwise column modulation by e^(i k x₁).
    pub fn modulate_x1(&self, k: F) -> Self {
        let m = |x: F| Complex::new(F::zero(), k * x).exp();
        Self {
            c1: self.c1.multiply_x1_cols(m),
            c2: self.c2.multiply_x1_cols(m),
        }
    }
}
