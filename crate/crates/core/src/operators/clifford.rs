//! The 2×2 Clifford representation and grading.

use crate::scalar::Real;
use num_complex::Complex;

/// Dense 2×2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2<F>(pub [[Complex<F>; 2]; 2]);

impl<F: Real> Mat2<F> {
    pub fn zero() -> Self {
        let z = Complex::new(F::zero(), F::zero());
        Mat2([[z, z], [z, z]])
    }

    pub fn identity() -> Self {
        let z = Complex::new(F::zero(), F::zero());
        let o = Complex::new(F::one(), F::zero());
        Mat2([[o, z], [z, o]])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Complex::new(F::zero(), F::zero());
                for k in 0..2 {
                    acc = acc + self.0[i][k] * rhs.0[k][j];
                }
                out.0[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = out.0[i][j] + rhs.0[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: Complex<F>) -> Self {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = out.0[i][j] * c;
            }
        }
        out
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }

    pub fn max_abs(&self) -> F {
        let mut m = F::zero();
        for i in 0..2 {
            for j in 0..2 {
                m = m.max(self.0[i][j].norm());
            }
        }
        m
    }
}

/// Γ⁰ = [[0,1],[1,0]], Γ¹ = [[0,−i],[i,0]], χ = −iΓ⁰Γ¹ = [[1,0],[0,−1]].
///
/// These satisfy {Γ^μ, Γ^ν} = 2δ^{μν}, χ² = 1 and {χ, Γ^μ} = 0 exactly.
pub struct CliffordBasis<F> {
    pub gamma0: Mat2<F>,
    pub gamma1: Mat2<F>,
    pub chi: Mat2<F>,
}

impl<F: Real> CliffordBasis<F> {
    pub fn standard() -> Self {
        let z = Complex::new(F::zero(), F::zero());
        let o = Complex::new(F::one(), F::zero());
        let i = Complex::new(F::zero(), F::one());
        CliffordBasis {
            gamma0: Mat2([[z, o], [o, z]]),
            gamma1: Mat2([[z, -i], [i, z]]),
            chi: Mat2([[o, z], [z, -o]]),
        }
    }

    /// Largest violation over all defining identities (exactly 0 for the
    /// standard basis in exact arithmetic; ≤ 1 ulp in floats).
    pub fn identity_defect(&self) -> F {
        let two = Mat2::identity().scale(Complex::new(F::of(2.0), F::zero()));
        let mut defect = F::zero();
        // {Γ^μ, Γ^ν} = 2δ^{μν}
        defect = defect.max(
            self.gamma0
                .anticommutator(&self.gamma0)
                .add(&two.scale(Complex::new(-F::one(), F::zero())))
                .max_abs(),
        );
        defect = defect.max(
            self.gamma1
                .anticommutator(&self.gamma1)
                .add(&two.scale(Complex::new(-F::one(), F::zero())))
                .max_abs(),
        );
        defect = defect.max(self.gamma0.anticommutator(&self.gamma1).max_abs());
        // χ = −iΓ⁰Γ¹
        let minus_i = Complex::new(F::zero(), -F::one());
        let chi = self.gamma0.mul(&self.gamma1).scale(minus_i);
        let mut chi_diff = chi;
        for i in 0..2 {
            for j in 0..2 {
                chi_diff.0[i][j] = chi_diff.0[i][j] - self.chi.0[i][j];
            }
        }
        defect = defect.max(chi_diff.max_abs());
        // χ² = 1, {χ, Γ^μ} = 0
        let mut chi_sq = self.chi.mul(&self.chi);
        for i in 0..2 {
            for j in 0..2 {
                chi_sq.0[i][j] = chi_sq.0[i][j] - Mat2::identity().0[i][j];
            }
        }
        defect = defect.max(chi_sq.max_abs());
        defect = defect.max(self.chi.anticommutator(&self.gamma0).max_abs());
        defect = defect.max(self.chi.anticommutator(&self.gamma1).max_abs());
        defect
    }
}
