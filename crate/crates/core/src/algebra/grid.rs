//! Uniform sampling grid for partial-Fourier functions.

use super::AlgebraError;
use crate::scalar::Real;
use serde::{Deserialize, Serialize};

/// Grid descriptor: p₀ ∈ [−p0_max, p0_max), x₁ ∈ [−x1_max, x1_max), both
/// uniform with the right endpoint excluded, plus the deformation length λ.
///
/// Invariants (checked by [`GridSpec::new`]): node counts are even and at
/// least 8, so the p₀ grid always contains 0 as the node n_p0/2 (the weight
/// ω reads that row exactly); λ ≥ 0, widths positive.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec<F> {
    pub p0_max: F,
    pub n_p0: usize,
    pub x1_max: F,
    pub n_x1: usize,
    pub lambda: F,
}

impl<F: Real> GridSpec<F> {
    pub fn new(
        p0_max: F,
        n_p0: usize,
        x1_max: F,
        n_x1: usize,
        lambda: F,
    ) -> Result<Self, AlgebraError> {
        if !(p0_max > F::zero()) {
            return Err(AlgebraError::InvalidGrid("p0_max must be positive".into()));
        }
        if !(x1_max > F::zero()) {
            return Err(AlgebraError::InvalidGrid("x1_max must be positive".into()));
        }
        if lambda < F::zero() || !lambda.is_finite() {
            return Err(AlgebraError::InvalidGrid(
                "lambda must be finite and non-negative".into(),
            ));
        }
        for (name, n) in [("n_p0", n_p0), ("n_x1", n_x1)] {
            if n < 8 || n % 2 != 0 {
                return Err(AlgebraError::InvalidGrid(format!(
                    "{} must be an even integer >= 8 (got {})",
                    name, n
                )));
            }
        }
        Ok(Self {
            p0_max,
            n_p0,
            x1_max,
            n_x1,
            lambda,
        })
    }

    /// Grid with a different deformation length, same sampling.
    pub fn with_lambda(mut self, lambda: F) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn dp(&self) -> F {
        F::of(2.0) * self.p0_max / F::from_usize(self.n_p0).unwrap()
    }

    pub fn dx(&self) -> F {
        F::of(2.0) * self.x1_max / F::from_usize(self.n_x1).unwrap()
    }

    /// p₀ node k, in the centered form (k − n/2)·Δp so that the zero row is
    /// exactly 0 and p₀(n−k) = −p₀(k) holds in floating point.
    pub fn p0(&self, k: usize) -> F {
        let c = k as isize - (self.n_p0 / 2) as isize;
        F::of(c as f64) * self.dp()
    }

    /// x₁ node l, centered like [`Self::p0`].
    pub fn x1(&self, l: usize) -> F {
        let c = l as isize - (self.n_x1 / 2) as isize;
        F::of(c as f64) * self.dx()
    }

    /// Index of the p₀ = 0 row.
    pub fn zero_row(&self) -> usize {
        self.n_p0 / 2
    }

    /// Index of −p₀(k); `None` for k = 0 (+p0_max is not a node).
    pub fn flip_p0(&self, k: usize) -> Option<usize> {
        if k == 0 {
            None
        } else {
            Some(self.n_p0 - k)
        }
    }

    /// x₁-Fourier wavenumber of FFT bin m (negative branch for m ≥ n/2).
    pub fn wavenumber(&self, m: usize) -> F {
        let n = self.n_x1;
        let signed = if m < n / 2 {
            m as isize
        } else {
            m as isize - n as isize
        };
        F::PI() / self.x1_max * F::of(signed as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_row_is_exact() {
        let g = GridSpec::<f64>::new(6.0, 256, 20.0, 64, 0.5).unwrap();
        assert_eq!(g.p0(g.zero_row()), 0.0);
        assert_eq!(g.flip_p0(0), None);
        let k = 10;
        assert_eq!(g.p0(g.flip_p0(k).unwrap()), -g.p0(k));
    }

    #[test]
    fn invalid_grids_rejected() {
        assert!(GridSpec::<f64>::new(6.0, 256, 20.0, 64, -0.1).is_err());
        assert!(GridSpec::<f64>::new(6.0, 7, 20.0, 64, 0.1).is_err());
        assert!(GridSpec::<f64>::new(6.0, 10, 20.0, 9, 0.1).is_err());
        assert!(GridSpec::<f64>::new(0.0, 256, 20.0, 64, 0.1).is_err());
    }
}
