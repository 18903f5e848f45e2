//! Numerical realization of the deformed function algebra.
//!
//! An algebra element f is stored through its partial Fourier transform
//! φ_f(p₀, x₁) = (F₀f)(p₀, x₁) sampled on a uniform rectangular grid. This
//! representation is chosen because everything modular becomes an exact
//! multiplier on the p₀ rows:
//!
//! * E▷f and the modular operator Δ_ω multiply by e^(−λp₀),
//! * the modular flow σᵗ_ω multiplies by e^(−iλtp₀),
//! * the weight ω(f) is the x₁-integral of the p₀ = 0 row,
//! * the GNS unitary U rescales x₁ by e^(λp₀) row by row,
//!
//! so discretization error is confined to the x₁ direction (local Lagrange
//! resampling at the scaled points e^(∓λp₀)x₁) and to the trapezoidal p₀
//! convolution of the star product.
//!
//! Functions are expected to have compact p₀ support well inside the grid
//! and Schwartz x₁ decay; [`TestFunctionFamily`] generates such functions
//! (smooth compact bump in p₀ × Hermite-Gaussian in x₁).

mod family;
mod function;
mod grid;
mod io;
mod ops;

pub use family::{BumpProfile, FamilyParams, TestFunctionFamily};
pub use function::{PartialFourierFunction, ResamplePlan};
pub use grid::GridSpec;
pub use io::{export_function, import_function, FunctionFile};
pub use ops::{
    act_generator, inner_product, inner_product_opts, involution, involution_opts, kms_defect,
    kms_defect_opts, modular_flow, pointwise_product, star_product, star_product_opts, unitary_u,
    unitary_u_inv, unitary_u_inv_opts, unitary_u_opts, weight_omega, Generator, NumericOpts,
};

use thiserror::Error;

/// Errors from the numeric half of the crate.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("operands live on different grids")]
    GridMismatch,
    #[error("star-product support overflow: dropped mass {dropped:.3e} of {total:.3e}; the p0 window is too small for this pair")]
    SupportOverflow { dropped: f64, total: f64 },
    #[error("non-finite symbol value at (p0={p0}, p1={p1})")]
    NonFiniteSymbol { p0: f64, p1: f64 },
    #[error("function data i/o: {0}")]
    Io(String),
}
