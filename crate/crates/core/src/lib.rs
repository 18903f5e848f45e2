//! Desk-scale toolkit for the noncommutative geometry of 2D κ-Minkowski space.
//!
//! The crate has two halves that cross-check each other:
//!
//! * an exact symbolic engine ([`hopf`]) for the extended momentum algebra
//!   T_κ = ⟨P₀, P₁, E, E⁻¹⟩ with its twisted coproduct, used to classify
//!   twisted-primitive elements and re-derive the unique Dirac operator with
//!   bounded twisted commutators;
//! * a numerical realization ([`algebra`], [`operators`], [`zeta`],
//!   [`real_structure`]) of the deformed function algebra in partial-Fourier
//!   representation, where the star product, the invariant weight ω, the
//!   modular operator Δ_ω = e^(−λP̂₀), the Dirac operator and the
//!   spectral-zeta residue c(s) are all computable on a grid.
//!
//! Numeric code is generic over the floating scalar through [`scalar::Real`];
//! the concrete aliases at the crate root fix `f64`, which is what the CLI
//! and the verification suites use. The symbolic engine works over exact
//! rationals with Laurent exponents in the deformation parameter λ and does
//! not depend on floating point at all.

pub mod algebra;
pub mod config;
pub mod hopf;
pub mod operators;
pub mod real_structure;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod zeta;

pub use scalar::Real;

/// Default floating scalar used by the CLI and the verification suites.
pub type Scalar = f64;
/// Complex value over the default scalar.
pub type C64 = num_complex::Complex<f64>;

/// Grid descriptor over the default scalar.
pub type GridSpec64 = algebra::GridSpec<f64>;
/// Partial-Fourier function over the default scalar.
pub type Function64 = algebra::PartialFourierFunction<f64>;
/// Two-component spinor over the default scalar.
pub type Spinor64 = operators::Spinor<f64>;
/// Momentum-space multiplier symbol over the default scalar.
pub type MomentumSymbol64 = operators::MomentumSymbol<f64>;
/// Zeta-suite parameters over the default scalar.
pub type ZetaParams64 = zeta::ZetaParams<f64>;
