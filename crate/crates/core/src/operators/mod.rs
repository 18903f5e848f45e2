//! Operators on H = H_r ⊗ ℂ²: Clifford structure, Dirac operator, Casimir,
//! the equivariant Dirac operator, twisted and untwisted commutators, and
//! the boundedness witnesses.
//!
//! Operator identities are checked at two separate levels:
//!
//! * pointwise symbol identities, where the operator equations are literally
//!   equations between momentum multipliers (D̂₀² + D̂₁² = e^(−λp₀)C and
//!   (D^eq)² = C + λ²C²/4 hold to machine precision there);
//! * applied-to-vector identities, where star products enter and the defect
//!   measures discretization, not mathematical content.

mod clifford;
mod dirac;
mod spinor;
mod symbol;

pub use clifford::{CliffordBasis, Mat2};
pub use dirac::{
    dirac_apply, dirac_apply_opts, factorized_twisted_commutator, pi_apply,
    twisted_commutator_apply, twisted_commutator_apply_opts, unboundedness_witness,
    untwisted_commutator_apply, WitnessLadder,
};
pub use spinor::Spinor;
pub use symbol::{apply_multiplier, MomentumSymbol};
