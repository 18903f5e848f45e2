//! The Dirac operator, twisted commutators and the boundedness witnesses.

use super::spinor::Spinor;
use super::symbol::d0_value;
use crate::algebra::{
    act_generator, star_product_opts, AlgebraError, Generator, NumericOpts,
    PartialFourierFunction,
};
use crate::scalar::Real;
use num_complex::Complex;

type Pff<F> = PartialFourierFunction<F>;

/// D = Γ⁰ρ(D₀) + Γ¹ρ(D₁) with D̂₀ = (1−e^(−λp₀))/λ and D̂₁ = p₁; at λ = 0
/// this is the classical Γ^μ P̂_μ. Componentwise:
/// (Dψ)₁ = (D̂₀ − iD̂₁)ψ₂, (Dψ)₂ = (D̂₀ + iD̂₁)ψ₁.
pub fn dirac_apply<F: Real>(psi: &Spinor<F>) -> Spinor<F> {
    dirac_apply_opts(psi).expect("Dirac symbols are finite")
}

pub fn dirac_apply_opts<F: Real>(psi: &Spinor<F>) -> Result<Spinor<F>, AlgebraError> {
    let lambda = psi.grid().lambda;
    let c1 = psi
        .c2
        .x1_fourier_multiplier(|p0, k| Complex::new(d0_value(lambda, p0), -k))?;
    let c2 = psi
        .c1
        .x1_fourier_multiplier(|p0, k| Complex::new(d0_value(lambda, p0), k))?;
    Ok(Spinor { c1, c2 })
}

/// π(f)ψ: componentwise left star multiplication.
pub fn pi_apply<F: Real>(
    f: &Pff<F>,
    psi: &Spinor<F>,
    opts: &NumericOpts,
) -> Result<Spinor<F>, AlgebraError> {
    Ok(Spinor {
        c1: star_product_opts(f, &psi.c1, opts)?,
        c2: star_product_opts(f, &psi.c2, opts)?,
    })
}

pub fn twisted_commutator_apply<F: Real>(
    f: &Pff<F>,
    psi: &Spinor<F>,
) -> Result<Spinor<F>, AlgebraError> {
    twisted_commutator_apply_opts(f, psi, &NumericOpts::default())
}

/// [D, π(f)]_σ ψ = Dπ(f)ψ − π(E▷f)Dψ with σ(f) = E▷f.
pub fn twisted_commutator_apply_opts<F: Real>(
    f: &Pff<F>,
    psi: &Spinor<F>,
    opts: &NumericOpts,
) -> Result<Spinor<F>, AlgebraError> {
    let d_pi = dirac_apply_opts(&pi_apply(f, psi, opts)?)?;
    let sigma_f = act_generator(Generator::E, f);
    let pi_d = pi_apply(&sigma_f, &dirac_apply_opts(psi)?, opts)?;
    Ok(d_pi.sub(&pi_d))
}

/// Ordinary (untwisted) commutator [D, π(f)]ψ.
pub fn untwisted_commutator_apply<F: Real>(
    f: &Pff<F>,
    psi: &Spinor<F>,
    opts: &NumericOpts,
) -> Result<Spinor<F>, AlgebraError> {
    let d_pi = dirac_apply_opts(&pi_apply(f, psi, opts)?)?;
    let pi_d = pi_apply(f, &dirac_apply_opts(psi)?, opts)?;
    Ok(d_pi.sub(&pi_d))
}

/// The factorized form Γ^μ π(D_μ▷f)ψ the twisted commutator must equal:
/// D₀▷f is the exact row multiplier (1−e^(−λp₀))/λ, D₁▷f = P₁▷f.
pub fn factorized_twisted_commutator<F: Real>(
    f: &Pff<F>,
    psi: &Spinor<F>,
    opts: &NumericOpts,
) -> Result<Spinor<F>, AlgebraError> {
    let lambda = f.grid().lambda;
    let g0 = f.multiply_p0_rows(|p0| Complex::new(d0_value(lambda, p0), F::zero()));
    let g1 = act_generator(Generator::P1, f);
    // Γ⁰π(g₀) + Γ¹π(g₁): component mixing with ∓i on the P₁ part.
    let i = Complex::new(F::zero(), F::one());
    let c1 = star_product_opts(&g0, &psi.c2, opts)?
        .add(&star_product_opts(&g1, &psi.c2, opts)?.scale(-i));
    let c2 = star_product_opts(&g0, &psi.c1, opts)?
        .add(&star_product_opts(&g1, &psi.c1, opts)?.scale(i));
    Ok(Spinor { c1, c2 })
}

/// Rayleigh ratios over a frequency ladder.
#[derive(Clone, Debug)]
pub struct WitnessLadder<F> {
    pub frequencies: Vec<F>,
    /// ‖[D, π(f)]ψ_k‖ / ‖ψ_k‖ — grows ~linearly in k for λ > 0.
    pub untwisted: Vec<F>,
    /// ‖[D, π(f)]_σ ψ_k‖ / ‖ψ_k‖ — stays bounded.
    pub twisted: Vec<F>,
}

/// Rayleigh-type boundedness witness: the test spinors ψ_k carry an
/// x₁-modulation e^(ikx₁), so ρ(P₁)ψ_k scales with k and any unbounded
/// ρ(P₁) admixture shows up as growth of the untwisted ratios.
pub fn unboundedness_witness<F: Real>(
    f: &Pff<F>,
    base: &Spinor<F>,
    frequencies: &[F],
    opts: &NumericOpts,
) -> Result<WitnessLadder<F>, AlgebraError> {
    let mut untwisted = Vec::with_capacity(frequencies.len());
    let mut twisted = Vec::with_capacity(frequencies.len());
    for &k in frequencies {
        let psi = base.modulate_x1(k);
        let norm = psi.norm_sq().sqrt();
        let u = untwisted_commutator_apply(f, &psi, opts)?;
        let t = twisted_commutator_apply_opts(f, &psi, opts)?;
        untwisted.push(u.norm_sq().sqrt() / norm);
        twisted.push(t.norm_sq().sqrt() / norm);
    }
    Ok(WitnessLadder {
        frequencies: frequencies.to_vec(),
        untwisted,
        twisted,
    })
}
