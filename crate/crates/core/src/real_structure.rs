//! The real structure J = iΓ⁰∘J̃ and the five (deformed) defining
//! conditions.
//!
//! J̃f = σ^ω_{i/2}(f*) is an antilinear isometry of the reduced Hilbert
//! space; in partial-Fourier form
//!
//! ```text
//! φ_{J̃f}(p₀, x₁) = e^(λp₀/2) · conj(φ_f(−p₀, e^(−λp₀)x₁)).
//! ```
//!
//! On spinors, (Jψ)₁ = −i·J̃ψ₂ and (Jψ)₂ = −i·J̃ψ₁. The λ = 0 case
//! reproduces the classical KO-dimension n = 2 table (J² = 1, JD = −DJ,
//! Jχ = −χJ); at λ > 0 the commutation with D deforms to JD = −Δ_ω⁻¹DJ,
//! which at multiplier level is the exact identity
//! (multiplier of J̃D̂_μJ̃) = −e^(λp₀)·(multiplier of D̂_μ).

use crate::algebra::{
    involution_opts, modular_flow, star_product_opts, AlgebraError, NumericOpts,
    PartialFourierFunction, TestFunctionFamily,
};
use crate::operators::{dirac_apply_opts, pi_apply, MomentumSymbol, Spinor};
use crate::scalar::Real;
use num_complex::Complex;

type Pff<F> = PartialFourierFunction<F>;

/// Mod-8 sign tables of the classical real-structure classification;
/// n = 2 selects ε = −1, ε′ = 1.
pub struct KOTable;

impl KOTable {
    pub const EPSILON: [i8; 8] = [1, 1, -1, -1, -1, -1, 1, 1];
    pub const EPSILON_PRIME: [i8; 8] = [1, -1, 1, 1, 1, -1, 1, 1];

    pub fn epsilon(n: usize) -> i8 {
        Self::EPSILON[n % 8]
    }

    pub fn epsilon_prime(n: usize) -> i8 {
        Self::EPSILON_PRIME[n % 8]
    }
}

/// J̃f = σ^ω_{i/2}(f*): antilinear, isometric for the GNS inner product.
pub fn j_tilde<F: Real>(f: &Pff<F>, opts: &NumericOpts) -> Pff<F> {
    let half_i = Complex::new(F::zero(), F::of(0.5));
    modular_flow(half_i, &involution_opts(f, opts))
}

/// J = iΓ⁰∘J̃ on spinors: component swap with −i factors.
pub fn j_real<F: Real>(psi: &Spinor<F>, opts: &NumericOpts) -> Spinor<F> {
    let minus_i = Complex::new(F::zero(), -F::one());
    Spinor {
        c1: j_tilde(&psi.c2, opts).scale(minus_i),
        c2: j_tilde(&psi.c1, opts).scale(minus_i),
    }
}

/// Componentwise grading χ = diag(1, −1).
pub fn chi_apply<F: Real>(psi: &Spinor<F>) -> Spinor<F> {
    Spinor {
        c1: psi.c1.clone(),
        c2: psi.c2.scale(Complex::new(-F::one(), F::zero())),
    }
}

/// Result of one real-structure condition.
#[derive(Clone, Debug)]
pub struct ConditionResult {
    pub name: &'static str,
    pub defect: f64,
}

/// Runs the five conditions on seeded fixtures; defects are relative.
///
/// 1. J² = 1
/// 2. JDψ + Δ_ω⁻¹DJψ = 0
/// 3. commutant: [π(f), Jπ(g*)J⁻¹] = 0, checked through the
///    right-multiplication identity J̃π(f*)J̃ψ = ψ⋆σ^ω_{i/2}(f) plus star
///    associativity (right multiplication commutes with left)
/// 4. Jχ = −χJ
/// 5. first order: [[D, π(f)]_σ, Jπ(g)J⁻¹]ψ = 0
pub fn real_structure_suite<F: Real>(
    family: &mut TestFunctionFamily<F>,
    opts: &NumericOpts,
) -> Result<Vec<ConditionResult>, AlgebraError> {
    let f = family.next();
    let g = family.next();
    let psi = Spinor::new(family.next(), family.next());
    let lambda = family.grid().lambda;

    let psi_scale = psi.norm_sq().sqrt();
    let rel = |defect: F, scale: F| (defect / scale.max(F::min_positive_value())).to_f64_lossy();

    // (1) J² = 1
    let jj = j_real(&j_real(&psi, opts), opts);
    let c1 = rel(jj.sub(&psi).norm_sq().sqrt(), psi_scale);

    // (2) JDψ + Δ_ω⁻¹DJψ = 0
    let jd = j_real(&dirac_apply_opts(&psi)?, opts);
    let modular_inv = MomentumSymbol::modular_inv(lambda);
    let dj = dirac_apply_opts(&j_real(&psi, opts))?;
    let dinv_dj = Spinor {
        c1: crate::operators::apply_multiplier(&modular_inv, &dj.c1)?,
        c2: crate::operators::apply_multiplier(&modular_inv, &dj.c2)?,
    };
    let scale2 = jd.norm_sq().sqrt();
    let c2 = rel(jd.add(&dinv_dj).norm_sq().sqrt(), scale2);

    // (3) right-multiplication identity and commutant
    let c3 = {
        let h = family.next();
        // J̃ π(f*) J̃ h = h ⋆ σ^ω_{i/2}(f)
        let fstar = involution_opts(&f, opts);
        let lhs = j_tilde(&star_product_opts(&fstar, &j_tilde(&h, opts), opts)?, opts);
        let sigma_f = modular_flow(Complex::new(F::zero(), F::of(0.5)), &f);
        let rhs = star_product_opts(&h, &sigma_f, opts)?;
        let right_mult = lhs.sub(&rhs).max_abs() / rhs.max_abs().max(F::min_positive_value());
        // left and right multiplication commute: f ⋆ (h ⋆ k) = (f ⋆ h) ⋆ k
        let k = modular_flow(Complex::new(F::zero(), F::of(0.5)), &g);
        let assoc_l = star_product_opts(&f, &star_product_opts(&h, &k, opts)?, opts)?;
        let assoc_r = star_product_opts(&star_product_opts(&f, &h, opts)?, &k, opts)?;
        let assoc = assoc_l.sub(&assoc_r).max_abs()
            / (f.max_abs() * h.max_abs() * k.max_abs()).max(F::min_positive_value());
        right_mult.max(assoc).to_f64_lossy()
    };

    // (4) Jχ + χJ = 0 (matrix-level, exact)
    let a = j_real(&chi_apply(&psi), opts);
    let b = chi_apply(&j_real(&psi, opts));
    let c4 = rel(a.add(&b).norm_sq().sqrt(), psi_scale);

    // (5) first-order condition
    let c5 = {
        let t = crate::operators::twisted_commutator_apply_opts(&f, &psi, opts)?;
        let r = |s: &Spinor<F>| -> Result<Spinor<F>, AlgebraError> {
            Ok(j_real(&pi_apply(&g, &j_real(s, opts), opts)?, opts))
        };
        let lhs = crate::operators::twisted_commutator_apply_opts(&f, &r(&psi)?, opts)?;
        let rhs = r(&t)?;
        let scale = t.norm_sq().sqrt().max(F::min_positive_value());
        rel(lhs.sub(&rhs).norm_sq().sqrt(), scale)
    };

    Ok(vec![
        ConditionResult { name: "j-squared-one", defect: c1 },
        ConditionResult { name: "jd-modular-anticommutation", defect: c2 },
        ConditionResult { name: "commutant-right-multiplication", defect: c3 },
        ConditionResult { name: "j-chi-anticommutation", defect: c4 },
        ConditionResult { name: "first-order-condition", defect: c5 },
    ])
}

/// Family ranges with tighter p₀ support: J̃ stretches rows by e^(λ|p₀|),
/// so the real-structure fixtures keep λ·|p₀| ≤ 0.75 for λ ≤ 1.
pub fn narrow_support_params() -> crate::algebra::FamilyParams {
    crate::algebra::FamilyParams {
        p0_width: (0.25, 0.45),
        p0_center: (-0.3, 0.3),
        ..Default::default()
    }
}

/// Multiplier-level content of condition (2): for both Dirac components the
/// J̃-conjugated symbol equals −e^(λp₀)·(the symbol). Returns the largest
/// pointwise defect over a probe lattice (machine precision expected).
pub fn jd_multiplier_defect<F: Real>(lambda: F) -> F {
    let d0 = MomentumSymbol::dirac_d0(lambda);
    let d1 = MomentumSymbol::dirac_d1();
    let mut worst = F::zero();
    for i in 0..41 {
        let p0 = F::of(0.3) * F::of(i as f64 - 20.0);
        for j in 0..21 {
            let p1 = F::of(0.5) * F::of(j as f64 - 10.0);
            for sym in [&d0, &d1] {
                // J̃ g(P̂) J̃ has symbol conj(g(−p₀, −e^(λp₀)p₁))
                let conj_sym = sym.eval(-p0, -(lambda * p0).exp() * p1).conj();
                let target = -sym.eval(p0, p1) * Complex::new((lambda * p0).exp(), F::zero());
                let denom = target.norm().max(F::one());
                worst = worst.max((conj_sym - target).norm() / denom);
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{weight_omega, FamilyParams, GridSpec};

    fn family(lambda: f64, seed: u64) -> TestFunctionFamily<f64> {
        let grid = GridSpec::new(6.0, 128, 24.0, 512, lambda).unwrap();
        TestFunctionFamily::new(grid, narrow_support_params(), seed)
    }

    #[test]
    fn j_tilde_at_lambda_zero_is_conjugation() {
        let mut fam = family(0.0, 3);
        let f = fam.next();
        let jf = j_tilde(&f, &NumericOpts::default());
        // position-space conjugation: φ_{f̄}(p₀,x₁) = conj(φ_f(−p₀,x₁))
        let g = *f.grid();
        for k in 1..g.n_p0 {
            let src = g.flip_p0(k).unwrap();
            for l in (0..g.n_x1).step_by(7) {
                assert!((jf.get(k, l) - f.get(src, l).conj()).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn j_tilde_is_involutive_and_isometric() {
        let opts = NumericOpts::default();
        let mut fam = family(0.5, 5);
        let f = fam.next();
        let g = fam.next();
        let jjf = j_tilde(&j_tilde(&f, &opts), &opts);
        assert!(jjf.sub(&f).max_abs() / f.max_abs() < 1e-7);
        // (J̃f, J̃g) = (g, f)
        let lhs = j_tilde(&f, &opts).gns_inner(&j_tilde(&g, &opts));
        let rhs = g.gns_inner(&f);
        assert!(
            (lhs - rhs).norm() / rhs.norm() < 1e-7,
            "lhs={} rhs={}",
            lhs,
            rhs
        );
    }

    #[test]
    fn antipode_trace_on_p1() {
        // J̃ρ(P₁)J̃ψ = −ρ(E⁻¹)ρ(P₁)ψ
        use crate::algebra::{act_generator, Generator};
        let opts = NumericOpts::default();
        let mut fam = family(0.5, 7);
        let psi = fam.next();
        let lhs = j_tilde(&act_generator(Generator::P1, &j_tilde(&psi, &opts)), &opts);
        let rhs = act_generator(
            Generator::EInverse,
            &act_generator(Generator::P1, &psi),
        )
        .scale(Complex::new(-1.0, 0.0));
        let defect = lhs.sub(&rhs).max_abs() / rhs.max_abs();
        assert!(defect < 1e-7, "defect={}", defect);
    }

    #[test]
    fn j_is_antilinear_isometry_on_spinors() {
        // (Jφ, Jψ) = (ψ, φ)
        use crate::operators::Spinor;
        let opts = NumericOpts::default();
        let mut fam = family(0.5, 17);
        let phi = Spinor::new(fam.next(), fam.next());
        let psi = Spinor::new(fam.next(), fam.next());
        let lhs = j_real(&phi, &opts).inner(&j_real(&psi, &opts));
        let rhs = psi.inner(&phi);
        assert!(
            (lhs - rhs).norm() / rhs.norm() < 1e-7,
            "J isometry defect {}",
            (lhs - rhs).norm() / rhs.norm()
        );
        // antilinearity: J(cψ) = c̄ Jψ
        let c = Complex::new(0.6, -1.1);
        let a = j_real(&psi.scale(c), &opts);
        let b = j_real(&psi, &opts).scale(c.conj());
        assert!(a.sub(&b).max_abs() < 1e-12 * b.max_abs());
    }

    #[test]
    fn suite_passes_across_lambdas() {
        let opts = NumericOpts::default();
        for &lambda in &[0.0, 0.3, 1.0] {
            let mut fam = family(lambda, 11);
            let results = real_structure_suite(&mut fam, &opts).unwrap();
            for r in &results {
                assert!(
                    r.defect < 1e-6,
                    "λ={}: condition {} defect {}",
                    lambda,
                    r.name,
                    r.defect
                );
            }
        }
    }

    #[test]
    fn multiplier_identity_machine_precision() {
        for &lambda in &[0.0, 0.3, 1.0] {
            let d = jd_multiplier_defect(lambda);
            assert!(d < 1e-14, "λ={} defect={}", lambda, d);
        }
    }

    #[test]
    fn j_preserves_omega_structure() {
        // sanity: J̃ maps algebra elements to algebra elements
        let mut fam = family(0.3, 13);
        let f = fam.next();
        let jf = j_tilde(&f, &NumericOpts::default());
        assert!(jf.is_finite());
        assert!(weight_omega(&jf).norm() > 0.0);
    }
}
