//! The deformed algebra operations in partial-Fourier form.
//!
//! With φ_f(p₀, x₁) = (F₀f)(p₀, x₁) the operations read
//!
//! ```text
//! φ_{f⋆g}(q₀, x₁) = (1/2π) ∫ φ_f(p₀, x₁) φ_g(q₀−p₀, e^(−λp₀)x₁) dp₀
//! φ_{f*}(p₀, x₁)  = conj(φ_f(−p₀, e^(−λp₀)x₁))
//! φ_{Uf}(p₀, x₁)  = φ_f(p₀, e^(λp₀)x₁)
//! φ_{σᵗf}(p₀, x₁) = e^(−iλtp₀) φ_f(p₀, x₁)
//! ω(f)            = ∫ φ_f(0, x₁) dx₁
//! ```
//!
//! The p₀ convolution is a trapezoidal sum on the uniform grid (the
//! integrand has compact support, so the rule is spectrally accurate); the
//! scaled x₁ arguments are read through the local Lagrange resampler.

use super::function::{PartialFourierFunction, ResamplePlan};
use super::AlgebraError;
use crate::scalar::Real;
use num_complex::Complex;

type Pff<F> = PartialFourierFunction<F>;

/// Numeric knobs shared by the interpolating operations.
#[derive(Clone, Copy, Debug)]
pub struct NumericOpts {
    /// Lagrange stencil size for scaled x₁ reads (even; 4 = cubic).
    pub interp_order: usize,
    /// Relative mass the star product may drop past the p₀ window.
    pub support_overflow_tol: f64,
}

impl Default for NumericOpts {
    fn default() -> Self {
        Self {
            interp_order: 12,
            support_overflow_tol: 1e-9,
        }
    }
}

impl NumericOpts {
    pub fn with_order(interp_order: usize) -> Self {
        Self {
            interp_order,
            ..Self::default()
        }
    }
}

/// Generators of the extended momentum algebra acting on functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    P0,
    P1,
    E,
    EInverse,
}

pub fn star_product<F: Real>(f: &Pff<F>, g: &Pff<F>) -> Result<Pff<F>, AlgebraError> {
    star_product_opts(f, g, &NumericOpts::default())
}

/// Twisted convolution over the p₀ grid with interpolation in x₁ at the
/// scaled points e^(−λp₀)x₁.
///
/// Output q₀ support outside the grid is truncated; the truncated mass is
/// tracked and must stay below `opts.support_overflow_tol` relative to the
/// total, otherwise the grid is too small for this pair and an error is
/// returned.
pub fn star_product_opts<F: Real>(
    f: &Pff<F>,
    g: &Pff<F>,
    opts: &NumericOpts,
) -> Result<Pff<F>, AlgebraError> {
    let grid = *f.grid();
    if grid != *g.grid() {
        return Err(AlgebraError::GridMismatch);
    }
    let n = grid.n_p0;
    let nx = grid.n_x1;
    let lambda = grid.lambda;
    let weight = grid.dp() / (F::of(2.0) * F::PI());

    let supp_f = f.support_rows();
    let supp_g = g.support_rows();
    let mut out = Pff::zero(grid);
    let mut dropped = F::zero();
    let mut total = F::zero();
    let mut scaled_row = vec![Complex::new(F::zero(), F::zero()); nx];

    for &a in &supp_f {
        let p0_a = grid.p0(a);
        let scale = (-lambda * p0_a).exp();
        let plan = ResamplePlan::scaled(&grid, scale, opts.interp_order);
        let f_row = f.row(a);
        for &b in &supp_g {
            // p₀ of the output node: p0(a) + p0(b) = p0(a + b − n/2)
            let q = a as isize + b as isize - (n / 2) as isize;
            plan.apply(g.row(b), &mut scaled_row);
            if q >= 0 && (q as usize) < n {
                let out_row = out.row_mut(q as usize);
                for l in 0..nx {
                    let term = f_row[l] * scaled_row[l];
                    out_row[l] = out_row[l] + term * Complex::new(weight, F::zero());
                    total = total + term.re.abs() + term.im.abs();
                }
            } else {
                for l in 0..nx {
                    let term = f_row[l] * scaled_row[l];
                    let mass = term.re.abs() + term.im.abs();
                    dropped = dropped + mass;
                    total = total + mass;
                }
            }
        }
    }

    let tol = F::of(opts.support_overflow_tol);
    if dropped > tol * total.max(F::min_positive_value()) {
        return Err(AlgebraError::SupportOverflow {
            dropped: dropped.to_f64_lossy(),
            total: total.to_f64_lossy(),
        });
    }
    Ok(out)
}

/// Pointwise product of the position-space functions: the λ = 0 limit of
/// the star product, i.e. a plain p₀ convolution at fixed x₁.
pub fn pointwise_product<F: Real>(f: &Pff<F>, g: &Pff<F>) -> Result<Pff<F>, AlgebraError> {
    let flat = f.grid().with_lambda(F::zero());
    let f0 = reinterpret_on(f, flat);
    let g0 = reinterpret_on(g, flat);
    let prod = star_product_opts(&f0, &g0, &NumericOpts::default())?;
    Ok(reinterpret_on(&prod, *f.grid()))
}

fn reinterpret_on<F: Real>(f: &Pff<F>, grid: super::GridSpec<F>) -> Pff<F> {
    let mut out = Pff::zero(grid);
    out.values_mut().copy_from_slice(f.values());
    out
}

pub fn involution<F: Real>(f: &Pff<F>) -> Pff<F> {
    involution_opts(f, &NumericOpts::default())
}

/// f*: φ_{f*}(p₀, x₁) = conj(φ_f(−p₀, e^(−λp₀)x₁)).
///
/// At λ = 0 this is plain complex conjugation of the position-space
/// function; the operation is involutive up to interpolation error.
pub fn involution_opts<F: Real>(f: &Pff<F>, opts: &NumericOpts) -> Pff<F> {
    let grid = *f.grid();
    let mut out = Pff::zero(grid);
    for k in 0..grid.n_p0 {
        let Some(src) = grid.flip_p0(k) else { continue };
        if src >= grid.n_p0 {
            continue;
        }
        let scale = (-grid.lambda * grid.p0(k)).exp();
        let plan = ResamplePlan::scaled(&grid, scale, opts.interp_order);
        plan.apply(f.row(src), out.row_mut(k));
        for v in out.row_mut(k) {
            *v = v.conj();
        }
    }
    out
}

/// ω(f) = ∫ f d²x, read off the p₀ = 0 row.
pub fn weight_omega<F: Real>(f: &Pff<F>) -> Complex<F> {
    f.omega()
}

pub fn inner_product<F: Real>(f: &Pff<F>, g: &Pff<F>) -> Result<Complex<F>, AlgebraError> {
    inner_product_opts(f, g, &NumericOpts::default())
}

/// GNS inner product (f, g) = ω(f* ⋆ g).
pub fn inner_product_opts<F: Real>(
    f: &Pff<F>,
    g: &Pff<F>,
    opts: &NumericOpts,
) -> Result<Complex<F>, AlgebraError> {
    let fs = involution_opts(f, opts);
    Ok(weight_omega(&star_product_opts(&fs, g, opts)?))
}

pub fn unitary_u<F: Real>(f: &Pff<F>) -> Pff<F> {
    unitary_u_opts(f, &NumericOpts::default())
}

/// The GNS unitary U: φ_{Uf}(p₀, x₁) = φ_f(p₀, e^(λp₀)x₁).
pub fn unitary_u_opts<F: Real>(f: &Pff<F>, opts: &NumericOpts) -> Pff<F> {
    let lambda = f.grid().lambda;
    f.resample_x1_scaled(|p0| (lambda * p0).exp(), opts.interp_order)
}

pub fn unitary_u_inv<F: Real>(f: &Pff<F>) -> Pff<F> {
    unitary_u_inv_opts(f, &NumericOpts::default())
}

pub fn unitary_u_inv_opts<F: Real>(f: &Pff<F>, opts: &NumericOpts) -> Pff<F> {
    let lambda = f.grid().lambda;
    f.resample_x1_scaled(|p0| (-lambda * p0).exp(), opts.interp_order)
}

/// Action of the generators: P₀ and E^(±1) are exact p₀ multipliers, P₁ is
/// the spectral x₁ derivative −i∂₁.
pub fn act_generator<F: Real>(h: Generator, f: &Pff<F>) -> Pff<F> {
    let lambda = f.grid().lambda;
    match h {
        Generator::P0 => f.multiply_p0_rows(|p0| Complex::new(p0, F::zero())),
        Generator::E => f.multiply_p0_rows(|p0| Complex::new((-lambda * p0).exp(), F::zero())),
        Generator::EInverse => {
            f.multiply_p0_rows(|p0| Complex::new((lambda * p0).exp(), F::zero()))
        }
        Generator::P1 => f
            .x1_fourier_multiplier(|_, k| Complex::new(k, F::zero()))
            .expect("wavenumber multiplier is finite"),
    }
}

/// Modular flow σᵗ_ω (complex t allowed): multiply rows by e^(−iλtp₀).
///
/// At t = −i this reproduces the E action exactly (same multiplier);
/// ω(σᵗf) = ω(f) for every t since the p₀ = 0 row is fixed.
pub fn modular_flow<F: Real>(t: Complex<F>, f: &Pff<F>) -> Pff<F> {
    let lambda = f.grid().lambda;
    f.multiply_p0_rows(|p0| {
        let exponent = Complex::new(F::zero(), -lambda * p0) * t;
        exponent.exp()
    })
}

pub fn kms_defect<F: Real>(f: &Pff<F>, g: &Pff<F>) -> Result<F, AlgebraError> {
    kms_defect_opts(f, g, &NumericOpts::default())
}

/// Twisted-trace (KMS) defect |ω(f⋆g) − ω((E▷g)⋆f)| / max(1, |ω(f⋆g)|).
pub fn kms_defect_opts<F: Real>(
    f: &Pff<F>,
    g: &Pff<F>,
    opts: &NumericOpts,
) -> Result<F, AlgebraError> {
    let lhs = weight_omega(&star_product_opts(f, g, opts)?);
    let eg = act_generator(Generator::E, g);
    let rhs = weight_omega(&star_product_opts(&eg, f, opts)?);
    Ok((lhs - rhs).norm() / lhs.norm().max(F::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FamilyParams, GridSpec, TestFunctionFamily};

    fn grid(lambda: f64) -> GridSpec<f64> {
        GridSpec::new(6.0, 128, 20.0, 256, lambda).unwrap()
    }

    fn family(lambda: f64, seed: u64) -> TestFunctionFamily<f64> {
        TestFunctionFamily::new(grid(lambda), FamilyParams::default(), seed)
    }

    #[test]
    fn star_at_lambda_zero_is_pointwise_product() {
        let mut fam = family(0.0, 7);
        let f = fam.next();
        let g = fam.next();
        let fg = star_product(&f, &g).unwrap();
        let pw = pointwise_product(&f, &g).unwrap();
        let diff = fg.sub(&pw).max_abs();
        assert!(diff == 0.0, "identical code paths expected, diff={}", diff);
    }

    #[test]
    fn star_with_zero_is_zero() {
        let mut fam = family(0.5, 3);
        let f = fam.next();
        let z = PartialFourierFunction::zero(*f.grid());
        let fz = star_product(&f, &z).unwrap();
        assert_eq!(fz.max_abs(), 0.0);
    }

    #[test]
    fn involution_at_lambda_zero_is_conjugation() {
        // φ_{f̄}(p₀,x₁) = conj(φ_f(−p₀,x₁)); rows pair up exactly on the grid.
        let mut fam = family(0.0, 11);
        let f = fam.next();
        let fs = involution(&f);
        let g = f.grid().clone();
        for k in 1..g.n_p0 {
            let src = g.flip_p0(k).unwrap();
            for l in 0..g.n_x1 {
                let expect = f.get(src, l).conj();
                let got = fs.get(k, l);
                assert!((expect - got).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn involution_is_involutive() {
        let mut fam = family(0.5, 13);
        let f = fam.next();
        let ff = involution(&involution(&f));
        let defect = ff.sub(&f).max_abs() / f.max_abs();
        assert!(defect < 1e-6, "defect={}", defect);
    }

    #[test]
    fn star_involution_antihomomorphism() {
        let mut fam = family(0.5, 17);
        let f = fam.next();
        let g = fam.next();
        let lhs = involution(&star_product(&f, &g).unwrap());
        let rhs = star_product(&involution(&g), &involution(&f)).unwrap();
        let scale = f.max_abs() * g.max_abs();
        let defect = lhs.sub(&rhs).max_abs() / scale;
        assert!(defect < 1e-8, "defect={}", defect);
    }

    #[test]
    fn omega_invariances() {
        let mut fam = family(0.5, 19);
        let f = fam.next();
        let omega = weight_omega(&f);
        // ω(E▷f) = ω(f) exactly (multiplier equals 1 at p₀ = 0)
        let ef = act_generator(Generator::E, &f);
        assert_eq!(weight_omega(&ef), omega);
        // ω(P₀▷f) = 0 exactly
        let pf = act_generator(Generator::P0, &f);
        assert_eq!(weight_omega(&pf).norm(), 0.0);
        // ω(σ_t f) = ω(f) for complex t
        let sf = modular_flow(num_complex::Complex::new(0.7, -0.3), &f);
        assert_eq!(weight_omega(&sf), omega);
    }

    #[test]
    fn modular_flow_at_minus_i_is_e_action() {
        let mut fam = family(0.5, 23);
        let f = fam.next();
        let a = modular_flow(num_complex::Complex::new(0.0, -1.0), &f);
        let b = act_generator(Generator::E, &f);
        let defect = a.sub(&b).max_abs();
        assert!(defect < 1e-13 * f.max_abs(), "defect={}", defect);
    }

    #[test]
    fn kms_defect_small() {
        let mut fam = family(0.5, 29);
        let f = fam.next();
        let g = fam.next();
        let d = kms_defect(&f, &g).unwrap();
        assert!(d < 1e-8, "kms defect = {}", d);
    }

    #[test]
    fn inner_product_conjugate_symmetry() {
        let mut fam = family(0.5, 37);
        let f = fam.next();
        let g = fam.next();
        let fg = inner_product(&f, &g).unwrap();
        let gf = inner_product(&g, &f).unwrap();
        assert!((fg - gf.conj()).norm() < 1e-12 * fg.norm());
    }

    #[test]
    fn unitary_examples() {
        let mut fam = family(0.5, 41);
        let f = fam.next();
        // the p₀ = 0 slice is fixed, so ∫(Uf) d²x = ω(f) exactly
        assert_eq!(weight_omega(&unitary_u(&f)), weight_omega(&f));
        // U⁻¹U = id within interpolation tolerance
        let round = unitary_u_inv(&unitary_u(&f));
        assert!(round.sub(&f).max_abs() / f.max_abs() < 1e-6);
        // λ = 0: U is the identity
        let mut fam0 = family(0.0, 42);
        let h = fam0.next();
        assert_eq!(unitary_u(&h).sub(&h).max_abs(), 0.0);
    }

    #[test]
    fn twisted_leibniz_rule_for_p1() {
        // P₁▷(f⋆g) = (P₁▷f)⋆g + (E▷f)⋆(P₁▷g)
        let mut fam = family(0.5, 43);
        let f = fam.next();
        let g = fam.next();
        let lhs = act_generator(Generator::P1, &star_product(&f, &g).unwrap());
        let rhs = star_product(&act_generator(Generator::P1, &f), &g)
            .unwrap()
            .add(
                &star_product(
                    &act_generator(Generator::E, &f),
                    &act_generator(Generator::P1, &g),
                )
                .unwrap(),
            );
        let defect = lhs.sub(&rhs).max_abs() / lhs.max_abs();
        assert!(defect < 1e-6, "module property defect {}", defect);
    }

    #[test]
    fn antipode_star_rule_for_p0() {
        // (P₀▷f*)* = −P₀▷f, from S(P₀)* = −P₀
        let mut fam = family(0.5, 47);
        let f = fam.next();
        let lhs = involution(&act_generator(Generator::P0, &involution(&f)));
        let rhs = act_generator(Generator::P0, &f).scale(num_complex::Complex::new(-1.0, 0.0));
        let defect = lhs.sub(&rhs).max_abs() / rhs.max_abs();
        assert!(defect < 1e-6, "antipode-star defect {}", defect);
    }

    #[test]
    fn pairing_identity() {
        // ω(f⋆g*) = ∫ f ḡ d²x, the sesquilinear pairing in closed form
        let mut fam = family(0.5, 53);
        let f = fam.next();
        let g = fam.next();
        let lhs = weight_omega(&star_product(&f, &involution(&g)).unwrap());
        let grid = f.grid();
        let w = grid.dp() * grid.dx() / (2.0 * std::f64::consts::PI);
        let mut rhs = num_complex::Complex::new(0.0, 0.0);
        for (a, b) in f.values().iter().zip(g.values()) {
            rhs += a * b.conj();
        }
        rhs *= num_complex::Complex::new(w, 0.0);
        assert!(
            (lhs - rhs).norm() / rhs.norm() < 1e-8,
            "pairing defect {}",
            (lhs - rhs).norm() / rhs.norm()
        );
    }

    #[test]
    fn gns_positivity_and_isometry() {
        let mut fam = family(0.5, 31);
        let f = fam.next();
        let ip = inner_product(&f, &f).unwrap();
        assert!(ip.im.abs() < 1e-10 * ip.re.abs());
        assert!(ip.re > 0.0);
        // (f,f) = ‖Uf‖²_{L²}
        let uf = unitary_u(&f);
        let rel = (ip.re - uf.l2_norm_sq()).abs() / ip.re;
        assert!(rel < 1e-8, "isometry defect {}", rel);
    }

    #[test]
    fn support_overflow_detected() {
        // Functions spanning most of the p₀ window: the convolution spills.
        let g = grid(0.0);
        let wide = PartialFourierFunction::from_fn(g, |p, x| {
            let u = p / 5.5;
            let b = if u.abs() < 1.0 {
                (1.0 - 1.0 / (1.0 - u * u)).exp()
            } else {
                0.0
            };
            num_complex::Complex::new(b * (-x * x).exp(), 0.0)
        });
        match star_product(&wide, &wide) {
            Err(AlgebraError::SupportOverflow { .. }) => {}
            other => panic!("expected support overflow, got {:?}", other.map(|f| f.max_abs())),
        }
    }
}
