//! Verification suites: every numbered invariant of the library, runnable
//! from the CLI and from the acceptance tests, each producing one
//! [`PropertyResult`] with a stable anchor, a measured defect and the
//! tolerance it was compared against.

use crate::algebra::{
    act_generator, involution_opts, kms_defect_opts, modular_flow, pointwise_product,
    star_product_opts, weight_omega, FamilyParams, Generator, GridSpec, NumericOpts,
    PartialFourierFunction, TestFunctionFamily,
};
use crate::config::{RunConfig, SuiteName};
use crate::hopf::{
    classify_twisted_primitives, solve_dirac_uniqueness, HopfElement, LaurentScalar, Monomial,
    Rat,
};
use crate::operators::{
    dirac_apply, factorized_twisted_commutator, unboundedness_witness, CliffordBasis,
    MomentumSymbol, Spinor,
};
use crate::real_structure::{jd_multiplier_defect, real_structure_suite};
use crate::report::{PropertyResult, VerificationReport};
use crate::zeta::{
    c_closed_form, c_quadrature, gs_norm_sq_lambda0, hs_norm_factorized, neville_extrapolate,
    phi_residue, CSample, SchwartzKernel, ZetaParams, ZetaReport,
};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Pff = PartialFourierFunction<f64>;

/// Runs the configured suites and assembles the deterministic report.
pub fn run_all(cfg: &RunConfig) -> VerificationReport {
    let mut properties = Vec::new();
    for suite in &cfg.suites {
        properties.extend(run_suite(*suite, cfg));
    }
    VerificationReport::new(
        cfg.version,
        cfg.seed,
        cfg.lambda,
        cfg.mu,
        cfg.suites.iter().map(|s| s.to_string()).collect(),
        properties,
    )
}

pub fn run_suite(suite: SuiteName, cfg: &RunConfig) -> Vec<PropertyResult> {
    match suite {
        SuiteName::Hopf => hopf_suite(cfg),
        SuiteName::Algebra => algebra_suite(cfg),
        SuiteName::Operators => operators_suite(cfg),
        SuiteName::Spectral => spectral_suite(cfg),
        SuiteName::Real => real_suite(cfg),
    }
}

fn opts(cfg: &RunConfig) -> NumericOpts {
    NumericOpts::with_order(cfg.interp_order)
}

fn grid(cfg: &RunConfig, lambda: f64) -> GridSpec<f64> {
    GridSpec::new(
        cfg.grid.p0_max,
        cfg.grid.n_p0,
        cfg.grid.x1_max,
        cfg.grid.n_x1,
        lambda,
    )
    .expect("validated configuration")
}

/// Converts an operation error into a failing property instead of aborting
/// the whole run.
fn fail(suite: &str, anchor: &str, name: &str, err: impl std::fmt::Display) -> PropertyResult {
    PropertyResult::new(suite, anchor, &format!("{} [error: {}]", name, err), f64::INFINITY, 0.0)
}

// ---------------------------------------------------------------------------
// hopf
// ---------------------------------------------------------------------------

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let mut num = rng.gen_range(-6i64..=6);
    if num == 0 {
        num = 1;
    }
    let den = rng.gen_range(1i64..=4);
    Rat::new(num.into(), den.into())
}

/// Seeded random element within the degree/E window.
pub fn random_hopf_element(rng: &mut ChaCha8Rng, max_degree: u32, max_e: i32) -> HopfElement {
    let terms = rng.gen_range(1..=4usize);
    let mut out = HopfElement::zero();
    for _ in 0..terms {
        let i = rng.gen_range(0..=max_degree);
        let j = rng.gen_range(0..=(max_degree - i));
        let k = rng.gen_range(-max_e..=max_e);
        let exp = rng.gen_range(-2i64..=2);
        out.add_scaled_monomial(
            Monomial::new(i, j, k),
            &LaurentScalar::term(random_rat(rng), exp),
        );
    }
    out
}

fn expected_classification(m: i32) -> Vec<HopfElement> {
    let one = HopfElement::one();
    match m {
        0 => vec![one, HopfElement::p0()],
        1 => vec![one, HopfElement::e_pow(1), HopfElement::p1()],
        _ => vec![one, HopfElement::e_pow(m)],
    }
}

fn hopf_suite(cfg: &RunConfig) -> Vec<PropertyResult> {
    const SUITE: &str = "hopf";
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x486f7066);
    let mut out = Vec::new();
    let bool_defect = |ok: bool| if ok { 0.0 } else { 1.0 };

    let mut commutative = true;
    let mut associative = true;
    let mut homomorphism = true;
    for _ in 0..30 {
        let a = random_hopf_element(&mut rng, 3, 2);
        let b = random_hopf_element(&mut rng, 3, 2);
        let c = random_hopf_element(&mut rng, 2, 2);
        commutative &= a.multiply(&b) == b.multiply(&a);
        associative &= a.multiply(&b).multiply(&c) == a.multiply(&b.multiply(&c));
        homomorphism &= a.multiply(&b).coproduct() == a.coproduct().multiply(&b.coproduct());
    }
    out.push(PropertyResult::new(
        SUITE,
        "product-commutative",
        "monomial product is commutative on random pairs (exact)",
        bool_defect(commutative),
        0.0,
    ));
    out.push(PropertyResult::new(
        SUITE,
        "product-associative",
        "product is associative on random triples (exact)",
        bool_defect(associative),
        0.0,
    ));
    out.push(PropertyResult::new(
        SUITE,
        "coproduct-homomorphism",
        "Δ(ab) = Δ(a)Δ(b) on random pairs (exact)",
        bool_defect(homomorphism),
        0.0,
    ));

    let mut axioms = true;
    let mut antipode_sq = true;
    for _ in 0..100 {
        let a = random_hopf_element(&mut rng, 3, 2);
        axioms &= a.hopf_axioms_check();
        antipode_sq &= a.antipode().antipode() == a;
    }
    out.push(PropertyResult::new(
        SUITE,
        "hopf-axioms",
        "coassociativity, counit and antipode laws on 100 random elements of degree <= 3 (exact)",
        bool_defect(axioms),
        0.0,
    ));
    out.push(PropertyResult::new(
        SUITE,
        "antipode-involutive",
        "S² = id on random elements (exact)",
        bool_defect(antipode_sq),
        0.0,
    ));

    let mut table_ok = true;
    for m in -2..=3 {
        match classify_twisted_primitives(m, 3, 3) {
            Ok(basis) => table_ok &= basis == expected_classification(m),
            Err(_) => table_ok = false,
        }
    }
    out.push(PropertyResult::new(
        SUITE,
        "classification-table",
        "twisted-primitive classification matches the four-case table for m in -2..=3",
        bool_defect(table_ok),
        0.0,
    ));

    let mut stable = true;
    for m in [0, 1, 2] {
        let reference = classify_twisted_primitives(m, 1, 3).ok();
        for degree in 2..=4 {
            stable &= classify_twisted_primitives(m, degree, 3).ok() == reference;
        }
    }
    out.push(PropertyResult::new(
        SUITE,
        "classification-window-stability",
        "classification is independent of the window for degree 1..=4",
        bool_defect(stable),
        0.0,
    ));

    let dirac_ok = match solve_dirac_uniqueness() {
        Ok(sol) => {
            sol.d0 == HopfElement::dirac_d0()
                && sol.d1 == HopfElement::p1()
                && sol.sigma == HopfElement::e_pow(1)
                && sol.candidates.iter().all(|c| c.admissible == (c.m == 1))
        }
        Err(_) => false,
    };
    out.push(PropertyResult::new(
        SUITE,
        "dirac-uniqueness",
        "constraint solver returns exactly D0 = (1/λ)(1-E), D1 = P1, σ = E",
        bool_defect(dirac_ok),
        0.0,
    ));
    out
}

// ---------------------------------------------------------------------------
// algebra
// ---------------------------------------------------------------------------

fn gns_norm(f: &Pff) -> f64 {
    f.gns_norm_sq().sqrt()
}

fn algebra_suite(cfg: &RunConfig) -> Vec<PropertyResult> {
    const SUITE: &str = "algebra";
    let op = opts(cfg);
    let g = grid(cfg, cfg.lambda);
    let mut fam = TestFunctionFamily::new(g, FamilyParams::default(), cfg.seed);
    let mut out = Vec::new();

    // star associativity
    {
        let tol = cfg.tolerance("star-associativity");
        let mut worst: f64 = 0.0;
        let mut failed = None;
        for _ in 0..3 {
            let f = fam.next();
            let h = fam.next();
            let k = fam.next();
            let r = (|| {
                let lhs = star_product_opts(&star_product_opts(&f, &h, &op)?, &k, &op)?;
                let rhs = star_product_opts(&f, &star_product_opts(&h, &k, &op)?, &op)?;
                Ok::<f64, crate::algebra::AlgebraError>(
                    gns_norm(&lhs.sub(&rhs)) / (gns_norm(&f) * gns_norm(&h) * gns_norm(&k)),
                )
            })();
            match r {
                Ok(d) => worst = worst.max(d),
                Err(e) => failed = Some(e),
            }
        }
        out.push(match failed {
            None => PropertyResult::new(
                SUITE,
                "star-associativity",
                "‖(f⋆g)⋆h − f⋆(g⋆h)‖ ≤ tol·‖f‖‖g‖‖h‖ on the test family",
                worst,
                tol,
            ),
            Some(e) => fail(SUITE, "star-associativity", "star associativity", e),
        });
    }

    // classical limit, first order in λ
    {
        let tol = cfg.tolerance("classical-limit-band");
        let mut profile_fam = TestFunctionFamily::<f64>::new(g, FamilyParams::default(), cfg.seed + 1);
        let pf = profile_fam.next_profile();
        let pg = profile_fam.next_profile();
        let mut defects = Vec::new();
        let mut err = None;
        for lambda in [0.1, 0.01] {
            let gl = grid(cfg, lambda);
            let f = Pff::from_fn(gl, |p, x| pf.eval(p, x));
            let h = Pff::from_fn(gl, |p, x| pg.eval(p, x));
            match (star_product_opts(&f, &h, &op), pointwise_product(&f, &h)) {
                (Ok(star), Ok(point)) => defects.push(gns_norm(&star.sub(&point))),
                (Err(e), _) | (_, Err(e)) => err = Some(e),
            }
        }
        out.push(match err {
            None => {
                let ratio = defects[0] / defects[1];
                PropertyResult::new(
                    SUITE,
                    "classical-limit",
                    "‖f⋆g − fg‖ scales linearly in λ (defect ratio λ=0.1 vs λ=0.01 within 10±20%)",
                    (ratio / 10.0 - 1.0).abs(),
                    tol,
                )
            }
            Some(e) => fail(SUITE, "classical-limit", "classical limit", e),
        });
    }

    // star-algebra axioms
    {
        let tol = cfg.tolerance("star-involution");
        let f = fam.next();
        let h = fam.next();
        let r = (|| {
            let lhs = involution_opts(&star_product_opts(&f, &h, &op)?, &op);
            let rhs = star_product_opts(&involution_opts(&h, &op), &involution_opts(&f, &op), &op)?;
            Ok::<f64, crate::algebra::AlgebraError>(
                gns_norm(&lhs.sub(&rhs)) / (gns_norm(&f) * gns_norm(&h)).max(f64::MIN_POSITIVE),
            )
        })();
        out.push(match r {
            Ok(d) => PropertyResult::new(
                SUITE,
                "star-involution",
                "(f⋆g)* = g*⋆f* within interpolation tolerance",
                d,
                tol,
            ),
            Err(e) => fail(SUITE, "star-involution", "involution antihomomorphism", e),
        });

        let ff = involution_opts(&involution_opts(&f, &op), &op);
        out.push(PropertyResult::new(
            SUITE,
            "involution-involutive",
            "(f*)* = f within interpolation tolerance",
            ff.sub(&f).max_abs() / f.max_abs(),
            cfg.tolerance("involution-involutive"),
        ));
    }

    // GNS positivity and the U isometry
    {
        let tol_pos = cfg.tolerance("gns-positivity");
        let tol_iso = cfg.tolerance("u-isometry");
        let mut worst_pos: f64 = 0.0;
        let mut worst_iso: f64 = 0.0;
        let mut err = None;
        for _ in 0..3 {
            let f = fam.next();
            match crate::algebra::inner_product_opts(&f, &f, &op) {
                Ok(ip) => {
                    worst_pos = worst_pos.max((-ip.re).max(0.0)).max(ip.im.abs());
                    let uf = crate::algebra::unitary_u_opts(&f, &op);
                    worst_iso = worst_iso.max((ip.re - uf.l2_norm_sq()).abs() / ip.re);
                }
                Err(e) => err = Some(e),
            }
        }
        let zero = Pff::zero(g);
        let zero_ip = crate::algebra::inner_product_opts(&zero, &zero, &op)
            .map(|v| v.norm())
            .unwrap_or(f64::INFINITY);
        worst_pos = worst_pos.max(zero_ip);
        out.push(match &err {
            None => PropertyResult::new(
                SUITE,
                "gns-positivity",
                "(f,f) ≥ 0 on the family, = 0 only at f = 0",
                worst_pos,
                tol_pos,
            ),
            Some(e) => fail(SUITE, "gns-positivity", "GNS positivity", e),
        });
        out.push(match err {
            None => PropertyResult::new(
                SUITE,
                "u-isometry",
                "(f,f) = ‖Uf‖²_{L²} within tolerance",
                worst_iso,
                tol_iso,
            ),
            Some(e) => fail(SUITE, "u-isometry", "U isometry", e),
        });
    }

    // intertwining U ρ(P_μ) U⁻¹
    {
        let tol = cfg.tolerance("intertwining");
        let psi = fam.next();
        let lhs1 = crate::algebra::unitary_u_opts(
            &act_generator(Generator::P1, &crate::algebra::unitary_u_inv_opts(&psi, &op)),
            &op,
        );
        let rhs1 = act_generator(Generator::E, &act_generator(Generator::P1, &psi));
        let d1 = lhs1.sub(&rhs1).max_abs() / rhs1.max_abs().max(f64::MIN_POSITIVE);
        let lhs0 = crate::algebra::unitary_u_opts(
            &act_generator(Generator::P0, &crate::algebra::unitary_u_inv_opts(&psi, &op)),
            &op,
        );
        let rhs0 = act_generator(Generator::P0, &psi);
        let d0 = lhs0.sub(&rhs0).max_abs() / rhs0.max_abs().max(f64::MIN_POSITIVE);
        out.push(PropertyResult::new(
            SUITE,
            "u-intertwining",
            "U ρ(P₁) U⁻¹ = ρ(E)ρ(P₁) and U ρ(P₀) U⁻¹ = ρ(P₀) on test functions",
            d1.max(d0),
            tol,
        ));
    }

    // twisted trace / KMS
    {
        let tol = cfg.tolerance("kms-defect");
        let mut worst: f64 = 0.0;
        let mut err = None;
        for _ in 0..3 {
            let f = fam.next();
            let h = fam.next();
            match kms_defect_opts(&f, &h, &op) {
                Ok(d) => worst = worst.max(d),
                Err(e) => err = Some(e),
            }
        }
        out.push(match err {
            None => PropertyResult::new(
                SUITE,
                "kms-twisted-trace",
                "ω(f⋆g) = ω((E▷g)⋆f) within tolerance",
                worst,
                tol,
            ),
            Some(e) => fail(SUITE, "kms-twisted-trace", "twisted trace", e),
        });
    }

    // KMS boundary values on the analytic strip
    {
        let tol = cfg.tolerance("kms-defect");
        let f = fam.next();
        let h = fam.next();
        let t = 0.7;
        let r = (|| {
            let lhs = weight_omega(&star_product_opts(
                &f,
                &modular_flow(Complex::new(t, 1.0), &h),
                &op,
            )?);
            let rhs = weight_omega(&star_product_opts(
                &modular_flow(Complex::new(t, 0.0), &h),
                &f,
                &op,
            )?);
            Ok::<f64, crate::algebra::AlgebraError>((lhs - rhs).norm() / lhs.norm().max(1.0))
        })();
        out.push(match r {
            Ok(d) => PropertyResult::new(
                SUITE,
                "kms-strip",
                "ω(f⋆σ_{t+i}(g)) = ω(σ_t(g)⋆f) at t = 0.7",
                d,
                tol,
            ),
            Err(e) => fail(SUITE, "kms-strip", "KMS boundary values", e),
        });
    }

    // modular conjugation law
    {
        let tol = cfg.tolerance("modular-conjugation");
        let f = fam.next();
        let psi = fam.next();
        let mut worst: f64 = 0.0;
        let mut err = None;
        for t in [0.5, 1.3] {
            let tc = Complex::new(t, 0.0);
            let r = (|| {
                let lhs = star_product_opts(&modular_flow(tc, &f), &psi, &op)?;
                let rhs = modular_flow(
                    tc,
                    &star_product_opts(&f, &modular_flow(-tc, &psi), &op)?,
                );
                Ok::<f64, crate::algebra::AlgebraError>(
                    lhs.sub(&rhs).max_abs() / lhs.max_abs().max(f64::MIN_POSITIVE),
                )
            })();
            match r {
                Ok(d) => worst = worst.max(d),
                Err(e) => err = Some(e),
            }
        }
        out.push(match err {
            None => PropertyResult::new(
                SUITE,
                "modular-conjugation",
                "π(σ_t f) = Δ_ω^{it} π(f) Δ_ω^{−it} on test vectors, real t",
                worst,
                tol,
            ),
            Some(e) => fail(SUITE, "modular-conjugation", "modular conjugation", e),
        });
    }

    out
}

// ---------------------------------------------------------------------------
// operators
// ---------------------------------------------------------------------------

fn operators_suite(cfg: &RunConfig) -> Vec<PropertyResult> {
    const SUITE: &str = "operators";
    let op = opts(cfg);
    let lambda = if cfg.lambda > 0.0 { cfg.lambda } else { 0.5 };
    // the frequency ladder needs x₁ headroom: k up to 40 with margin
    let g = GridSpec::new(
        cfg.grid.p0_max,
        cfg.grid.n_p0.min(128),
        cfg.grid.x1_max,
        2048,
        lambda,
    )
    .expect("validated grid");
    let mut fam = TestFunctionFamily::new(g, FamilyParams::default(), cfg.seed ^ 0x4f70);
    let mut out = Vec::new();

    out.push(PropertyResult::new(
        SUITE,
        "clifford-identities",
        "{Γ^μ,Γ^ν} = 2δ^{μν}, χ = −iΓ⁰Γ¹, χ² = 1, {χ,Γ^μ} = 0 (exact)",
        CliffordBasis::<f64>::standard().identity_defect(),
        cfg.tolerance("clifford"),
    ));

    // symbol identities on a momentum lattice
    {
        let casimir = MomentumSymbol::casimir(lambda);
        let d0 = MomentumSymbol::dirac_d0(lambda);
        let mut worst_c: f64 = 0.0;
        let mut worst_eq: f64 = 0.0;
        let (e0, e1) = MomentumSymbol::equivariant_dirac(lambda);
        for i in 0..81 {
            let p0 = -4.0 + 0.1 * i as f64;
            for j in 0..41 {
                let p1 = -5.0 + 0.25 * j as f64;
                let c = casimir.eval(p0, p1).re;
                let lhs = d0.eval(p0, p1).re.powi(2) + p1 * p1;
                let rhs = (-lambda * p0).exp() * c;
                worst_c = worst_c.max((lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0));
                let lhs_eq = e0.eval(p0, p1).re.powi(2) + e1.eval(p0, p1).re.powi(2);
                let rhs_eq = c + lambda * lambda / 4.0 * c * c;
                worst_eq =
                    worst_eq.max((lhs_eq - rhs_eq).abs() / lhs_eq.abs().max(rhs_eq.abs()).max(1.0));
            }
        }
        out.push(PropertyResult::new(
            SUITE,
            "dirac-casimir-symbol",
            "D̂₀² + D̂₁² = e^(−λp₀)·C(p) pointwise (ulp-level)",
            worst_c / f64::EPSILON,
            cfg.tolerance("casimir-symbol-ulp"),
        ));
        out.push(PropertyResult::new(
            SUITE,
            "equivariant-casimir-symbol",
            "(D₀^eq)² + (D₁^eq)² = C + (λ²/4)C² pointwise",
            worst_eq,
            cfg.tolerance("eq-casimir-symbol"),
        ));
    }

    // coproduct-shape rejection of the equivariant operator
    {
        let d0eq = {
            // (1/2λ)(E⁻¹ − E) − (λ/2)E⁻¹P₁² as an exact element; the twist
            // window scan must reject it for every m.
            let half_inv = LaurentScalar::term(Rat::new(1.into(), 2.into()), -1);
            let mut e = HopfElement::monomial(Monomial::new(0, 0, -1), half_inv.clone());
            e.add_scaled_monomial(Monomial::new(0, 0, 1), &(-&half_inv));
            e.add_scaled_monomial(
                Monomial::new(0, 2, -1),
                &LaurentScalar::term(Rat::new((-1).into(), 2.into()), 1),
            );
            e
        };
        let rejected = (-3..=3)
            .all(|m| crate::hopf::twisted_commutator_symbol(&d0eq, m).is_err());
        out.push(PropertyResult::new(
            SUITE,
            "equivariant-shape-rejection",
            "the equivariant Dirac components admit no bounded twisted commutator",
            if rejected { 0.0 } else { 1.0 },
            0.0,
        ));
    }

    // twisted commutator factorization and Dirac symmetry
    {
        let f = fam.next();
        let psi = Spinor::new(fam.next(), fam.next());
        let phi = Spinor::new(fam.next(), fam.next());
        let r = (|| {
            let lhs = crate::operators::twisted_commutator_apply_opts(&f, &psi, &op)?;
            let rhs = factorized_twisted_commutator(&f, &psi, &op)?;
            Ok::<f64, crate::algebra::AlgebraError>(
                lhs.sub(&rhs).norm_sq().sqrt() / rhs.norm_sq().sqrt().max(f64::MIN_POSITIVE),
            )
        })();
        out.push(match r {
            Ok(d) => PropertyResult::new(
                SUITE,
                "twisted-commutator-factorization",
                "[D,π(f)]_σ ψ = Γ^μ π(D_μ▷f) ψ within tolerance",
                d,
                cfg.tolerance("twisted-factorization"),
            ),
            Err(e) => fail(SUITE, "twisted-commutator-factorization", "factorization", e),
        });

        let lhs = phi.inner(&dirac_apply(&psi));
        let rhs = dirac_apply(&phi).inner(&psi);
        out.push(PropertyResult::new(
            SUITE,
            "dirac-symmetry",
            "(φ, Dψ) = (Dφ, ψ) on test spinors",
            (lhs - rhs).norm() / (phi.norm_sq().sqrt() * psi.norm_sq().sqrt()),
            cfg.tolerance("dirac-symmetry"),
        ));

        // twist compatibility σ(f)* = σ⁻¹(f*)
        let lhs = involution_opts(&act_generator(Generator::E, &f), &op);
        let rhs = act_generator(Generator::EInverse, &involution_opts(&f, &op));
        out.push(PropertyResult::new(
            SUITE,
            "twist-compatibility",
            "(E▷f)* = E⁻¹▷(f*) within rounding",
            lhs.sub(&rhs).max_abs() / rhs.max_abs().max(f64::MIN_POSITIVE),
            cfg.tolerance("twist-compatibility"),
        ));

        // [D², ρ(h)]_σ = 0 for momentum multipliers
        let mut worst: f64 = 0.0;
        let modular = MomentumSymbol::modular(lambda);
        let modular_inv = MomentumSymbol::modular_inv(lambda);
        for h in [Generator::P0, Generator::P1, Generator::E] {
            let apply = |s: &Spinor<f64>| -> Spinor<f64> {
                Spinor {
                    c1: act_generator(h, &s.c1),
                    c2: act_generator(h, &s.c2),
                }
            };
            let d2 = |s: &Spinor<f64>| dirac_apply(&dirac_apply(s));
            let twist = |s: &Spinor<f64>, m: &MomentumSymbol<f64>| Spinor {
                c1: crate::operators::apply_multiplier(m, &s.c1).expect("finite"),
                c2: crate::operators::apply_multiplier(m, &s.c2).expect("finite"),
            };
            let lhs = d2(&apply(&psi));
            let rhs = twist(&apply(&twist(&d2(&psi), &modular_inv)), &modular);
            worst = worst
                .max(lhs.sub(&rhs).max_abs() / lhs.max_abs().max(f64::MIN_POSITIVE));
        }
        out.push(PropertyResult::new(
            SUITE,
            "dsq-twisted-commutation",
            "[D², ρ(h)]_σ = 0 for h in {P₀, P₁, E} (multiplier level)",
            worst,
            cfg.tolerance("dsq-twisted-commutation"),
        ));
    }

    // boundedness ladder: the fixture is a narrow bump with an offset p₀
    // center — the narrow support keeps the twisted convolution free of
    // phase cancellation across the ladder, and the offset center makes the
    // (E−1)▷f admixture (the coefficient of the unbounded ρ(P₁) term) large.
    {
        let witness_params = FamilyParams {
            p0_width: (0.10, 0.16),
            p0_center: (1.8, 2.2),
            ..Default::default()
        };
        let mut wfam = TestFunctionFamily::new(g, witness_params, cfg.seed ^ 0x4f72);
        let f = wfam.next();
        let base = Spinor::new(fam.next(), fam.next());
        let freqs = [4.0, 8.0, 16.0, 28.0, 40.0];
        match unboundedness_witness(&f, &base, &freqs, &op) {
            Ok(ladder) => {
                let growth = ladder.untwisted.last().unwrap() / ladder.untwisted[0];
                out.push(PropertyResult::at_least(
                    SUITE,
                    "untwisted-growth",
                    "untwisted commutator ratio grows ≥ 5x over the 10x frequency ladder",
                    growth,
                    cfg.tolerance("untwisted-growth-min"),
                ));
                let tmax = ladder.twisted.iter().cloned().fold(f64::MIN, f64::max);
                let tmin = ladder.twisted.iter().cloned().fold(f64::MAX, f64::min);
                out.push(PropertyResult::new(
                    SUITE,
                    "twisted-bounded",
                    "twisted commutator ratio varies ≤ 1.5x across the ladder",
                    tmax / tmin,
                    cfg.tolerance("twisted-variation-max"),
                ));
            }
            Err(e) => {
                out.push(fail(SUITE, "untwisted-growth", "frequency ladder", &e));
                out.push(fail(SUITE, "twisted-bounded", "frequency ladder", &e));
            }
        }

        // classical control: the same fixture shape at λ = 0 stays bounded
        let g0 = g.with_lambda(0.0);
        let mut wfam0 = TestFunctionFamily::new(g0, witness_params, cfg.seed ^ 0x4f72);
        let f0 = wfam0.next();
        let mut fam0 = TestFunctionFamily::new(g0, FamilyParams::default(), cfg.seed ^ 0x4f71);
        let base0 = Spinor::new(fam0.next(), fam0.next());
        match unboundedness_witness(&f0, &base0, &freqs, &op) {
            Ok(ladder) => {
                let umax = ladder.untwisted.iter().cloned().fold(f64::MIN, f64::max);
                let umin = ladder.untwisted.iter().cloned().fold(f64::MAX, f64::min);
                out.push(PropertyResult::new(
                    SUITE,
                    "classical-bounded",
                    "λ = 0 control: untwisted ratios bounded across the ladder",
                    umax / umin,
                    cfg.tolerance("twisted-variation-max"),
                ));
            }
            Err(e) => out.push(fail(SUITE, "classical-bounded", "classical ladder", &e)),
        }
    }

    out
}

// ---------------------------------------------------------------------------
// spectral
// ---------------------------------------------------------------------------

/// c(s) comparison rows over the (s, λ, μ) lattice.
pub fn zeta_table(
    s_list: &[f64],
    lambdas: &[f64],
    mus: &[f64],
) -> Result<Vec<CSample>, crate::zeta::ZetaError> {
    let mut rows = Vec::new();
    for &lambda in lambdas {
        for &mu in mus {
            for &s in s_list {
                let params = ZetaParams::new(lambda, mu, s)?;
                let closed = c_closed_form(&params)?;
                let quad = c_quadrature(&params)?;
                rows.push(CSample {
                    lambda,
                    mu,
                    s,
                    c_closed: closed,
                    c_quadrature: quad,
                    rel_gap: (closed - quad).abs() / closed.abs(),
                });
            }
        }
    }
    Ok(rows)
}

/// Full residue report: c-table, per-fixture residues, c-residue defects.
pub fn residue_report(cfg: &RunConfig) -> Result<ZetaReport, crate::zeta::ZetaError> {
    let lambda = if cfg.lambda > 0.0 { cfg.lambda } else { 0.5 };
    let g = grid(cfg, lambda);
    let mut fam = TestFunctionFamily::new(g, FamilyParams::default(), cfg.seed ^ 0x5a65);
    let params = ZetaParams::new(lambda, cfg.mu, 3.0)?;
    let eps: Vec<f64> = cfg.epsilons.clone();

    let mut report = ZetaReport {
        c_samples: zeta_table(&cfg.s_list, &[0.3, 1.0], &[0.5, 1.0, 2.0])?,
        ..Default::default()
    };

    for i in 0..3 {
        let f = fam.next();
        report
            .residues
            .push(phi_residue(&f, &format!("fixture-{}", i), &params, &eps)?);
    }

    let quarter_pi_inv = 0.25 / std::f64::consts::PI;
    for &(l, m) in &[(0.3, 1.0), (1.0, 0.5), (0.5, 2.0)] {
        let p = ZetaParams::new(l, m, 3.0)?;
        let pts: Result<Vec<(f64, f64)>, _> = eps
            .iter()
            .map(|&e| c_closed_form(&ZetaParams { s: 2.0 + e, ..p }).map(|c| (e, e * c)))
            .collect();
        let extrapolated = neville_extrapolate(&pts?);
        report
            .c_residue_defects
            .push((l, m, (extrapolated - quarter_pi_inv).abs() / quarter_pi_inv));
    }
    Ok(report)
}

fn spectral_suite(cfg: &RunConfig) -> Vec<PropertyResult> {
    const SUITE: &str = "spectral";
    let op = opts(cfg);
    let mut out = Vec::new();

    // closed form vs quadrature over the lattice
    match zeta_table(&[2.5, 3.0, 4.0], &[0.3, 1.0], &[0.5, 1.0, 2.0]) {
        Ok(rows) => {
            let worst = rows.iter().map(|r| r.rel_gap).fold(0.0, f64::max);
            out.push(PropertyResult::new(
                SUITE,
                "c-closed-vs-quadrature",
                "c(s) closed form matches 2D quadrature over the (s,λ,μ) lattice",
                worst,
                cfg.tolerance("c-gap"),
            ));
        }
        Err(e) => out.push(fail(SUITE, "c-closed-vs-quadrature", "c(s) lattice", e)),
    }

    // residue universality of (s−2)c(s)
    {
        let quarter_pi_inv = 0.25 / std::f64::consts::PI;
        let mut worst: f64 = 0.0;
        let mut err = None;
        for &(l, m) in &[(0.3, 1.0), (1.0, 0.5), (0.5, 2.0)] {
            let r = (|| {
                let p = ZetaParams::new(l, m, 3.0)?;
                let pts: Result<Vec<(f64, f64)>, crate::zeta::ZetaError> = cfg
                    .epsilons
                    .iter()
                    .map(|&e| c_closed_form(&ZetaParams { s: 2.0 + e, ..p }).map(|c| (e, e * c)))
                    .collect();
                Ok::<f64, crate::zeta::ZetaError>(
                    (neville_extrapolate(&pts?) - quarter_pi_inv).abs() / quarter_pi_inv,
                )
            })();
            match r {
                Ok(d) => worst = worst.max(d),
                Err(e) => err = Some(e),
            }
        }
        out.push(match err {
            None => PropertyResult::new(
                SUITE,
                "c-residue-universality",
                "extrapolated (s−2)c(s) = 1/(4π) for all λ, μ samples",
                worst,
                cfg.tolerance("c-residue"),
            ),
            Some(e) => fail(SUITE, "c-residue-universality", "c residue", e),
        });
    }

    // the full residue: lim (s−2)Φ(π(f)(D²+μ²)^(−s/2)) = ω(f)/(2π)
    {
        let lambda = if cfg.lambda > 0.0 { cfg.lambda } else { 0.5 };
        let g = grid(cfg, lambda);
        let mut fam = TestFunctionFamily::new(g, FamilyParams::default(), cfg.seed ^ 0x5a65);
        let r = (|| {
            let params = ZetaParams::new(lambda, cfg.mu, 3.0)?;
            let mut worst: f64 = 0.0;
            let mut fs = Vec::new();
            for i in 0..3 {
                let f = fam.next();
                let entry = phi_residue(&f, &format!("fixture-{}", i), &params, &cfg.epsilons)?;
                worst = worst.max(entry.ratio_defect);
                fs.push(f);
            }
            // linearity in f
            let sum = fs[0].add(&fs[1]);
            let e_sum = phi_residue(&sum, "sum", &params, &cfg.epsilons)?;
            let e0 = phi_residue(&fs[0], "a", &params, &cfg.epsilons)?;
            let e1 = phi_residue(&fs[1], "b", &params, &cfg.epsilons)?;
            let lin = Complex::new(
                e_sum.extrapolated_re - e0.extrapolated_re - e1.extrapolated_re,
                e_sum.extrapolated_im - e0.extrapolated_im - e1.extrapolated_im,
            )
            .norm()
                / Complex::new(e_sum.extrapolated_re, e_sum.extrapolated_im)
                    .norm()
                    .max(f64::MIN_POSITIVE);
            Ok::<(f64, f64), crate::zeta::ZetaError>((worst, lin))
        })();
        match r {
            Ok((worst, lin)) => {
                out.push(PropertyResult::new(
                    SUITE,
                    "phi-residue",
                    "extrapolated residue equals ω(f)/(2π) on the fixtures",
                    worst,
                    cfg.tolerance("phi-residue"),
                ));
                out.push(PropertyResult::new(
                    SUITE,
                    "residue-linearity",
                    "the residue is linear in f",
                    lin,
                    cfg.tolerance("residue-linearity"),
                ));
            }
            Err(e) => {
                out.push(fail(SUITE, "phi-residue", "residue suite", &e));
                out.push(fail(SUITE, "residue-linearity", "residue linearity", &e));
            }
        }
    }

    // non-summability witness
    {
        let lambda = if cfg.lambda > 0.0 { cfg.lambda } else { 0.5 };
        let g = grid(cfg, lambda);
        let f = TestFunctionFamily::new(g, FamilyParams::default(), cfg.seed ^ 0x6e73).next();
        let lo = cfg.tolerance("hs-ratio-low");
        let hi = cfg.tolerance("hs-ratio-high");
        let mut ok = true;
        let mut worst_dev: f64 = 0.0;
        for s in [1.0, 2.0, 4.0] {
            let w = hs_norm_factorized(&f, s, 320.0, 10.0);
            ok &= w.divergent && w.ratios[1] >= lo && w.ratios[1] <= hi;
            worst_dev = worst_dev.max((w.ratios[1] - 2.0).abs());
        }
        out.push(PropertyResult::new(
            SUITE,
            "non-summability",
            "truncated ‖G_s‖² doubles with the cutoff for s in {1,2,4} (ratio within [1.8,2.2])",
            if ok { worst_dev } else { f64::INFINITY },
            0.2,
        ));

        // classical control at λ = 0
        let g0 = grid(cfg, 0.0);
        let f0 = TestFunctionFamily::new(g0, FamilyParams::default(), cfg.seed ^ 0x6e74).next();
        let w0 = hs_norm_factorized(&f0, 3.0, 40.0, 10.0);
        let closed = 2.0 * std::f64::consts::PI / (3.0 - 2.0);
        let radial = gs_norm_sq_lambda0(3.0, 2000.0);
        let ratio_ok = !w0.divergent && w0.ratios[1] < cfg.tolerance("lambda0-ratio-max");
        let defect = if ratio_ok {
            (radial - closed).abs() / closed
        } else {
            f64::INFINITY
        };
        out.push(PropertyResult::new(
            SUITE,
            "lambda0-summable-control",
            "λ = 0, s = 3: truncations converge and the radial closed form matches",
            defect,
            cfg.tolerance("c-gap"),
        ));
    }

    // kernel-trace consistency
    {
        let lambda = if cfg.lambda > 0.0 { cfg.lambda } else { 0.5 };
        let g = grid(cfg, lambda);
        let f = TestFunctionFamily::new(g, FamilyParams::default(), cfg.seed ^ 0x6b65).next();
        let r = (|| {
            let sym = MomentumSymbol::g_delta(lambda, cfg.mu, 3.0);
            let kernel = SchwartzKernel::new(&f, sym, 1000.0, &op)?.validated(1e-3)?;
            let direct = kernel.diagonal_trace()?;
            let fact = kernel.factorized_trace(weight_omega(&f));
            Ok::<f64, crate::zeta::ZetaError>((direct - fact).norm() / fact.norm())
        })();
        out.push(match r {
            Ok(d) => PropertyResult::new(
                SUITE,
                "kernel-trace-factorization",
                "diagonal kernel integral matches the factorized trace",
                d,
                cfg.tolerance("kernel-trace"),
            ),
            Err(e) => fail(SUITE, "kernel-trace-factorization", "kernel trace", e),
        });
    }

    out
}

// ---------------------------------------------------------------------------
// real structure
// ---------------------------------------------------------------------------

fn real_suite(cfg: &RunConfig) -> Vec<PropertyResult> {
    const SUITE: &str = "real";
    let op = opts(cfg);
    let tol = cfg.tolerance("real-structure");
    let mut out = Vec::new();
    for lambda in [0.0, 0.3, 1.0] {
        // wider x₁ range and tighter p₀ support: J̃ stretches rows by e^(λ|p₀|)
        let g = GridSpec::new(
            cfg.grid.p0_max,
            cfg.grid.n_p0.min(128),
            24.0,
            512,
            lambda,
        )
        .expect("validated grid");
        let mut fam = TestFunctionFamily::new(
            g,
            crate::real_structure::narrow_support_params(),
            cfg.seed ^ 0x4a,
        );
        match real_structure_suite(&mut fam, &op) {
            Ok(results) => {
                for r in results {
                    out.push(PropertyResult::new(
                        SUITE,
                        &format!("{}-lambda-{}", r.name, lambda),
                        &format!("condition {} at λ = {}", r.name, lambda),
                        r.defect,
                        tol,
                    ));
                }
            }
            Err(e) => out.push(fail(
                SUITE,
                &format!("conditions-lambda-{}", lambda),
                "real-structure conditions",
                e,
            )),
        }
        out.push(PropertyResult::new(
            SUITE,
            &format!("jd-multiplier-lambda-{}", lambda),
            &format!("multiplier of J̃D̂_μJ̃ equals −e^(λp₀)·D̂_μ at λ = {}", lambda),
            jd_multiplier_defect(lambda),
            cfg.tolerance("jd-multiplier"),
        ));
    }
    out
}
