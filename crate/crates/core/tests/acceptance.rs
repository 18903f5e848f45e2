//! Acceptance gate: the seven headline criteria, each pinned to its stated
//! tolerance, printing one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use kappa_minkowski::config::{RunConfig, SuiteName};
use kappa_minkowski::hopf::{
    classify_twisted_primitives, solve_dirac_uniqueness, HopfElement,
};
use kappa_minkowski::report::PropertyResult;
use kappa_minkowski::suites;
use std::time::Instant;

fn find<'a>(props: &'a [PropertyResult], anchor: &str) -> &'a PropertyResult {
    props
        .iter()
        .find(|p| p.anchor == anchor)
        .unwrap_or_else(|| panic!("property {:?} missing from suite output", anchor))
}

fn verdict(n: usize, what: &str, pass: bool) {
    println!("[{}] criterion {}: {}", if pass { "PASS" } else { "FAIL" }, n, what);
    assert!(pass, "criterion {} failed: {}", n, what);
}

#[test]
fn criterion_1_dirac_uniqueness_exact() {
    let start = Instant::now();
    let sol = solve_dirac_uniqueness().expect("solver must succeed");
    let exact = sol.d0 == HopfElement::dirac_d0()
        && sol.d1 == HopfElement::p1()
        && sol.sigma == HopfElement::e_pow(1)
        && sol.twist_power == 1;

    let mut table = true;
    for m in -2..=3 {
        let basis = classify_twisted_primitives(m, 3, 3).expect("classification");
        let expected = match m {
            0 => vec![HopfElement::one(), HopfElement::p0()],
            1 => vec![HopfElement::one(), HopfElement::e_pow(1), HopfElement::p1()],
            _ => vec![HopfElement::one(), HopfElement::e_pow(m)],
        };
        table &= basis == expected;
    }
    let elapsed = start.elapsed();
    let fast = elapsed.as_secs_f64() < 1.0;
    verdict(
        1,
        &format!(
            "unique D0 = (1/λ)(1-E), D1 = P1, σ = E and the m = -2..3 classification table ({:.3}s)",
            elapsed.as_secs_f64()
        ),
        exact && table && fast,
    );
}

#[test]
fn criterion_2_hopf_axioms_exact() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260810);
    let mut all = true;
    for _ in 0..100 {
        let a = suites::random_hopf_element(&mut rng, 3, 2);
        all &= a.hopf_axioms_check();
    }
    verdict(
        2,
        "coassociativity, counit and antipode laws on 100 seeded random elements (zero tolerance)",
        all,
    );
}

#[test]
fn criterion_3_algebra_suite() {
    let cfg = RunConfig::default(); // λ = 0.5, 256×256 grid
    assert_eq!(cfg.grid.n_p0, 256);
    assert_eq!(cfg.grid.n_x1, 256);
    let start = Instant::now();
    let props = suites::run_suite(SuiteName::Algebra, &cfg);
    let elapsed = start.elapsed();

    let assoc = find(&props, "star-associativity");
    let classical = find(&props, "classical-limit");
    let kms = find(&props, "kms-twisted-trace");
    let iso = find(&props, "u-isometry");
    let ok = assoc.defect <= 1e-6
        && classical.defect <= 0.2
        && kms.defect <= 1e-8
        && iso.defect <= 1e-8
        && elapsed.as_secs_f64() <= 60.0;
    verdict(
        3,
        &format!(
            "star associativity {:.1e} ≤ 1e-6, λ-linear recovery band {:.1e} ≤ 0.2, KMS {:.1e} ≤ 1e-8, U-isometry {:.1e} ≤ 1e-8 ({:.1}s on the 256×256 grid)",
            assoc.defect, classical.defect, kms.defect, iso.defect, elapsed.as_secs_f64()
        ),
        ok,
    );
}

#[test]
fn criterion_4_operator_suite() {
    let cfg = RunConfig::default();
    let props = suites::run_suite(SuiteName::Operators, &cfg);

    // symbol identities at 1e-12 relative pointwise (the suite measures the
    // Dirac-Casimir one in ulps)
    let casimir_rel = find(&props, "dirac-casimir-symbol").defect * f64::EPSILON;
    let eq_rel = find(&props, "equivariant-casimir-symbol").defect;
    let fact = find(&props, "twisted-commutator-factorization").defect;
    let growth = find(&props, "untwisted-growth").defect;
    let variation = find(&props, "twisted-bounded").defect;
    let ok = casimir_rel <= 1e-12
        && eq_rel <= 1e-12
        && fact <= 1e-6
        && growth >= 5.0
        && variation <= 1.5;
    verdict(
        4,
        &format!(
            "symbol identities {:.1e}/{:.1e} ≤ 1e-12, factorization {:.1e} ≤ 1e-6, untwisted growth {:.2}x ≥ 5x, twisted variation {:.2}x ≤ 1.5x",
            casimir_rel, eq_rel, fact, growth, variation
        ),
        ok,
    );
}

#[test]
fn criterion_5_spectral_dimension_two() {
    let cfg = RunConfig::default();
    let start = Instant::now();

    // 3×2×3 lattice gap between the closed form and the quadrature
    let rows = suites::zeta_table(&[2.5, 3.0, 4.0], &[0.3, 1.0], &[0.5, 1.0, 2.0])
        .expect("zeta lattice");
    assert_eq!(rows.len(), 18);
    let worst_gap = rows.iter().map(|r| r.rel_gap).fold(0.0, f64::max);

    let props = suites::run_suite(SuiteName::Spectral, &cfg);
    let c_residue = find(&props, "c-residue-universality").defect;
    let residue = find(&props, "phi-residue").defect;
    let elapsed = start.elapsed();

    let ok = worst_gap <= 1e-6
        && c_residue <= 1e-3
        && residue <= 1e-2
        && elapsed.as_secs_f64() <= 120.0;
    verdict(
        5,
        &format!(
            "c(s) gap {:.1e} ≤ 1e-6 on the 18-point lattice, (s-2)c(s) → 1/(4π) within {:.1e} ≤ 0.1%, residue = ω(f)/(2π) within {:.1e} ≤ 1% on 3 fixtures ({:.1}s)",
            worst_gap, c_residue, residue, elapsed.as_secs_f64()
        ),
        ok,
    );
}

#[test]
fn criterion_6_non_summability_witness() {
    use kappa_minkowski::algebra::{FamilyParams, TestFunctionFamily};
    use kappa_minkowski::zeta::hs_norm_factorized;
    use kappa_minkowski::GridSpec64;

    let grid = GridSpec64::new(6.0, 128, 20.0, 256, 0.5).unwrap();
    let f = TestFunctionFamily::new(grid, FamilyParams::default(), 20260810).next();
    let mut ok = true;
    let mut ratios = Vec::new();
    for s in [1.0, 2.0, 4.0] {
        let w = hs_norm_factorized(&f, s, 320.0, 10.0);
        ratios.push(w.ratios[1]);
        ok &= w.divergent && (1.8..=2.2).contains(&w.ratios[1]);
    }
    // classical control: finite at λ = 0, s = 3
    let grid0 = GridSpec64::new(6.0, 128, 20.0, 256, 0.0).unwrap();
    let f0 = TestFunctionFamily::new(grid0, FamilyParams::default(), 20260811).next();
    let w0 = hs_norm_factorized(&f0, 3.0, 320.0, 10.0);
    ok &= !w0.divergent && w0.ratios[1] < 1.1;
    verdict(
        6,
        &format!(
            "cutoff-doubling ratios {:?} in [1.8, 2.2] for s = 1, 2, 4 at λ = 0.5; λ = 0 control ratio {:.3} (finite)",
            ratios.iter().map(|r| (r * 1000.0).round() / 1000.0).collect::<Vec<_>>(),
            w0.ratios[1]
        ),
        ok,
    );
}

#[test]
fn criterion_7_real_structure_suite() {
    let cfg = RunConfig::default();
    let props = suites::run_suite(SuiteName::Real, &cfg);
    let mut worst_condition: f64 = 0.0;
    let mut worst_multiplier: f64 = 0.0;
    for p in &props {
        if p.anchor.starts_with("jd-multiplier") {
            worst_multiplier = worst_multiplier.max(p.defect);
        } else {
            worst_condition = worst_condition.max(p.defect);
        }
    }
    let ok = worst_condition <= 1e-6 && worst_multiplier <= 1e-13;
    verdict(
        7,
        &format!(
            "all five conditions ≤ 1e-6 across λ = 0, 0.3, 1 (worst {:.1e}); JD = −Δω⁻¹DJ multiplier identity at machine precision ({:.1e})",
            worst_condition, worst_multiplier
        ),
        ok,
    );
}
