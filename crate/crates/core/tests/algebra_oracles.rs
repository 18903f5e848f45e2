//! Independent oracles for the grid operations: everything here evaluates
//! the defining position-space integrals by adaptive quadrature on analytic
//! profile formulas — no grids, no FFTs, no shared code path with the
//! implementation being checked.

use kappa_minkowski::algebra::{star_product, GridSpec, PartialFourierFunction};
use kappa_minkowski::zeta::integrate_complex;
use num_complex::Complex;

const TAU: f64 = std::f64::consts::TAU;

/// Analytic profile φ(p₀, x₁) = A·w((p₀−b)/a)·e^(−(x₁−c)²/(2s²))·e^(imx₁).
#[derive(Clone, Copy)]
struct Profile {
    amp: Complex<f64>,
    a: f64,
    b: f64,
    s: f64,
    c: f64,
    m: f64,
}

impl Profile {
    fn phi(&self, p0: f64, x1: f64) -> Complex<f64> {
        let u = (p0 - self.b) / self.a;
        if u.abs() >= 1.0 {
            return Complex::new(0.0, 0.0);
        }
        let bump = (1.0 - 1.0 / (1.0 - u * u)).exp();
        let y = (x1 - self.c) / self.s;
        self.amp * bump * (-y * y / 2.0).exp() * Complex::new(0.0, self.m * x1).exp()
    }

    /// Position-space value by quadrature over the compact p₀ support.
    fn position(&self, x0: f64, x1: f64) -> Complex<f64> {
        let (v, _, _) = integrate_complex(
            |p0: f64| Complex::new(0.0, p0 * x0).exp() * self.phi(p0, x1),
            self.b - self.a,
            self.b + self.a,
            0.0,
            1e-11,
            400,
        );
        v / TAU
    }
}

fn sample(grid: GridSpec<f64>, p: Profile) -> PartialFourierFunction<f64> {
    PartialFourierFunction::from_fn(grid, |p0, x1| p.phi(p0, x1))
}

#[test]
fn star_product_matches_position_space_double_integral() {
    // (f⋆g)(x) = ∫ e^(ip₀x₀) φ_f(p₀,x₁) g(x₀, e^(−λp₀)x₁) dp₀/2π, evaluated
    // at fixed position points by nested quadrature on the analytic
    // profiles, against the grid implementation reconstructed at the same
    // points.
    let lambda = 0.5;
    let f = Profile {
        amp: Complex::new(0.9, 0.35),
        a: 0.5,
        b: -0.2,
        s: 1.05,
        c: 0.3,
        m: 0.6,
    };
    let g = Profile {
        amp: Complex::new(0.7, -0.2),
        a: 0.45,
        b: 0.25,
        s: 0.95,
        c: -0.4,
        m: -0.8,
    };

    let grid = GridSpec::new(6.0, 1024, 20.0, 256, lambda).unwrap();
    let fg = star_product(&sample(grid, f), &sample(grid, g)).unwrap();

    for &(x0, l) in &[(0.0, 128usize), (0.37, 140), (-1.1, 114)] {
        let x1 = grid.x1(l);
        // oracle: direct double integral
        let (oracle, _, _) = integrate_complex(
            |p0: f64| {
                let scale = (-lambda * p0).exp();
                Complex::new(0.0, p0 * x0).exp() * f.phi(p0, x1) * g.position(x0, scale * x1)
            },
            f.b - f.a,
            f.b + f.a,
            0.0,
            1e-9,
            400,
        );
        let oracle = oracle / TAU;

        // implementation: reconstruct the grid star product at (x₀, x₁)
        let mut value = Complex::new(0.0, 0.0);
        for k in 0..grid.n_p0 {
            value += Complex::new(0.0, grid.p0(k) * x0).exp() * fg.get(k, l);
        }
        value *= Complex::new(grid.dp() / TAU, 0.0);

        let defect = (value - oracle).norm() / oracle.norm().max(1e-3);
        assert!(
            defect < 1e-6,
            "at ({}, {}): grid {} vs oracle {} (defect {:.2e})",
            x0,
            x1,
            value,
            oracle,
            defect
        );
    }
}

#[test]
fn involution_matches_position_space_formula() {
    // f*(x) = ∫ e^(ip₀x₀)(F₀f̄)(p₀, e^(−λp₀)x₁) dp₀/2π with
    // (F₀f̄)(p₀,y) = conj(φ_f(−p₀,y)), against the grid involution.
    let lambda = 0.5;
    let f = Profile {
        amp: Complex::new(0.8, 0.5),
        a: 0.5,
        b: 0.15,
        s: 1.0,
        c: 0.2,
        m: 0.9,
    };
    let grid = GridSpec::new(6.0, 1024, 20.0, 256, lambda).unwrap();
    let fstar = kappa_minkowski::algebra::involution(&sample(grid, f));

    for &(x0, l) in &[(0.21, 132usize), (-0.8, 120)] {
        let x1 = grid.x1(l);
        let (oracle, _, _) = integrate_complex(
            |p0: f64| {
                let y = (-lambda * p0).exp() * x1;
                Complex::new(0.0, p0 * x0).exp() * f.phi(-p0, y).conj()
            },
            -(f.b + f.a),
            -(f.b - f.a),
            0.0,
            1e-10,
            400,
        );
        let oracle = oracle / TAU;

        let mut value = Complex::new(0.0, 0.0);
        for k in 0..grid.n_p0 {
            value += Complex::new(0.0, grid.p0(k) * x0).exp() * fstar.get(k, l);
        }
        value *= Complex::new(grid.dp() / TAU, 0.0);

        let defect = (value - oracle).norm() / oracle.norm().max(1e-3);
        assert!(defect < 1e-6, "defect {:.2e}", defect);
    }
}

#[test]
fn weight_matches_analytic_gaussian_integral() {
    // ω reads the p₀ = 0 row; for a separable Gaussian row the x₁ integral
    // is exactly known: ∫ A e^(−x²/(2s²)) dx = A·s·√(2π).
    let grid = GridSpec::new(6.0, 128, 20.0, 256, 0.5).unwrap();
    let p = Profile {
        amp: Complex::new(1.3, -0.4),
        a: 0.6,
        b: 0.0,
        s: 1.1,
        c: 0.0,
        m: 0.0,
    };
    let f = sample(grid, p);
    let omega = kappa_minkowski::algebra::weight_omega(&f);
    // w(0) = 1, so the zero row is A·e^(−x₁²/(2s²))
    let expect = p.amp * p.s * (2.0 * std::f64::consts::PI).sqrt();
    assert!(
        (omega - expect).norm() / expect.norm() < 1e-12,
        "omega {} vs {}",
        omega,
        expect
    );
}
