//! The partial-Fourier data carrier and its row resampling machinery.

use super::grid::GridSpec;
use crate::scalar::Real;
use num_complex::Complex;
use rustfft::FftPlanner;

/// Sample of φ_f(p₀, x₁) = (F₀f)(p₀, x₁) on a [`GridSpec`], row-major in p₀.
///
/// The x₀ dependence of f is reconstructed analytically from the p₀ rows, so
/// this is a complete numeric representative of the algebra element. Values
/// must stay finite; compact p₀ support is structural (grid truncation) and
/// Schwartz x₁ decay is monitored through [`Self::boundary_decay`].
#[derive(Clone, Debug)]
pub struct PartialFourierFunction<F: Real> {
    grid: GridSpec<F>,
    values: Vec<Complex<F>>,
}

impl<F: Real> PartialFourierFunction<F> {
    pub fn zero(grid: GridSpec<F>) -> Self {
        Self {
            grid,
            values: vec![Complex::new(F::zero(), F::zero()); grid.n_p0 * grid.n_x1],
        }
    }

    /// Samples `f(p₀, x₁)` on the grid.
    pub fn from_fn(grid: GridSpec<F>, f: impl Fn(F, F) -> Complex<F>) -> Self {
        let mut out = Self::zero(grid);
        for k in 0..grid.n_p0 {
            let p0 = grid.p0(k);
            let row = out.row_mut(k);
            for (l, v) in row.iter_mut().enumerate() {
                *v = f(p0, grid.x1(l));
            }
        }
        out
    }

    pub fn grid(&self) -> &GridSpec<F> {
        &self.grid
    }

    pub fn values(&self) -> &[Complex<F>] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex<F>] {
        &mut self.values
    }

    pub fn row(&self, k: usize) -> &[Complex<F>] {
        &self.values[k * self.grid.n_x1..(k + 1) * self.grid.n_x1]
    }

    pub fn row_mut(&mut self, k: usize) -> &mut [Complex<F>] {
        &mut self.values[k * self.grid.n_x1..(k + 1) * self.grid.n_x1]
    }

    pub fn get(&self, k: usize, l: usize) -> Complex<F> {
        self.values[k * self.grid.n_x1 + l]
    }

    /// Row indices with any nonzero sample (compact p₀ support in practice).
    pub fn support_rows(&self) -> Vec<usize> {
        (0..self.grid.n_p0)
            .filter(|&k| {
                self.row(k)
                    .iter()
                    .any(|v| v.re != F::zero() || v.im != F::zero())
            })
            .collect()
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }

    /// Largest |φ| on the outermost x₁ columns; small values certify that
    /// the Schwartz tail is well inside the grid.
    pub fn boundary_decay(&self) -> F {
        let n = self.grid.n_x1;
        let mut m = F::zero();
        for k in 0..self.grid.n_p0 {
            let row = self.row(k);
            m = m.max(row[0].norm()).max(row[n - 1].norm());
        }
        m
    }

    pub fn max_abs(&self) -> F {
        self.values
            .iter()
            .fold(F::zero(), |acc, v| acc.max(v.norm()))
    }

    // -- linear structure ---------------------------------------------------

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.grid, rhs.grid);
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&rhs.values) {
            *a = *a + *b;
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.grid, rhs.grid);
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&rhs.values) {
            *a = *a - *b;
        }
        out
    }

    pub fn scale(&self, c: Complex<F>) -> Self {
        let mut out = self.clone();
        for a in out.values.iter_mut() {
            *a = *a * c;
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for a in out.values.iter_mut() {
            *a = a.conj();
        }
        out
    }

    // -- exact multipliers ---------------------------------------------------

    /// Multiplies every row by `m(p₀)`; exact in this representation.
    pub fn multiply_p0_rows(&self, m: impl Fn(F) -> Complex<F>) -> Self {
        let mut out = self.clone();
        for k in 0..self.grid.n_p0 {
            let c = m(self.grid.p0(k));
            for v in out.row_mut(k) {
                *v = *v * c;
            }
        }
        out
    }

    /// Multiplies every column by `m(x₁)` (e.g. a plane-wave modulation).
    pub fn multiply_x1_cols(&self, m: impl Fn(F) -> Complex<F>) -> Self {
        let mut out = self.clone();
        let factors: Vec<Complex<F>> = (0..self.grid.n_x1).map(|l| m(self.grid.x1(l))).collect();
        for k in 0..self.grid.n_p0 {
            for (v, c) in out.row_mut(k).iter_mut().zip(&factors) {
                *v = *v * *c;
            }
        }
        out
    }

    /// Applies the x₁-Fourier multiplier `s(p₀, κ)` (κ the x₁ wavenumber):
    /// FFT each row, multiply the bins, transform back.
    pub fn x1_fourier_multiplier(
        &self,
        s: impl Fn(F, F) -> Complex<F>,
    ) -> Result<Self, super::AlgebraError> {
        let n = self.grid.n_x1;
        let mut planner = FftPlanner::<F>::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        let mut out = self.clone();
        let mut scratch =
            vec![Complex::new(F::zero(), F::zero()); fwd.get_inplace_scratch_len().max(inv.get_inplace_scratch_len())];
        let norm = F::one() / F::from_usize(n).unwrap();
        for k in 0..self.grid.n_p0 {
            let p0 = self.grid.p0(k);
            let row = out.row_mut(k);
            fwd.process_with_scratch(row, &mut scratch);
            for (m, v) in row.iter_mut().enumerate() {
                let sym = s(p0, self.grid.wavenumber(m));
                if !sym.re.is_finite() || !sym.im.is_finite() {
                    return Err(super::AlgebraError::NonFiniteSymbol {
                        p0: p0.to_f64_lossy(),
                        p1: self.grid.wavenumber(m).to_f64_lossy(),
                    });
                }
                *v = *v * sym * norm;
            }
            inv.process_with_scratch(row, &mut scratch);
        }
        Ok(out)
    }

    // -- norms and integrals --------------------------------------------------

    /// ∫φ_f(0, x₁) dx₁ — the weight ω(f), exact at the p₀ = 0 row.
    pub fn omega(&self) -> Complex<F> {
        let row = self.row(self.grid.zero_row());
        let sum = row
            .iter()
            .fold(Complex::new(F::zero(), F::zero()), |a, b| a + b);
        sum * Complex::new(self.grid.dx(), F::zero())
    }

    /// L² norm squared of the position-space function:
    /// (1/2π)∫∫|φ|² dp₀ dx₁ by Parseval in x₀.
    pub fn l2_norm_sq(&self) -> F {
        let w = self.grid.dp() * self.grid.dx() / (F::of(2.0) * F::PI());
        self.values
            .iter()
            .fold(F::zero(), |acc, v| acc + v.norm_sqr())
            * w
    }

    /// GNS norm squared (f, f) = ‖Uf‖²_{L²}, evaluated through the exact
    /// substitution (1/2π)∫∫ e^(−λp₀)|φ_f|² dp₀ dx₁.
    pub fn gns_norm_sq(&self) -> F {
        let w = self.grid.dp() * self.grid.dx() / (F::of(2.0) * F::PI());
        let lambda = self.grid.lambda;
        let mut acc = F::zero();
        for k in 0..self.grid.n_p0 {
            let damp = (-lambda * self.grid.p0(k)).exp();
            let row_sum = self
                .row(k)
                .iter()
                .fold(F::zero(), |a, v| a + v.norm_sqr());
            acc = acc + damp * row_sum;
        }
        acc * w
    }

    /// GNS inner product through the same exact substitution:
    /// (f, g) = (1/2π)∫∫ e^(−λp₀) φ̄_f φ_g dp₀ dx₁.
    pub fn gns_inner(&self, rhs: &Self) -> Complex<F> {
        debug_assert_eq!(self.grid, rhs.grid);
        let w = self.grid.dp() * self.grid.dx() / (F::of(2.0) * F::PI());
        let lambda = self.grid.lambda;
        let mut acc = Complex::new(F::zero(), F::zero());
        for k in 0..self.grid.n_p0 {
            let damp = (-lambda * self.grid.p0(k)).exp();
            let mut row_sum = Complex::new(F::zero(), F::zero());
            for (a, b) in self.row(k).iter().zip(rhs.row(k)) {
                row_sum = row_sum + a.conj() * *b;
            }
            acc = acc + row_sum * Complex::new(damp, F::zero());
        }
        acc * Complex::new(w, F::zero())
    }

    /// Resamples every row at the scaled abscissas `scale(p₀)·x1_l` with a
    /// local Lagrange stencil, zero beyond the grid.
    pub fn resample_x1_scaled(&self, scale: impl Fn(F) -> F, ord: usize) -> Self {
        let mut out = Self::zero(self.grid);
        for k in 0..self.grid.n_p0 {
            let c = scale(self.grid.p0(k));
            let plan = ResamplePlan::scaled(&self.grid, c, ord);
            plan.apply(self.row(k), out.row_mut(k));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Local Lagrange resampling on a uniform grid
// ---------------------------------------------------------------------------

/// Precomputed interpolation weights for one set of target abscissas.
///
/// The stencil has `ord` consecutive nodes (ord even: 4 = cubic, 8 default);
/// targets outside the grid read zeros, which is justified by the Schwartz
/// x₁ decay of everything we touch.
pub struct ResamplePlan<F> {
    n: usize,
    ord: usize,
    /// Per target: first stencil node (may be negative / past the end).
    base: Vec<isize>,
    /// Per target: `ord` Lagrange weights, or a single 1.0 for exact hits
    /// (encoded as base = node index, weights[0] = 1, rest 0).
    weights: Vec<F>,
    /// Identity shortcut (scale exactly 1).
    identity: bool,
}

impl<F: Real> ResamplePlan<F> {
    /// Plan for targets `c·x1_l`, l = 0..n_x1.
    pub fn scaled(grid: &GridSpec<F>, c: F, ord: usize) -> Self {
        if c == F::one() {
            return Self {
                n: grid.n_x1,
                ord,
                base: Vec::new(),
                weights: Vec::new(),
                identity: true,
            };
        }
        let targets: Vec<F> = (0..grid.n_x1).map(|l| c * grid.x1(l)).collect();
        Self::for_points(grid, &targets, ord)
    }

    /// Plan for arbitrary target abscissas.
    pub fn for_points(grid: &GridSpec<F>, targets: &[F], ord: usize) -> Self {
        assert!(ord >= 2 && ord % 2 == 0, "stencil size must be even and >= 2");
        let n = grid.n_x1;
        let dx = grid.dx();
        // 1/Π_{j≠i}(i−j) for the uniform stencil, reused for every target.
        let inv_denom: Vec<F> = (0..ord)
            .map(|i| {
                let mut d = 1.0f64;
                for j in 0..ord {
                    if j != i {
                        d *= i as f64 - j as f64;
                    }
                }
                F::of(1.0 / d)
            })
            .collect();

        let mut base = Vec::with_capacity(targets.len());
        let mut weights = Vec::with_capacity(targets.len() * ord);
        let half = F::of((n / 2) as f64);
        for &t in targets {
            // grid coordinate of the target, in the centered convention
            let u = t / dx + half;
            let i0 = u.floor();
            let b = i0.to_f64_lossy() as isize - (ord as isize) / 2 + 1;
            base.push(b);
            let frac = u - F::of(b as f64);
            // d_j = u − (b + j), in stencil-local coordinates
            let d: Vec<F> = (0..ord).map(|j| frac - F::of(j as f64)).collect();
            if let Some(hit) = d.iter().position(|&v| v == F::zero()) {
                // exact node: weights collapse to a Kronecker delta
                for j in 0..ord {
                    weights.push(if j == hit { F::one() } else { F::zero() });
                }
                continue;
            }
            // w_j = Π_{i≠j} d_i · inv_denom_j via prefix/suffix products
            let mut pre = vec![F::one(); ord + 1];
            for j in 0..ord {
                pre[j + 1] = pre[j] * d[j];
            }
            let mut suf = vec![F::one(); ord + 1];
            for j in (0..ord).rev() {
                suf[j] = suf[j + 1] * d[j];
            }
            for j in 0..ord {
                weights.push(pre[j] * suf[j + 1] * inv_denom[j]);
            }
        }
        Self {
            n,
            ord,
            base,
            weights,
            identity: false,
        }
    }

    pub fn apply(&self, src: &[Complex<F>], dst: &mut [Complex<F>]) {
        if self.identity {
            dst.copy_from_slice(src);
            return;
        }
        debug_assert_eq!(src.len(), self.n);
        for (l, out) in dst.iter_mut().enumerate() {
            let b = self.base[l];
            let w = &self.weights[l * self.ord..(l + 1) * self.ord];
            let mut acc = Complex::new(F::zero(), F::zero());
            for (j, &wj) in w.iter().enumerate() {
                let idx = b + j as isize;
                if idx >= 0 && (idx as usize) < self.n && wj != F::zero() {
                    let v = src[idx as usize];
                    acc = acc + Complex::new(v.re * wj, v.im * wj);
                }
            }
            *out = acc;
        }
    }

    /// Interpolates a single row at one point (used by the kernel evaluator).
    pub fn eval_at(grid: &GridSpec<F>, row: &[Complex<F>], t: F, ord: usize) -> Complex<F> {
        let plan = Self::for_points(grid, &[t], ord);
        let mut out = [Complex::new(F::zero(), F::zero())];
        plan.apply(row, &mut out);
        out[0]
    }
}
