//! Classification of twisted-primitive elements.
//!
//! An element A with Δ(A) = A'⊗1 + E^m⊗A is exactly what makes the twisted
//! commutator [ρ(A), π(f)]_σ bounded (it then acts as π(A'▷f)), with twist
//! σ = E^m. This module computes, inside a finite monomial window, the space
//! of all such A as the null space of the linear map
//!
//! ```text
//! A ↦ (coefficients of Δ(A) − E^m⊗A on tensor monomials L⊗R with R ≠ 1).
//! ```
//!
//! The expected outcome, stable under enlarging the window, is
//! span{1, E^m} for m < 0 or m > 1, span{1, P₀} for m = 0 and
//! span{1, E, P₁} for m = 1.

use super::linalg::RatMatrix;
use super::{HopfElement, HopfError, LaurentScalar, Monomial, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Monomials P₀^i P₁^j E^k with i+j ≤ max_degree and |k| ≤ e_window, sorted.
fn window(max_degree: u32, e_window: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let e = e_window as i32;
    for i in 0..=max_degree {
        for j in 0..=(max_degree - i) {
            for k in -e..=e {
                out.push(Monomial::new(i, j, k));
            }
        }
    }
    out.sort();
    out
}

/// Basis of { A in the window : Δ(A) = A'⊗1 + E^m⊗A for some A' }.
///
/// The E-window is widened to cover |m| so the twist E^m itself is always
/// expressible; with a narrower window the m-dependent part of the kernel
/// would be cut off by the truncation rather than by the algebra.
///
/// Rejects `max_degree = 0` (the classification is degenerate there).
pub fn classify_twisted_primitives(
    m: i32,
    max_degree: u32,
    max_e_power: u32,
) -> Result<Vec<HopfElement>, HopfError> {
    if max_degree == 0 {
        return Err(HopfError::InvalidDegree);
    }
    let e_window = max_e_power.max(m.unsigned_abs());
    let basis = window(max_degree, e_window);
    let twist = Monomial::new(0, 0, m);

    // Column j: coefficients of Δ(M_j) − E^m⊗M_j on pairs with right leg ≠ 1.
    let mut row_index: BTreeMap<(Monomial, Monomial), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<((Monomial, Monomial), Rat)>> = Vec::with_capacity(basis.len());
    for mono in &basis {
        let delta = HopfElement::monomial(*mono, LaurentScalar::one()).coproduct();
        let mut entries = Vec::new();
        let mut push = |key: (Monomial, Monomial), q: Rat| {
            if key.1 == Monomial::UNIT || q.is_zero() {
                return;
            }
            let next = row_index.len();
            row_index.entry(key).or_insert(next);
            entries.push((key, q));
        };
        for ((l, r), c) in delta.iter() {
            // Coefficients of a monomial coproduct are plain integers.
            let (exp, q) = c.single_term().expect("monomial coproduct coefficient");
            debug_assert_eq!(exp, 0);
            push((*l, *r), q.clone());
        }
        push((twist, *mono), -Rat::one());
        columns.push(entries);
    }

    let mut matrix = RatMatrix::zeros(row_index.len().max(1), basis.len());
    for (j, entries) in columns.iter().enumerate() {
        for (key, q) in entries {
            let mut acc = matrix.at(row_index[key], j).clone();
            acc += q;
            matrix.set(row_index[key], j, acc);
        }
    }

    let kernel = matrix.null_space();
    let mut out: Vec<HopfElement> = kernel
        .into_iter()
        .map(|vec| {
            let mut elem = HopfElement::zero();
            for (mono, q) in basis.iter().zip(vec) {
                elem.add_scaled_monomial(*mono, &LaurentScalar::from_rat(q));
            }
            elem
        })
        .collect();
    // display order: unit first, then group-likes by |k|, then P-monomials
    out.sort_by_key(|e| {
        e.iter()
            .next()
            .map(|(m, _)| (m.degree(), m.p0, m.p1, m.e.unsigned_abs(), m.e < 0))
    });
    Ok(out)
}

/// Extracts A' from Δ(a) = A'⊗1 + E^m⊗a.
///
/// This is the element through which the twisted commutator acts:
/// [ρ(a), π(f)]_σ = π(A'▷f) with σ = E^m. Errors when the coproduct does not
/// have the required shape, which signals an unbounded twisted commutator.
pub fn twisted_commutator_symbol(a: &HopfElement, m: i32) -> Result<HopfElement, HopfError> {
    let mut defect = a.coproduct();
    let twist = Monomial::new(0, 0, m);
    for (mono, c) in a.iter() {
        defect.add_scaled((twist, *mono), &(-c));
    }
    let mut a_prime = HopfElement::zero();
    for ((l, r), c) in defect.iter() {
        if *r != Monomial::UNIT {
            return Err(HopfError::CoproductShape {
                element: a.to_string(),
                twist: m,
            });
        }
        a_prime.add_scaled_monomial(*l, c);
    }
    Ok(a_prime)
}
