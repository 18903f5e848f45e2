//! Exact symbolic arithmetic in the extended momentum algebra.
//!
//! The algebra T_κ is commutative, generated by P₀, P₁ and an invertible
//! group-like element E, with the twisted Hopf structure
//!
//! ```text
//! Δ(P₀) = P₀⊗1 + 1⊗P₀,   Δ(P₁) = P₁⊗1 + E⊗P₁,   Δ(E) = E⊗E,
//! ε(P₀) = ε(P₁) = 0,     ε(E) = 1,
//! S(P₀) = −P₀,           S(P₁) = −E⁻¹P₁,         S(E) = E⁻¹.
//! ```
//!
//! Monomials P₀^i P₁^j E^k (i, j ≥ 0, k ∈ ℤ) form a basis. Elements are
//! stored as finitely supported maps from monomials to [`LaurentScalar`]
//! coefficients: Laurent polynomials in the deformation parameter λ with
//! exact rational coefficients. Everything in this module is exact — the
//! classification of twisted-primitive elements and the uniqueness of the
//! Dirac operator are linear algebra over ℚ and must not depend on floating
//! point tolerances.
//!
//! Canonical form invariant: no stored zero coefficient, anywhere. All
//! constructors and arithmetic re-normalize, so equality is structural.

mod classify;
mod dirac;
mod linalg;
mod serial;

pub use classify::{classify_twisted_primitives, twisted_commutator_symbol};
pub use dirac::{solve_dirac_uniqueness, DiracSolution, TwistCandidate};
pub use linalg::{RatMatrix, SolveOutcome};
pub use serial::{hopf_element_from_json, hopf_element_to_json, tensor_element_to_json};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Exact rational scalar.
pub type Rat = BigRational;

/// Errors from the symbolic engine.
#[derive(Debug, Error)]
pub enum HopfError {
    /// Classification window with `max_degree = 0` is degenerate.
    #[error("classification requires max_degree >= 1")]
    InvalidDegree,
    /// The coproduct does not have the shape A'⊗1 + E^m⊗A required for a
    /// bounded twisted commutator.
    #[error("coproduct of {element} is not of the form A'⊗1 + E^{twist}⊗A; the twisted commutator is unbounded")]
    CoproductShape { element: String, twist: i32 },
    /// The Dirac constraint system is empty or not a single point.
    #[error("Dirac uniqueness solve failed: {0}")]
    DiracSolve(String),
    /// Serialized form cannot be represented (coefficient overflow etc.).
    #[error("serialization: {0}")]
    Serial(String),
}

fn rat_of(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// LaurentScalar
// ---------------------------------------------------------------------------

/// Laurent polynomial in λ with exact rational coefficients.
///
/// Keys are λ-exponents; the map never stores a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Rat::one(), 0)
    }

    /// The single term `c·λ^exp` (canonicalized if `c = 0`).
    pub fn term(c: Rat, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::term(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_of(n))
    }

    /// `λ^exp`.
    pub fn lambda_pow(exp: i64) -> Self {
        Self::term(Rat::one(), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The unique term of a monomial Laurent scalar, if it has exactly one.
    pub fn single_term(&self) -> Option<(i64, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    fn add_term(&mut self, exp: i64, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c.clone()));
        }
        out
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            write!(f, "{}", format_rat_lambda(&c.abs(), *e))?;
        }
        Ok(())
    }
}

/// Formats `c·λ^exp` for non-negative `c`, e.g. `3/2`, `λ`, `2/λ^2`.
fn format_rat_lambda(c: &Rat, exp: i64) -> String {
    let c_str = if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    };
    match exp {
        0 => c_str,
        1 if c.is_one() => "λ".to_string(),
        1 => format!("{}λ", c_str),
        -1 => format!("{}/λ", c_str),
        e if e > 1 && c.is_one() => format!("λ^{}", e),
        e if e > 1 => format!("{}λ^{}", c_str, e),
        e => format!("{}/λ^{}", c_str, -e),
    }
}

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

/// Basis monomial P₀^i P₁^j E^k. The derived `Ord` is lexicographic on
/// (i, j, k), which fixes the canonical ordering of serialized elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    /// Power of P₀ (i ≥ 0).
    pub p0: u32,
    /// Power of P₁ (j ≥ 0).
    pub p1: u32,
    /// Power of E (any integer; E is invertible).
    pub e: i32,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial { p0: 0, p1: 0, e: 0 };

    pub fn new(p0: u32, p1: u32, e: i32) -> Self {
        Self { p0, p1, e }
    }

    /// Total polynomial degree in P₀ and P₁ (E is dimensionless).
    pub fn degree(&self) -> u32 {
        self.p0 + self.p1
    }

    fn product(&self, rhs: &Monomial) -> Monomial {
        Monomial {
            p0: self.p0 + rhs.p0,
            p1: self.p1 + rhs.p1,
            e: self.e + rhs.e,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::UNIT {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (name, pow) in [("P0", self.p0 as i64), ("P1", self.p1 as i64), ("E", self.e as i64)] {
            match pow {
                0 => {}
                1 => parts.push(name.to_string()),
                p => parts.push(format!("{}^{}", name, p)),
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

// ---------------------------------------------------------------------------
// HopfElement
// ---------------------------------------------------------------------------

/// Element of T_κ: finitely supported map monomial → Laurent coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HopfElement {
    terms: BTreeMap<Monomial, LaurentScalar>,
}

impl HopfElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::UNIT, LaurentScalar::one())
    }

    pub fn monomial(m: Monomial, c: LaurentScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// Generator P₀.
    pub fn p0() -> Self {
        Self::monomial(Monomial::new(1, 0, 0), LaurentScalar::one())
    }

    /// Generator P₁.
    pub fn p1() -> Self {
        Self::monomial(Monomial::new(0, 1, 0), LaurentScalar::one())
    }

    /// E^k for any integer k.
    pub fn e_pow(k: i32) -> Self {
        Self::monomial(Monomial::new(0, 0, k), LaurentScalar::one())
    }

    /// The unique Dirac time component D₀ = (1/λ)(1 − E).
    pub fn dirac_d0() -> Self {
        let mut out = Self::monomial(Monomial::UNIT, LaurentScalar::lambda_pow(-1));
        out.add_scaled_monomial(
            Monomial::new(0, 0, 1),
            &LaurentScalar::term(-Rat::one(), -1),
        );
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> LaurentScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest total degree i+j over the support (0 for the zero element).
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_scaled_monomial(&mut self, m: Monomial, c: &LaurentScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(LaurentScalar::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_scaled_monomial(*m, &(v * c));
        }
        out
    }

    /// Commutative product: exponents add componentwise.
    pub fn multiply(&self, rhs: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_scaled_monomial(m1.product(m2), &(c1 * c2));
            }
        }
        out
    }

    /// Coproduct, extended multiplicatively from the generators.
    ///
    /// On a monomial: Δ(P₀^i P₁^j E^k) = (P₀⊗1+1⊗P₀)^i (P₁⊗1+E⊗P₁)^j (E^k⊗E^k).
    pub fn coproduct(&self) -> TensorElement {
        let d_p0 = {
            let mut t = TensorElement::zero();
            t.add_scaled((Monomial::new(1, 0, 0), Monomial::UNIT), &LaurentScalar::one());
            t.add_scaled((Monomial::UNIT, Monomial::new(1, 0, 0)), &LaurentScalar::one());
            t
        };
        let d_p1 = {
            let mut t = TensorElement::zero();
            t.add_scaled((Monomial::new(0, 1, 0), Monomial::UNIT), &LaurentScalar::one());
            t.add_scaled((Monomial::new(0, 0, 1), Monomial::new(0, 1, 0)), &LaurentScalar::one());
            t
        };
        let mut out = TensorElement::zero();
        for (m, c) in &self.terms {
            let mut t = TensorElement::zero();
            t.add_scaled(
                (Monomial::new(0, 0, m.e), Monomial::new(0, 0, m.e)),
                &LaurentScalar::one(),
            );
            for _ in 0..m.p0 {
                t = t.multiply(&d_p0);
            }
            for _ in 0..m.p1 {
                t = t.multiply(&d_p1);
            }
            out.add_all_scaled(&t, c);
        }
        out
    }

    /// Counit: ε(P₀^i P₁^j E^k) = 1 if i = j = 0, else 0, extended linearly.
    pub fn counit(&self) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (m, c) in &self.terms {
            if m.p0 == 0 && m.p1 == 0 {
                out = &out + c;
            }
        }
        out
    }

    /// Antipode: S(P₀^i P₁^j E^k) = (−1)^(i+j) P₀^i P₁^j E^(−j−k).
    ///
    /// T_κ is commutative, so S is an algebra map and this multiplicative
    /// formula follows from its values on the generators.
    pub fn antipode(&self) -> HopfElement {
        let mut out = HopfElement::zero();
        for (m, c) in &self.terms {
            let target = Monomial::new(m.p0, m.p1, -(m.p1 as i32) - m.e);
            let signed = if (m.p0 + m.p1) % 2 == 1 { -c } else { c.clone() };
            out.add_scaled_monomial(target, &signed);
        }
        out
    }

    /// Checks coassociativity, the counit law and both antipode laws exactly.
    pub fn hopf_axioms_check(&self) -> bool {
        let d = self.coproduct();

        // (Δ⊗id)Δ = (id⊗Δ)Δ
        if d.coproduct_left() != d.coproduct_right() {
            return false;
        }

        // (ε⊗id)Δ(a) = a = (id⊗ε)Δ(a)
        let mut left = HopfElement::zero();
        let mut right = HopfElement::zero();
        for ((l, r), c) in &d.terms {
            if l.p0 == 0 && l.p1 == 0 {
                left.add_scaled_monomial(*r, c);
            }
            if r.p0 == 0 && r.p1 == 0 {
                right.add_scaled_monomial(*l, c);
            }
        }
        if left != *self || right != *self {
            return false;
        }

        // m(S⊗id)Δ(a) = ε(a)·1 = m(id⊗S)Δ(a)
        let eps_unit = HopfElement::monomial(Monomial::UNIT, self.counit());
        let mut s_left = HopfElement::zero();
        let mut s_right = HopfElement::zero();
        for ((l, r), c) in &d.terms {
            let sl = HopfElement::monomial(*l, c.clone()).antipode();
            s_left = &s_left + &sl.multiply(&HopfElement::monomial(*r, LaurentScalar::one()));
            let sr = HopfElement::monomial(*r, LaurentScalar::one()).antipode();
            s_right = &s_right + &HopfElement::monomial(*l, c.clone()).multiply(&sr);
        }
        s_left == eps_unit && s_right == eps_unit
    }
}

impl Add for &HopfElement {
    type Output = HopfElement;
    fn add(self, rhs: &HopfElement) -> HopfElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_scaled_monomial(*m, c);
        }
        out
    }
}

impl Sub for &HopfElement {
    type Output = HopfElement;
    fn sub(self, rhs: &HopfElement) -> HopfElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_scaled_monomial(*m, &(-c));
        }
        out
    }
}

impl fmt::Display for HopfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Factor out a common λ-power when every coefficient is a single
        // Laurent term with the same exponent, e.g. (1/λ)(1 - E).
        let common: Option<i64> = {
            let mut exps = self.terms.values().map(|c| c.single_term().map(|(e, _)| e));
            match exps.next().flatten() {
                Some(e0) if self.terms.len() > 1 => {
                    if exps.all(|e| e == Some(e0)) && e0 != 0 {
                        Some(e0)
                    } else {
                        None
                    }
                }
                _ => None,
            }
        };
        if let Some(e0) = common {
            let prefix = match e0 {
                1 => "λ".to_string(),
                -1 => "(1/λ)".to_string(),
                e if e > 1 => format!("λ^{}", e),
                e => format!("(1/λ^{})", -e),
            };
            write!(f, "{}(", prefix)?;
            let stripped: Vec<(Monomial, Rat)> = self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.single_term().unwrap().1.clone()))
                .collect();
            write_rational_sum(f, &stripped)?;
            return write!(f, ")");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match c.single_term() {
                Some((0, q)) if q.is_one() => write!(f, "{}", m)?,
                Some((0, q)) if (-q.clone()).is_one() => write!(f, "-{}", m)?,
                _ => {
                    if *m == Monomial::UNIT {
                        write!(f, "{}", c)?;
                    } else {
                        write!(f, "({}) {}", c, m)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn write_rational_sum(f: &mut fmt::Formatter<'_>, terms: &[(Monomial, Rat)]) -> fmt::Result {
    let mut first = true;
    for (m, q) in terms {
        let neg = q.is_negative();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let a = q.abs();
        if *m == Monomial::UNIT {
            if a.is_integer() {
                write!(f, "{}", a.numer())?;
            } else {
                write!(f, "{}/{}", a.numer(), a.denom())?;
            }
        } else if a.is_one() {
            write!(f, "{}", m)?;
        } else if a.is_integer() {
            write!(f, "{} {}", a.numer(), m)?;
        } else {
            write!(f, "({}/{}) {}", a.numer(), a.denom(), m)?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// TensorElement
// ---------------------------------------------------------------------------

/// Element of T_κ ⊗ T_κ in the monomial⊗monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), LaurentScalar>,
}

/// Third tensor power, used only for the coassociativity check.
type Tensor3 = BTreeMap<(Monomial, Monomial, Monomial), LaurentScalar>;

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_scaled(&mut self, key: (Monomial, Monomial), c: &LaurentScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(LaurentScalar::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn add_all_scaled(&mut self, rhs: &TensorElement, c: &LaurentScalar) {
        for (k, v) in &rhs.terms {
            self.add_scaled(*k, &(v * c));
        }
    }

    /// Componentwise product: (a⊗b)(c⊗d) = ac⊗bd (all legs commute).
    pub fn multiply(&self, rhs: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &rhs.terms {
                out.add_scaled((l1.product(l2), r1.product(r2)), &(c1 * c2));
            }
        }
        out
    }

    /// Applies Δ to the left leg: (Δ⊗id).
    fn coproduct_left(&self) -> Tensor3 {
        let mut out = Tensor3::new();
        for ((l, r), c) in &self.terms {
            let dl = HopfElement::monomial(*l, LaurentScalar::one()).coproduct();
            for ((a, b), q) in &dl.terms {
                add_t3(&mut out, (*a, *b, *r), &(q * c));
            }
        }
        out
    }

    /// Applies Δ to the right leg: (id⊗Δ).
    fn coproduct_right(&self) -> Tensor3 {
        let mut out = Tensor3::new();
        for ((l, r), c) in &self.terms {
            let dr = HopfElement::monomial(*r, LaurentScalar::one()).coproduct();
            for ((a, b), q) in &dr.terms {
                add_t3(&mut out, (*l, *a, *b), &(q * c));
            }
        }
        out
    }
}

fn add_t3(map: &mut Tensor3, key: (Monomial, Monomial, Monomial), c: &LaurentScalar) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(LaurentScalar::zero);
    *entry = &*entry + c;
    if entry.is_zero() {
        map.remove(&key);
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_all_scaled(rhs, &LaurentScalar::one());
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_scaled(*k, &(-v));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam_inv() -> LaurentScalar {
        LaurentScalar::lambda_pow(-1)
    }

    #[test]
    fn product_adds_exponents() {
        // P₀ · P₁E = P₀P₁E
        let a = HopfElement::p0();
        let b = HopfElement::p1().multiply(&HopfElement::e_pow(1));
        let expected = HopfElement::monomial(Monomial::new(1, 1, 1), LaurentScalar::one());
        assert_eq!(a.multiply(&b), expected);
    }

    #[test]
    fn unit_is_neutral() {
        let a = HopfElement::dirac_d0().multiply(&HopfElement::p1());
        assert_eq!(HopfElement::one().multiply(&a), a);
        assert_eq!(a.multiply(&HopfElement::one()), a);
    }

    #[test]
    fn dirac_d0_square_expands() {
        // ((1/λ)(1−E))² = (1/λ²)(1 − 2E + E²)
        let d0 = HopfElement::dirac_d0();
        let sq = d0.multiply(&d0);
        let mut expected = HopfElement::monomial(Monomial::UNIT, LaurentScalar::lambda_pow(-2));
        expected.add_scaled_monomial(
            Monomial::new(0, 0, 1),
            &LaurentScalar::term(rat_of(-2), -2),
        );
        expected.add_scaled_monomial(Monomial::new(0, 0, 2), &LaurentScalar::lambda_pow(-2));
        assert_eq!(sq, expected);
    }

    #[test]
    fn coproduct_of_generators() {
        // Δ(P₁) = P₁⊗1 + E⊗P₁
        let d = HopfElement::p1().coproduct();
        let mut expected = TensorElement::zero();
        expected.add_scaled((Monomial::new(0, 1, 0), Monomial::UNIT), &LaurentScalar::one());
        expected.add_scaled(
            (Monomial::new(0, 0, 1), Monomial::new(0, 1, 0)),
            &LaurentScalar::one(),
        );
        assert_eq!(d, expected);

        // Δ(1) = 1⊗1
        let d1 = HopfElement::one().coproduct();
        let mut e1 = TensorElement::zero();
        e1.add_scaled((Monomial::UNIT, Monomial::UNIT), &LaurentScalar::one());
        assert_eq!(d1, e1);
    }

    #[test]
    fn coproduct_p0_squared() {
        // Δ(P₀²) = P₀²⊗1 + 2P₀⊗P₀ + 1⊗P₀²
        let p0sq = HopfElement::p0().multiply(&HopfElement::p0());
        let d = p0sq.coproduct();
        let mut expected = TensorElement::zero();
        expected.add_scaled((Monomial::new(2, 0, 0), Monomial::UNIT), &LaurentScalar::one());
        expected.add_scaled(
            (Monomial::new(1, 0, 0), Monomial::new(1, 0, 0)),
            &LaurentScalar::from_int(2),
        );
        expected.add_scaled((Monomial::UNIT, Monomial::new(2, 0, 0)), &LaurentScalar::one());
        assert_eq!(d, expected);
    }

    #[test]
    fn counit_values() {
        assert!(HopfElement::p0().counit().is_zero());
        assert_eq!(HopfElement::e_pow(-3).counit(), LaurentScalar::one());
        // ε(2·1 + λP₀P₁) = 2
        let mut a = HopfElement::monomial(Monomial::UNIT, LaurentScalar::from_int(2));
        a.add_scaled_monomial(Monomial::new(1, 1, 0), &LaurentScalar::lambda_pow(1));
        assert_eq!(a.counit(), LaurentScalar::from_int(2));
    }

    #[test]
    fn antipode_values() {
        // S(P₁) = −E⁻¹P₁
        let s = HopfElement::p1().antipode();
        let expected =
            HopfElement::monomial(Monomial::new(0, 1, -1), LaurentScalar::from_int(-1));
        assert_eq!(s, expected);
        // S(1) = 1
        assert_eq!(HopfElement::one().antipode(), HopfElement::one());
        // S(P₀P₁E) = P₀P₁E⁻²
        let a = HopfElement::monomial(Monomial::new(1, 1, 1), LaurentScalar::one());
        let expected = HopfElement::monomial(Monomial::new(1, 1, -2), LaurentScalar::one());
        assert_eq!(a.antipode(), expected);
    }

    #[test]
    fn antipode_is_involutive() {
        let a = HopfElement::dirac_d0().multiply(&HopfElement::p1());
        assert_eq!(a.antipode().antipode(), a);
    }

    #[test]
    fn axioms_hold_on_generators() {
        for a in [
            HopfElement::one(),
            HopfElement::p0(),
            HopfElement::p1(),
            HopfElement::e_pow(2),
            HopfElement::dirac_d0(),
        ] {
            assert!(a.hopf_axioms_check(), "axioms failed for {}", a);
        }
    }

    #[test]
    fn antipode_law_two_term_example() {
        // m(S⊗id)Δ(P₁) = S(P₁)·1 + S(E)·P₁ = −E⁻¹P₁ + E⁻¹P₁ = 0 = ε(P₁)·1
        let d = HopfElement::p1().coproduct();
        let mut acc = HopfElement::zero();
        for ((l, r), c) in d.iter() {
            let sl = HopfElement::monomial(*l, c.clone()).antipode();
            acc = &acc + &sl.multiply(&HopfElement::monomial(*r, LaurentScalar::one()));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn display_factored_dirac() {
        assert_eq!(HopfElement::dirac_d0().to_string(), "(1/λ)(1 - E)");
        assert_eq!(HopfElement::p1().to_string(), "P1");
        let mixed = &HopfElement::one() + &HopfElement::monomial(Monomial::new(0, 0, 1), lam_inv());
        assert_eq!(mixed.to_string(), "1 + (1/λ) E");
    }
}
