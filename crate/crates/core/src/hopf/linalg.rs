//! Dense exact linear algebra over ℚ.
//!
//! Small systems only: the classification windows produce matrices with at
//! most a few hundred rows, so plain Gauss-Jordan over `BigRational` with
//! partial "pivot on first nonzero" is entirely adequate and keeps every
//! result exact.

use super::Rat;
use num_traits::Zero;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Exactly one solution.
    Unique(Vec<Rat>),
    /// No solution (inconsistent system).
    Inconsistent,
    /// Solution set of the given positive dimension.
    Underdetermined(usize),
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduces to reduced row echelon form in place; returns the pivot
    /// column of each pivot row, in row order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = {
                let piv = self.at(row, col).clone();
                Rat::new(piv.denom().clone(), piv.numer().clone())
            };
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = self.at(r, c) - &factor * self.at(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of the null space {x : Ax = 0}, one vector per free column.
    ///
    /// In the RREF construction each basis vector has a 1 in its free column
    /// and zeros in the other free columns, so a coordinate-aligned kernel
    /// comes out as plain unit vectors.
    pub fn null_space(mut self) -> Vec<Vec<Rat>> {
        let pivots = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::new(1.into(), 1.into());
            for (r, &pc) in pivots.iter().enumerate() {
                vec[pc] = -self.at(r, free).clone();
            }
            basis.push(vec);
        }
        basis
    }

    /// Solves `self · x = rhs` exactly, classifying the solution set.
    pub fn solve(mut self, rhs: &[Rat]) -> SolveOutcome {
        assert_eq!(rhs.len(), self.rows);
        let cols = self.cols;
        let mut aug = RatMatrix::zeros(self.rows, cols + 1);
        for r in 0..self.rows {
            for c in 0..cols {
                aug.set(r, c, std::mem::replace(&mut self.data[r * cols + c], Rat::zero()));
            }
            aug.set(r, cols, rhs[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&cols) {
            return SolveOutcome::Inconsistent;
        }
        let free = cols - pivots.len();
        if free > 0 {
            return SolveOutcome::Underdetermined(free);
        }
        let mut x = vec![Rat::zero(); cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, cols).clone();
        }
        SolveOutcome::Unique(x)
    }
}
