//! Smith normal form over the integers with unimodular transforms.
//!
//! Pivoting takes the nonzero entry of least absolute value in the active
//! submatrix, clears its row and column by Euclidean reduction, and restarts
//! whenever a remainder survives. Once the pivot row and column are clear,
//! any entry not divisible by the pivot is folded into the pivot row so the
//! divisibility chain comes out directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `d_1 | d_2 | ...`, nonnegative, trailing zeros allowed. Length is
    /// `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    /// Unimodular, `rows x rows`.
    pub left_transform: IntegerMatrix,
    /// Unimodular, `cols x cols`.
    pub right_transform: IntegerMatrix,
}

impl SmithForm {
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntegerMatrix {
        IntegerMatrix::diagonal(rows, cols, &self.diagonal)
    }

    /// Checks every invariant against `input` by exact re-multiplication.
    pub fn verify(&self, input: &IntegerMatrix) -> Result<(), SmithError> {
        let (r, c) = (input.rows(), input.cols());
        if self.diagonal.len() != r.min(c)
            || self.left_transform.rows() != r
            || !self.left_transform.is_square()
            || self.right_transform.rows() != c
            || !self.right_transform.is_square()
        {
            return Err(SmithError::Shape);
        }
        if self.diagonal.iter().any(|d| d.is_negative()) {
            return Err(SmithError::NegativeFactor);
        }
        for w in self.diagonal.windows(2) {
            let divides = if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            };
            if !divides {
                return Err(SmithError::DivisibilityChain(w[0].clone(), w[1].clone()));
            }
        }
        for (name, t) in [
            ("left", &self.left_transform),
            ("right", &self.right_transform),
        ] {
            if t.determinant().abs() != BigInt::one() {
                return Err(SmithError::NotUnimodular(name));
            }
        }
        let product = self.left_transform.mul(input).mul(&self.right_transform);
        if product != self.diagonal_matrix(r, c) {
            return Err(SmithError::Reconstruction);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SmithError {
    #[error("transform or diagonal has the wrong shape")]
    Shape,
    #[error("negative invariant factor")]
    NegativeFactor,
    #[error("invariant factor {0} does not divide {1}")]
    DivisibilityChain(BigInt, BigInt),
    #[error("{0} transform is not unimodular")]
    NotUnimodular(&'static str),
    #[error("left * input * right differs from the diagonal form")]
    Reconstruction,
}

struct SmithCalc {
    a: IntegerMatrix,
    left: IntegerMatrix,
    right: IntegerMatrix,
}

impl SmithCalc {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.left.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.right.swap_cols(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        self.a.add_row_multiple(dst, src, factor);
        self.left.add_row_multiple(dst, src, factor);
    }

    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        self.a.add_col_multiple(dst, src, factor);
        self.right.add_col_multiple(dst, src, factor);
    }

    fn smallest_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Reduces row and column `t` against the pivot; true if both cleared.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = &self.a[(i, t)] / &self.a[(t, t)];
            self.add_row(i, t, &-q);
            clean &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = &self.a[(t, j)] / &self.a[(t, t)];
            self.add_col(j, t, &-q);
            clean &= self.a[(t, j)].is_zero();
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let pivot = &self.a[(t, t)];
        (t + 1..self.a.rows())
            .find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(pivot)))
    }

    fn run(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            loop {
                let Some((i, j)) = self.smallest_in(t) else {
                    return;
                };
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                if !self.clear_cross(t) {
                    continue;
                }
                match self.non_divisible_row(t) {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.a.negate_row(t);
                self.left.negate_row(t);
            }
        }
    }
}

/// Computes `left * m * right = diag(d_1, d_2, ...)`.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut calc = SmithCalc {
        a: m.clone(),
        left: IntegerMatrix::identity(m.rows()),
        right: IntegerMatrix::identity(m.cols()),
    };
    calc.run();
    let diagonal = (0..m.rows().min(m.cols()))
        .map(|i| calc.a[(i, i)].clone())
        .collect();
    SmithForm {
        diagonal,
        left_transform: calc.left,
        right_transform: calc.right,
    }
}
