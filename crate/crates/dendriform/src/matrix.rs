//! Dense matrices over an exact field.
//!
//! Convention: `entry(row, col)` is the coefficient of output basis vector
//! `row` in the image of input basis vector `col`, so columns are images and
//! composition of operators is matrix multiplication in the usual order.
//! Linear functionals pair with vectors through the dual basis, which makes
//! the adjoint of an operator literally the transpose of its matrix.
//!
//! Elimination is deterministic: pivots are chosen as the first row with a
//! nonzero entry, scanning columns left to right. Rank uses fraction-free
//! Bareiss elimination; inverses use Gauss-Jordan with exact division.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A dense rows x cols matrix over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds a matrix from rows of integer literals; test and fixture helper.
    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> &Scalar {
        &self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        assert!(
            value.field() == self.field,
            "matrix entry from a different field"
        );
        self.data[row * self.cols + col] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn same_shape(&self, other: &Matrix, op: &str) {
        assert!(
            self.field == other.field && self.rows == other.rows && self.cols == other.cols,
            "matrix {op} with incompatible shapes or fields"
        );
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.same_shape(other, "addition");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.same_shape(other, "subtraction");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.sub(b);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.neg();
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        assert!(s.field() == self.field, "scaling by a foreign scalar");
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(s);
        }
        out
    }

    /// Matrix product self * other.
    pub fn mat_mul(&self, other: &Matrix) -> Matrix {
        assert!(
            self.field == other.field && self.cols == other.rows,
            "matrix product with incompatible shapes or fields"
        );
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Applies the matrix to a coordinate vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert!(v.len() == self.cols, "matrix applied to a vector of wrong length");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, entry) in out.iter_mut().enumerate() {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                *entry = entry.add(&a.mul(x));
            }
        }
        out
    }

    /// Rank by fraction-free Bareiss elimination with first-nonzero pivoting.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut prev = self.field.one();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if found != pivot_row {
                m.swap_rows(found, pivot_row);
            }
            let pivot = m.at(pivot_row, col).clone();
            for r in pivot_row + 1..m.rows {
                for c in 0..m.cols {
                    if c == col {
                        continue;
                    }
                    // Bareiss update: (pivot * m[r][c] - m[r][col] * m[p][c]) / prev.
                    let num = pivot
                        .mul(m.at(r, c))
                        .sub(&m.at(r, col).mul(m.at(pivot_row, c)));
                    m.set(r, c, num.div(&prev));
                }
                m.set(r, col, self.field.zero());
            }
            prev = pivot;
            pivot_row += 1;
        }
        pivot_row
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(self.field, n);
        for col in 0..n {
            let found = (col..n).find(|&r| !m.at(r, col).is_zero())?;
            if found != col {
                m.swap_rows(found, col);
                inv.swap_rows(found, col);
            }
            let pivot = m.at(col, col).clone();
            for c in 0..n {
                m.set(col, c, m.at(col, c).div(&pivot));
                inv.set(col, c, inv.at(col, c).div(&pivot));
            }
            for r in 0..n {
                if r == col || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in 0..n {
                    let mv = m.at(r, c).sub(&factor.mul(m.at(col, c)));
                    m.set(r, c, mv);
                    let iv = inv.at(r, c).sub(&factor.mul(inv.at(col, c)));
                    inv.set(r, c, iv);
                }
            }
        }
        Some(inv)
    }

    /// Rank together with the inverse when the matrix is square and regular.
    /// The two eliminations are independent code paths; full rank on a square
    /// matrix guarantees the inverse exists.
    pub fn rank_and_inverse(&self) -> (usize, Option<Matrix>) {
        let rank = self.rank();
        let inverse = if self.is_square() && rank == self.rows {
            let inv = self
                .inverse()
                .expect("full-rank square matrix must be invertible");
            Some(inv)
        } else {
            None
        };
        (rank, inverse)
    }

    /// Requires an inverse, reporting a degenerate-form error otherwise.
    pub fn require_inverse(&self, context: &'static str) -> Result<Matrix> {
        self.inverse().ok_or(Error::DegenerateForm { context })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Formats a coordinate vector for reports.
pub fn format_vector(v: &[Scalar]) -> String {
    let entries: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", entries.join(", "))
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert!(a.len() == b.len(), "vector addition with mismatched lengths");
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert!(a.len() == b.len(), "vector subtraction with mismatched lengths");
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(Scalar::neg).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x.mul(s)).collect()
}

/// Standard basis vector e_i (0-indexed) of the given dimension.
pub fn basis_vector(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

/// Dual-basis pairing of a functional and a vector: sum of xi_i v_i.
pub fn pair(xi: &[Scalar], v: &[Scalar]) -> Scalar {
    assert!(xi.len() == v.len(), "pairing with mismatched lengths");
    let field = if xi.is_empty() {
        Field::Rational
    } else {
        xi[0].field()
    };
    xi.iter()
        .zip(v)
        .fold(field.zero(), |acc, (a, b)| acc.add(&a.mul(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_i64_rows(Q, &[&[1, 2], &[3, 4]]);
        let id = Matrix::identity(Q, 2);
        assert_eq!(id.mat_mul(&m), m);
        assert_eq!(m.mat_mul(&id), m);
    }

    #[test]
    fn rotation_squares_to_minus_identity() {
        let r = Matrix::from_i64_rows(Q, &[&[0, -1], &[1, 0]]);
        let minus_id = Matrix::identity(Q, 2).neg();
        assert_eq!(r.mat_mul(&r), minus_id);
    }

    #[test]
    fn gf3_product_wraps() {
        let f = Field::Gf(3);
        let m = Matrix::from_i64_rows(f, &[&[2]]);
        assert_eq!(m.mat_mul(&m), Matrix::from_i64_rows(f, &[&[1]]), "2*2 = 1 in GF(3)");
    }

    #[test]
    fn transpose_basics() {
        let m = Matrix::from_i64_rows(Q, &[&[1, 2, 3], &[4, 5, 6]]);
        let t = m.transpose();
        assert_eq!(t.rows(), 3);
        assert_eq!(t.cols(), 2);
        assert_eq!(t.at(2, 1), &Q.from_i64(6));
        assert_eq!(t.transpose(), m, "transpose is an involution");
    }

    #[test]
    fn rank_detects_dependent_rows() {
        let m = Matrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.inverse(), None);
        let (rank, inv) = m.rank_and_inverse();
        assert_eq!((rank, inv), (1, None));
    }

    #[test]
    fn inverse_of_symplectic_block() {
        let m = Matrix::from_i64_rows(Q, &[&[0, 1], &[-1, 0]]);
        let expected = Matrix::from_i64_rows(Q, &[&[0, -1], &[1, 0]]);
        assert_eq!(m.inverse().unwrap(), expected);
        let (rank, inv) = m.rank_and_inverse();
        assert_eq!(rank, 2);
        assert_eq!(inv.unwrap().mat_mul(&m), Matrix::identity(Q, 2));
    }

    #[test]
    fn rank_over_gf3() {
        // [[1,2],[2,4]] over GF(3) is [[1,2],[2,1]]: determinant 1-4 = -3 = 0,
        // so the rank drops there as well.
        let f = Field::Gf(3);
        let m = Matrix::from_i64_rows(f, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        // A shifted matrix is regular.
        let m2 = Matrix::from_i64_rows(f, &[&[1, 2], &[2, 2]]);
        assert_eq!(m2.rank(), 2);
        assert_eq!(m2.inverse().unwrap().mat_mul(&m2), Matrix::identity(f, 2));
    }

    #[test]
    fn rank_of_rectangular() {
        let m = Matrix::from_i64_rows(Q, &[&[0, 0, 1], &[0, 0, 2]]);
        assert_eq!(m.rank(), 1);
        let z = Matrix::zero(Q, 3, 2);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn apply_uses_columns_as_images() {
        // Column j is the image of basis vector j.
        let m = Matrix::from_i64_rows(Q, &[&[0, 5], &[1, 0]]);
        let e0 = basis_vector(Q, 2, 0);
        assert_eq!(m.apply(&e0), vec![Q.from_i64(0), Q.from_i64(1)]);
        let e1 = basis_vector(Q, 2, 1);
        assert_eq!(m.apply(&e1), vec![Q.from_i64(5), Q.from_i64(0)]);
    }

    #[test]
    fn pairing_is_dual_basis_evaluation() {
        let xi = vec![Q.from_i64(2), Q.from_i64(-1)];
        let v = vec![Q.from_i64(3), Q.from_i64(4)];
        assert_eq!(pair(&xi, &v), Q.from_i64(2));
    }
}
