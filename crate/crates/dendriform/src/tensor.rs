//! Two-tensors, three-tensors, and the exchange map.
//!
//! An element r of A tensor A is stored as its coefficient matrix R with
//! R[i][j] = coefficient of e_i tensor e_j. Under the dual-basis pairing this
//! fixes the two induced maps A* -> A:
//!
//! - r_plus, defined by <r_plus(xi), eta> = r(xi, eta), has matrix R^T;
//! - r_minus, defined by <xi, r_minus(eta)> = r(xi, eta), has matrix R.
//!
//! A three-tensor is stored densely as data[p][q][s] = coefficient of
//! e_p tensor e_q tensor e_s.

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// The exchange map sigma(u tensor v) = v tensor u on coefficient matrices.
pub fn exchange_sigma(r: &Matrix) -> Matrix {
    r.transpose()
}

/// Matrix of the map r_plus : A* -> A induced by the two-tensor r.
pub fn plus_matrix(r: &Matrix) -> Matrix {
    r.transpose()
}

/// Matrix of the map r_minus : A* -> A induced by the two-tensor r.
pub fn minus_matrix(r: &Matrix) -> Matrix {
    r.clone()
}

/// Matrix of i = r_plus - r_minus, the skew defect of the two-tensor.
pub fn i_matrix(r: &Matrix) -> Matrix {
    plus_matrix(r).sub(&minus_matrix(r))
}

/// Applies the operator m tensor n to a two-tensor: coefficient matrix
/// m * t * n^T.
pub fn push_two_tensor(t: &Matrix, m: &Matrix, n: &Matrix) -> Matrix {
    m.mat_mul(t).mat_mul(&n.transpose())
}

/// A dense element of a triple tensor product, or a cube of structure
/// constants c[i][j][k] (e_i op e_j = sum_k c[i][j][k] e_k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: Field,
    dims: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(field: Field, d0: usize, d1: usize, d2: usize) -> Tensor3 {
        Tensor3 {
            field,
            dims: (d0, d1, d2),
            data: vec![field.zero(); d0 * d1 * d2],
        }
    }

    pub fn cube(field: Field, n: usize) -> Tensor3 {
        Tensor3::zero(field, n, n, n)
    }

    pub fn from_fn(
        field: Field,
        d0: usize,
        d1: usize,
        d2: usize,
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Tensor3 {
        let mut t = Tensor3::zero(field, d0, d1, d2);
        for i in 0..d0 {
            for j in 0..d1 {
                for k in 0..d2 {
                    t.set(i, j, k, f(i, j, k));
                }
            }
        }
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims.1 + j) * self.dims.2 + k
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        assert!(
            value.field() == self.field,
            "tensor entry from a different field"
        );
        let idx = self.index(i, j, k);
        self.data[idx] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, value: &Scalar) {
        let idx = self.index(i, j, k);
        self.data[idx] = self.data[idx].add(value);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert!(
            self.field == other.field && self.dims == other.dims,
            "tensor addition with incompatible shapes"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        assert!(
            self.field == other.field && self.dims == other.dims,
            "tensor subtraction with incompatible shapes"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.sub(b);
        }
        out
    }

    pub fn neg(&self) -> Tensor3 {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.neg();
        }
        out
    }

    /// Cyclic slot permutation sending u tensor v tensor w to
    /// w tensor u tensor v; in coordinates out[p][q][s] = in[q][s][p].
    pub fn cycle_to_front(&self) -> Tensor3 {
        let (d0, d1, d2) = self.dims;
        Tensor3::from_fn(self.field, d2, d0, d1, |p, q, s| self.at(q, s, p).clone())
    }

    /// Cyclic slot permutation sending u tensor v tensor w to
    /// v tensor w tensor u; in coordinates out[p][q][s] = in[s][p][q].
    pub fn cycle_to_back(&self) -> Tensor3 {
        let (d0, d1, d2) = self.dims;
        Tensor3::from_fn(self.field, d1, d2, d0, |p, q, s| self.at(s, p, q).clone())
    }

    /// Applies an operator to the first slot: (m tensor id tensor id).
    pub fn apply_slot0(&self, m: &Matrix) -> Tensor3 {
        let (d0, d1, d2) = self.dims;
        assert!(m.cols() == d0, "slot-0 operator with wrong input dimension");
        Tensor3::from_fn(self.field, m.rows(), d1, d2, |p, q, s| {
            let mut acc = self.field.zero();
            for a in 0..d0 {
                let t = self.at(a, q, s);
                if t.is_zero() {
                    continue;
                }
                acc = acc.add(&m.at(p, a).mul(t));
            }
            acc
        })
    }

    /// Applies an operator to the second slot: (id tensor m tensor id).
    pub fn apply_slot1(&self, m: &Matrix) -> Tensor3 {
        let (d0, d1, d2) = self.dims;
        assert!(m.cols() == d1, "slot-1 operator with wrong input dimension");
        Tensor3::from_fn(self.field, d0, m.rows(), d2, |p, q, s| {
            let mut acc = self.field.zero();
            for a in 0..d1 {
                let t = self.at(p, a, s);
                if t.is_zero() {
                    continue;
                }
                acc = acc.add(&m.at(q, a).mul(t));
            }
            acc
        })
    }

    /// Applies an operator to the third slot: (id tensor id tensor m).
    pub fn apply_slot2(&self, m: &Matrix) -> Tensor3 {
        let (d0, d1, d2) = self.dims;
        assert!(m.cols() == d2, "slot-2 operator with wrong input dimension");
        Tensor3::from_fn(self.field, d0, d1, m.rows(), |p, q, s| {
            let mut acc = self.field.zero();
            for a in 0..d2 {
                let t = self.at(p, q, a);
                if t.is_zero() {
                    continue;
                }
                acc = acc.add(&m.at(s, a).mul(t));
            }
            acc
        })
    }

    /// Nonzero entries as (i, j, k, value), in lexicographic index order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dims.0 {
            for j in 0..self.dims.1 {
                for k in 0..self.dims.2 {
                    let v = self.at(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// The three-tensor u tensor m with the vector in the first slot:
/// out[p][q][s] = u[p] * m[q][s].
pub fn vector_tensor_matrix(u: &[Scalar], m: &Matrix) -> Tensor3 {
    let field = m.field();
    Tensor3::from_fn(field, u.len(), m.rows(), m.cols(), |p, q, s| {
        u[p].mul(m.at(q, s))
    })
}

/// The three-tensor m tensor u with the vector in the third slot:
/// out[p][q][s] = m[p][q] * u[s].
pub fn matrix_tensor_vector(m: &Matrix, u: &[Scalar]) -> Tensor3 {
    let field = m.field();
    Tensor3::from_fn(field, m.rows(), m.cols(), u.len(), |p, q, s| {
        m.at(p, q).mul(&u[s])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::basis_vector;

    const Q: Field = Field::Rational;

    fn e2_tensor_e1() -> Matrix {
        // r = e2 tensor e1 on a 2-dimensional space.
        Matrix::from_i64_rows(Q, &[&[0, 0], &[1, 0]])
    }

    #[test]
    fn sigma_swaps_the_factors() {
        let r = e2_tensor_e1();
        let expected = Matrix::from_i64_rows(Q, &[&[0, 1], &[0, 0]]); // e1 tensor e2
        assert_eq!(exchange_sigma(&r), expected);
        assert_eq!(exchange_sigma(&exchange_sigma(&r)), r, "sigma is an involution");
    }

    #[test]
    fn plus_and_minus_maps_of_the_fixture() {
        let r = e2_tensor_e1();
        // r_plus(e2*) = e1, r_plus(e1*) = 0.
        let plus = plus_matrix(&r);
        assert_eq!(plus.apply(&basis_vector(Q, 2, 1)), basis_vector(Q, 2, 0));
        assert!(crate::matrix::vec_is_zero(&plus.apply(&basis_vector(Q, 2, 0))));
        // r_minus(e1*) = e2, r_minus(e2*) = 0.
        let minus = minus_matrix(&r);
        assert_eq!(minus.apply(&basis_vector(Q, 2, 0)), basis_vector(Q, 2, 1));
        assert!(crate::matrix::vec_is_zero(&minus.apply(&basis_vector(Q, 2, 1))));
        // i = r_plus - r_minus sends e1* to -e2 and e2* to e1.
        let i = i_matrix(&r);
        assert_eq!(i, Matrix::from_i64_rows(Q, &[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn push_two_tensor_acts_on_both_slots() {
        // (m tensor n)(e1 tensor e1) with m(e1) = e2, n(e1) = 3 e1.
        let t = Matrix::from_i64_rows(Q, &[&[1, 0], &[0, 0]]);
        let m = Matrix::from_i64_rows(Q, &[&[0, 0], &[1, 0]]);
        let n = Matrix::from_i64_rows(Q, &[&[3, 0], &[0, 0]]);
        let out = push_two_tensor(&t, &m, &n);
        assert_eq!(out, Matrix::from_i64_rows(Q, &[&[0, 0], &[3, 0]]));
    }

    #[test]
    fn slot_permutations() {
        let mut t = Tensor3::cube(Q, 2);
        t.set(0, 1, 1, Q.from_i64(5)); // 5 e1 tensor e2 tensor e2
        let front = t.cycle_to_front(); // becomes 5 e2 tensor e1 tensor e2
        assert_eq!(front.at(1, 0, 1), &Q.from_i64(5));
        assert_eq!(front.nonzero_entries().len(), 1);
        let back = t.cycle_to_back(); // becomes 5 e2 tensor e2 tensor e1
        assert_eq!(back.at(1, 1, 0), &Q.from_i64(5));
        // The two permutations are mutually inverse.
        assert_eq!(t.cycle_to_front().cycle_to_back(), t);
    }

    #[test]
    fn slot_application() {
        let mut t = Tensor3::cube(Q, 2);
        t.set(0, 0, 1, Q.from_i64(1)); // e1 tensor e1 tensor e2
        let m = Matrix::from_i64_rows(Q, &[&[0, 0], &[1, 0]]); // e1 -> e2
        assert_eq!(t.apply_slot0(&m).at(1, 0, 1), &Q.from_i64(1));
        assert_eq!(t.apply_slot1(&m).at(0, 1, 1), &Q.from_i64(1));
        assert!(t.apply_slot2(&m).is_zero(), "m kills e2 so slot 2 dies");
    }

    #[test]
    fn vector_matrix_tensors() {
        let u = basis_vector(Q, 2, 1);
        let m = Matrix::from_i64_rows(Q, &[&[0, 2], &[0, 0]]);
        let t = vector_tensor_matrix(&u, &m);
        assert_eq!(t.at(1, 0, 1), &Q.from_i64(2));
        let t2 = matrix_tensor_vector(&m, &u);
        assert_eq!(t2.at(0, 1, 1), &Q.from_i64(2));
    }
}
