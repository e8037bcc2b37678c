//! Small ready-made objects used by documentation, tests, and fixtures.

use crate::algebra::DendriformAlgebra;
use crate::matrix::Matrix;
use crate::scalar::Field;
use crate::tensor::Tensor3;

/// The 2-dimensional running example over any field:
/// e1 succ e2 = e2, e2 succ e1 = -e2, e1 prec e1 = e1, e2 prec e1 = e2.
pub fn two_dim(field: Field) -> DendriformAlgebra {
    let mut prec = Tensor3::cube(field, 2);
    prec.set(0, 0, 0, field.one());
    prec.set(1, 0, 1, field.one());
    let mut succ = Tensor3::cube(field, 2);
    succ.set(0, 1, 1, field.one());
    succ.set(1, 0, 1, field.from_i64(-1));
    DendriformAlgebra::new(field, 2, None, prec, succ).expect("well-formed by construction")
}

/// The running example with e2 prec e1 redirected to e1, which violates the
/// dendriform axioms; used to exercise failure reporting.
pub fn two_dim_broken(field: Field) -> DendriformAlgebra {
    let mut prec = Tensor3::cube(field, 2);
    prec.set(0, 0, 0, field.one());
    prec.set(1, 0, 0, field.one());
    let mut succ = Tensor3::cube(field, 2);
    succ.set(0, 1, 1, field.one());
    succ.set(1, 0, 1, field.from_i64(-1));
    DendriformAlgebra::new(field, 2, None, prec, succ).expect("well-formed by construction")
}

/// The two-tensor r = e2 tensor e1 over a 2-dimensional space, the running
/// companion of `two_dim`: it solves the D-equation and is factorizable.
pub fn two_dim_r(field: Field) -> Matrix {
    let mut r = Matrix::zero(field, 2, 2);
    r.set(1, 0, field.one());
    r
}
