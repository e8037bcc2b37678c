//! Finite-dimensional dendriform algebras given by structure constants.
//!
//! A dendriform algebra splits one multiplication into a left part `prec`
//! (written x < y below) and a right part `succ` (x > y) subject to three
//! axioms; the sum x * y = x < y + x > y is then associative (the
//! sub-adjacent product). Structure constants follow the global convention
//! c[i][j][k]: e_i op e_j = sum_k c[i][j][k] e_k.

use crate::error::{Error, Result};
use crate::matrix::{format_vector, vec_is_zero, vec_sub, Matrix};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;

/// Bilinear extension of a structure-constant cube to coordinate vectors.
pub fn product_vec(constants: &Tensor3, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let (d0, d1, d2) = constants.dims();
    assert!(x.len() == d0 && y.len() == d1, "product of wrong-length vectors");
    let field = constants.field();
    let mut out = vec![field.zero(); d2];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let xy = xi.mul(yj);
            for (k, slot) in out.iter_mut().enumerate() {
                let c = constants.at(i, j, k);
                if !c.is_zero() {
                    *slot = slot.add(&xy.mul(c));
                }
            }
        }
    }
    out
}

/// Left multiplication operator of a cube: column j is x op e_j.
pub fn left_operator(constants: &Tensor3, x: &[Scalar]) -> Matrix {
    let (d0, d1, d2) = constants.dims();
    assert!(x.len() == d0, "operator argument of wrong length");
    Matrix::from_fn(constants.field(), d2, d1, |k, j| {
        let mut acc = constants.field().zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            acc = acc.add(&xi.mul(constants.at(i, j, k)));
        }
        acc
    })
}

/// Right multiplication operator of a cube: column j is e_j op x.
pub fn right_operator(constants: &Tensor3, x: &[Scalar]) -> Matrix {
    let (d0, d1, d2) = constants.dims();
    assert!(x.len() == d1, "operator argument of wrong length");
    Matrix::from_fn(constants.field(), d2, d0, |k, j| {
        let mut acc = constants.field().zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            acc = acc.add(&xi.mul(constants.at(j, i, k)));
        }
        acc
    })
}

fn default_basis(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}

/// A dendriform algebra: two structure-constant cubes over a common field.
/// The constructor validates shapes only; `check_dendriform` tests the
/// axioms, because several operations intentionally build candidate product
/// tables that may fail them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendriformAlgebra {
    field: Field,
    dim: usize,
    basis: Vec<String>,
    prec: Tensor3,
    succ: Tensor3,
}

impl DendriformAlgebra {
    pub fn new(
        field: Field,
        dim: usize,
        basis: Option<Vec<String>>,
        prec: Tensor3,
        succ: Tensor3,
    ) -> Result<DendriformAlgebra> {
        field.validate()?;
        for (name, t) in [("prec", &prec), ("succ", &succ)] {
            if t.field() != field {
                return Err(Error::FieldMismatch { context: "algebra constants" });
            }
            if t.dims() != (dim, dim, dim) {
                return Err(Error::DimensionMismatch {
                    context: match name {
                        "prec" => "prec structure constants",
                        _ => "succ structure constants",
                    },
                    expected: dim,
                    found: t.dims().0,
                });
            }
        }
        let basis = basis.unwrap_or_else(|| default_basis("e", dim));
        if basis.len() != dim {
            return Err(Error::DimensionMismatch {
                context: "basis name list",
                expected: dim,
                found: basis.len(),
            });
        }
        Ok(DendriformAlgebra { field, dim, basis, prec, succ })
    }

    /// The algebra with all products zero.
    pub fn zero(field: Field, dim: usize) -> DendriformAlgebra {
        DendriformAlgebra::new(
            field,
            dim,
            None,
            Tensor3::cube(field, dim),
            Tensor3::cube(field, dim),
        )
        .expect("zero algebra is always well-formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<DendriformAlgebra> {
        if basis.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "basis name list",
                expected: self.dim,
                found: basis.len(),
            });
        }
        self.basis = basis;
        Ok(self)
    }

    pub fn prec_constants(&self) -> &Tensor3 {
        &self.prec
    }

    pub fn succ_constants(&self) -> &Tensor3 {
        &self.succ
    }

    /// Structure constants of the sub-adjacent product star = prec + succ.
    pub fn star_constants(&self) -> Tensor3 {
        self.prec.add(&self.succ)
    }

    pub fn prec_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        product_vec(&self.prec, x, y)
    }

    pub fn succ_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        product_vec(&self.succ, x, y)
    }

    pub fn star_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.prec_vec(x, y);
        let s = self.succ_vec(x, y);
        for (a, b) in out.iter_mut().zip(&s) {
            *a = a.add(b);
        }
        out
    }

    pub fn l_prec(&self, x: &[Scalar]) -> Matrix {
        left_operator(&self.prec, x)
    }

    pub fn r_prec(&self, x: &[Scalar]) -> Matrix {
        right_operator(&self.prec, x)
    }

    pub fn l_succ(&self, x: &[Scalar]) -> Matrix {
        left_operator(&self.succ, x)
    }

    pub fn r_succ(&self, x: &[Scalar]) -> Matrix {
        right_operator(&self.succ, x)
    }

    /// Total left multiplication by x for the sub-adjacent product.
    pub fn cal_l(&self, x: &[Scalar]) -> Matrix {
        self.l_prec(x).add(&self.l_succ(x))
    }

    /// Total right multiplication by x for the sub-adjacent product.
    pub fn cal_r(&self, x: &[Scalar]) -> Matrix {
        self.r_prec(x).add(&self.r_succ(x))
    }
}

/// The six multiplication operators of a fixed element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultOperators {
    pub l_prec: Matrix,
    pub r_prec: Matrix,
    pub l_succ: Matrix,
    pub r_succ: Matrix,
    pub cal_l: Matrix,
    pub cal_r: Matrix,
}

/// All multiplication operators of x at once.
pub fn mult_operators(algebra: &DendriformAlgebra, x: &[Scalar]) -> MultOperators {
    MultOperators {
        l_prec: algebra.l_prec(x),
        r_prec: algebra.r_prec(x),
        l_succ: algebra.l_succ(x),
        r_succ: algebra.r_succ(x),
        cal_l: algebra.cal_l(x),
        cal_r: algebra.cal_r(x),
    }
}

/// The three dendriform axioms, named by the shape of their left-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DendriformAxiom {
    /// (x < y) < z = x < (y * z)
    PrecPrec,
    /// (x > y) < z = x > (y < z)
    SuccPrec,
    /// x > (y > z) = (x * y) > z
    SuccSucc,
}

impl DendriformAxiom {
    pub fn formula(self) -> &'static str {
        match self {
            DendriformAxiom::PrecPrec => "(x prec y) prec z = x prec (y star z)",
            DendriformAxiom::SuccPrec => "(x succ y) prec z = x succ (y prec z)",
            DendriformAxiom::SuccSucc => "x succ (y succ z) = (x star y) succ z",
        }
    }
}

/// One axiom failure: the basis triple (0-indexed) and LHS - RHS.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: DendriformAxiom,
    pub triple: (usize, usize, usize),
    pub defect: Vec<Scalar>,
}

/// Outcome of the dendriform axiom check; empty violations means valid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendriformReport {
    pub violations: Vec<AxiomViolation>,
}

impl DendriformReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for DendriformReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok() {
            return write!(f, "dendriform axioms hold");
        }
        writeln!(f, "dendriform axioms fail at {} basis triples:", self.violations.len())?;
        for v in &self.violations {
            writeln!(
                f,
                "  {} violated at ({}, {}, {}): defect {}",
                v.axiom.formula(),
                v.triple.0 + 1,
                v.triple.1 + 1,
                v.triple.2 + 1,
                format_vector(&v.defect)
            )?;
        }
        Ok(())
    }
}

/// Checks the three dendriform axioms on every basis triple, reporting all
/// violations in lexicographic (axiom, i, j, k) order.
pub fn check_dendriform(algebra: &DendriformAlgebra) -> DendriformReport {
    let n = algebra.dim;
    let field = algebra.field;
    let mut violations = Vec::new();
    let basis: Vec<Vec<Scalar>> =
        (0..n).map(|i| crate::matrix::basis_vector(field, n, i)).collect();
    for axiom in [
        DendriformAxiom::PrecPrec,
        DendriformAxiom::SuccPrec,
        DendriformAxiom::SuccSucc,
    ] {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (&basis[i], &basis[j], &basis[k]);
                    let (lhs, rhs) = match axiom {
                        DendriformAxiom::PrecPrec => (
                            algebra.prec_vec(&algebra.prec_vec(x, y), z),
                            algebra.prec_vec(x, &algebra.star_vec(y, z)),
                        ),
                        DendriformAxiom::SuccPrec => (
                            algebra.prec_vec(&algebra.succ_vec(x, y), z),
                            algebra.succ_vec(x, &algebra.prec_vec(y, z)),
                        ),
                        DendriformAxiom::SuccSucc => (
                            algebra.succ_vec(x, &algebra.succ_vec(y, z)),
                            algebra.succ_vec(&algebra.star_vec(x, y), z),
                        ),
                    };
                    let defect = vec_sub(&lhs, &rhs);
                    if !vec_is_zero(&defect) {
                        violations.push(AxiomViolation { axiom, triple: (i, j, k), defect });
                    }
                }
            }
        }
    }
    DendriformReport { violations }
}

/// An associative algebra given by one structure-constant cube.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativeAlgebra {
    field: Field,
    dim: usize,
    basis: Vec<String>,
    mult: Tensor3,
}

impl AssociativeAlgebra {
    pub fn new(
        field: Field,
        dim: usize,
        basis: Option<Vec<String>>,
        mult: Tensor3,
    ) -> Result<AssociativeAlgebra> {
        field.validate()?;
        if mult.field() != field {
            return Err(Error::FieldMismatch { context: "associative constants" });
        }
        if mult.dims() != (dim, dim, dim) {
            return Err(Error::DimensionMismatch {
                context: "associative structure constants",
                expected: dim,
                found: mult.dims().0,
            });
        }
        let basis = basis.unwrap_or_else(|| default_basis("e", dim));
        if basis.len() != dim {
            return Err(Error::DimensionMismatch {
                context: "basis name list",
                expected: dim,
                found: basis.len(),
            });
        }
        Ok(AssociativeAlgebra { field, dim, basis, mult })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn constants(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn mult_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        product_vec(&self.mult, x, y)
    }

    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        left_operator(&self.mult, x)
    }

    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        right_operator(&self.mult, x)
    }
}

/// Associativity failures: basis triples with (xy)z - x(yz) != 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityReport {
    pub violations: Vec<((usize, usize, usize), Vec<Scalar>)>,
}

impl AssociativityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_associative(algebra: &AssociativeAlgebra) -> AssociativityReport {
    let n = algebra.dim;
    let field = algebra.field;
    let basis: Vec<Vec<Scalar>> =
        (0..n).map(|i| crate::matrix::basis_vector(field, n, i)).collect();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = algebra.mult_vec(&algebra.mult_vec(&basis[i], &basis[j]), &basis[k]);
                let rhs = algebra.mult_vec(&basis[i], &algebra.mult_vec(&basis[j], &basis[k]));
                let defect = vec_sub(&lhs, &rhs);
                if !vec_is_zero(&defect) {
                    violations.push(((i, j, k), defect));
                }
            }
        }
    }
    AssociativityReport { violations }
}

/// The sub-adjacent associative algebra (A, star). Requires the dendriform
/// axioms, which guarantee associativity of the sum product.
pub fn sub_adjacent(algebra: &DendriformAlgebra) -> Result<AssociativeAlgebra> {
    if !check_dendriform(algebra).ok() {
        return Err(Error::NotDendriform { context: "sub_adjacent" });
    }
    let assoc = AssociativeAlgebra::new(
        algebra.field,
        algebra.dim,
        Some(algebra.basis.clone()),
        algebra.star_constants(),
    )?;
    if !check_associative(&assoc).ok() {
        return Err(Error::NotAssociative { context: "sub_adjacent" });
    }
    Ok(assoc)
}

/// Pre-Lie identity failures of a candidate cube:
/// (x . y) . z - x . (y . z) must be symmetric in x and y.
pub fn check_pre_lie(constants: &Tensor3) -> Vec<(usize, usize, usize)> {
    let (n, _, _) = constants.dims();
    let field = constants.field();
    let basis: Vec<Vec<Scalar>> =
        (0..n).map(|i| crate::matrix::basis_vector(field, n, i)).collect();
    let associator = |i: usize, j: usize, k: usize| {
        let lhs = product_vec(
            constants,
            &product_vec(constants, &basis[i], &basis[j]),
            &basis[k],
        );
        let rhs = product_vec(
            constants,
            &basis[i],
            &product_vec(constants, &basis[j], &basis[k]),
        );
        vec_sub(&lhs, &rhs)
    };
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !vec_is_zero(&vec_sub(&associator(i, j, k), &associator(j, i, k))) {
                    violations.push((i, j, k));
                }
            }
        }
    }
    violations
}

/// The associated pre-Lie product x . y = x succ y - y prec x, verified to
/// satisfy the pre-Lie identity on all basis triples.
pub fn to_pre_lie(algebra: &DendriformAlgebra) -> Result<Tensor3> {
    if !check_dendriform(algebra).ok() {
        return Err(Error::NotDendriform { context: "to_pre_lie" });
    }
    let n = algebra.dim;
    let constants = Tensor3::from_fn(algebra.field, n, n, n, |i, j, k| {
        algebra.succ.at(i, j, k).sub(algebra.prec.at(j, i, k))
    });
    assert!(
        check_pre_lie(&constants).is_empty(),
        "pre-Lie identity must follow from the dendriform axioms"
    );
    Ok(constants)
}

/// Jacobi/antisymmetry failures of a candidate bracket cube.
pub fn check_lie(bracket: &Tensor3) -> Vec<(usize, usize, usize)> {
    let (n, _, _) = bracket.dims();
    let field = bracket.field();
    let basis: Vec<Vec<Scalar>> =
        (0..n).map(|i| crate::matrix::basis_vector(field, n, i)).collect();
    let br = |x: &[Scalar], y: &[Scalar]| product_vec(bracket, x, y);
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // Antisymmetry recorded at k = j.
            let anti = crate::matrix::vec_add(&br(&basis[i], &basis[j]), &br(&basis[j], &basis[i]));
            if !vec_is_zero(&anti) {
                violations.push((i, j, j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let jac = crate::matrix::vec_add(
                    &br(&br(&basis[i], &basis[j]), &basis[k]),
                    &crate::matrix::vec_add(
                        &br(&br(&basis[j], &basis[k]), &basis[i]),
                        &br(&br(&basis[k], &basis[i]), &basis[j]),
                    ),
                );
                if !vec_is_zero(&jac) {
                    violations.push((i, j, k));
                }
            }
        }
    }
    violations
}

/// The commutator bracket of an associative algebra, verified antisymmetric
/// and Jacobi on all triples.
pub fn to_lie(algebra: &AssociativeAlgebra) -> Result<Tensor3> {
    if !check_associative(algebra).ok() {
        return Err(Error::NotAssociative { context: "to_lie" });
    }
    let n = algebra.dim;
    let bracket = Tensor3::from_fn(algebra.field, n, n, n, |i, j, k| {
        algebra.mult.at(i, j, k).sub(algebra.mult.at(j, i, k))
    });
    assert!(
        check_lie(&bracket).is_empty(),
        "commutator bracket of an associative product must be Lie"
    );
    Ok(bracket)
}
