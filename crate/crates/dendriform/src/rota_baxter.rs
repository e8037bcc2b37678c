//! (Relative) Rota-Baxter operators on dendriform algebras and the
//! quadratic structures built from them.
//!
//! The module covers four layers:
//!
//! - Rota-Baxter operators of weight lambda on dendriform and associative
//!   algebras, with the descendent products they induce;
//! - relative Rota-Baxter operators along an action of one dendriform
//!   algebra on another, including the weight-one operators carried by the
//!   two halves of a quasi-triangular two-tensor on the plus and minus
//!   products of the dual space;
//! - quadratic dendriform algebras, cyclic (Connes) cocycles on associative
//!   algebras, and the exact translation between the two;
//! - quadratic Rota-Baxter data: its two-way correspondence with
//!   factorizable two-tensors, Rota-Baxter representations with their
//!   semidirect products, and the form-induced isomorphism from the regular
//!   to the coregular representation.
//!
//! Conventions match the rest of the crate: operators act on coefficient
//! column vectors, adjoints are realized as transposes, and a bilinear form
//! omega is stored as the matrix W with W[i][j] = omega(e_i, e_j).

use crate::algebra::{
    check_associative, check_dendriform, AssociativeAlgebra, DendriformAlgebra, DendriformReport,
};
use crate::bialgebra::{check_lr_invariance, classify, RMatrixClass};
use crate::error::{Error, Result};
use crate::matrix::{basis_vector, pair, vec_add, vec_is_zero, vec_scale, vec_sub, Matrix};
use crate::rep::{
    check_action, check_dendriform_hom, require_dendriform, require_valid_rep, semidirect,
    DendriformAction, DendriformRep,
};
use crate::scalar::{Field, Scalar};
use crate::tensor::{i_matrix, minus_matrix, Tensor3};

/// A bilinear product evaluated on coefficient vectors.
type VecProduct<'a> = &'a dyn Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>;

/// A paired half-product evaluation: the arguments are (I xi, xi, I eta,
/// eta) and the result is the (succ, prec) pair of coefficient vectors.
type HalfProductPair<'a> =
    &'a dyn Fn(&[Scalar], &[Scalar], &[Scalar], &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>);

fn validate_operator(
    field: Field,
    dim: usize,
    p: &Matrix,
    weight: &Scalar,
    context: &'static str,
) -> Result<()> {
    if p.field() != field || weight.field() != field {
        return Err(Error::FieldMismatch { context });
    }
    if p.rows() != dim || p.cols() != dim {
        return Err(Error::DimensionMismatch {
            context,
            expected: dim,
            found: if p.rows() != dim { p.rows() } else { p.cols() },
        });
    }
    Ok(())
}

fn validate_form(field: Field, dim: usize, omega: &Matrix, context: &'static str) -> Result<()> {
    if omega.field() != field {
        return Err(Error::FieldMismatch { context });
    }
    if omega.rows() != dim || omega.cols() != dim {
        return Err(Error::DimensionMismatch {
            context,
            expected: dim,
            found: if omega.rows() != dim { omega.rows() } else { omega.cols() },
        });
    }
    Ok(())
}

/// omega(x, y) for a form stored as the matrix W with W[i][j] =
/// omega(e_i, e_j): the scalar x^T W y on coefficient vectors.
fn evaluate_form(omega: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    pair(x, &omega.apply(y))
}

/// P(x) op y + x op P(y) + lambda x op y, the argument fed to P on the
/// right-hand side of the weighted Rota-Baxter identity and also the
/// product of the descendent algebra.
fn weighted_sum(
    op: VecProduct<'_>,
    p: &Matrix,
    weight: &Scalar,
    x: &[Scalar],
    y: &[Scalar],
) -> Vec<Scalar> {
    let px = p.apply(x);
    let py = p.apply(y);
    vec_add(
        &vec_add(&op(&px, y), &op(x, &py)),
        &vec_scale(&op(x, y), weight),
    )
}

/// One failed instance of the weighted Rota-Baxter identity: the product it
/// fails for, the basis pair (x, y), and the defect
/// P(x) op P(y) - P(P(x) op y + x op P(y) + lambda x op y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBViolation {
    pub product: &'static str,
    pub pair: (usize, usize),
    pub defect: Vec<Scalar>,
}

/// Outcome of a Rota-Baxter check: every violated identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBReport {
    pub violations: Vec<RBViolation>,
}

impl RBReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn rb_report(
    field: Field,
    dim: usize,
    products: &[(&'static str, VecProduct<'_>)],
    p: &Matrix,
    weight: &Scalar,
) -> RBReport {
    let mut violations = Vec::new();
    for &(name, op) in products {
        for i in 0..dim {
            for j in 0..dim {
                let x = basis_vector(field, dim, i);
                let y = basis_vector(field, dim, j);
                let lhs = op(&p.apply(&x), &p.apply(&y));
                let rhs = p.apply(&weighted_sum(op, p, weight, &x, &y));
                let defect = vec_sub(&lhs, &rhs);
                if !vec_is_zero(&defect) {
                    violations.push(RBViolation { product: name, pair: (i, j), defect });
                }
            }
        }
    }
    RBReport { violations }
}

/// Checks the weighted Rota-Baxter identity
/// `P(x) op P(y) = P(P(x) op y + x op P(y) + lambda x op y)`
/// for both dendriform products on all basis pairs.
pub fn check_rb(algebra: &DendriformAlgebra, p: &Matrix, weight: &Scalar) -> Result<RBReport> {
    validate_operator(algebra.field(), algebra.dim(), p, weight, "check_rb")?;
    let prec = |x: &[Scalar], y: &[Scalar]| algebra.prec_vec(x, y);
    let succ = |x: &[Scalar], y: &[Scalar]| algebra.succ_vec(x, y);
    let products: [(&'static str, VecProduct<'_>); 2] = [("prec", &prec), ("succ", &succ)];
    Ok(rb_report(algebra.field(), algebra.dim(), &products, p, weight))
}

/// Checks the weighted Rota-Baxter identity for the single product of an
/// associative algebra on all basis pairs.
pub fn check_rb_associative(
    algebra: &AssociativeAlgebra,
    p: &Matrix,
    weight: &Scalar,
) -> Result<RBReport> {
    validate_operator(algebra.field(), algebra.dim(), p, weight, "check_rb_associative")?;
    let star = |x: &[Scalar], y: &[Scalar]| algebra.mult_vec(x, y);
    let products: [(&'static str, VecProduct<'_>); 1] = [("star", &star)];
    Ok(rb_report(algebra.field(), algebra.dim(), &products, p, weight))
}

/// A Rota-Baxter operator of weight lambda on a dendriform algebra,
/// validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBOperator {
    algebra: DendriformAlgebra,
    matrix: Matrix,
    weight: Scalar,
}

impl RBOperator {
    /// Wraps (A, P, lambda) after verifying the weighted identity for both
    /// products on all basis pairs.
    pub fn new(algebra: DendriformAlgebra, matrix: Matrix, weight: Scalar) -> Result<RBOperator> {
        if !check_rb(&algebra, &matrix, &weight)?.ok() {
            return Err(Error::NotRotaBaxter { context: "Rota-Baxter operator construction" });
        }
        Ok(RBOperator { algebra, matrix, weight })
    }

    pub fn algebra(&self) -> &DendriformAlgebra {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    /// The companion operator -lambda Id - P, itself Rota-Baxter of the
    /// same weight.
    pub fn tilde(&self) -> RBOperator {
        let id = Matrix::identity(self.algebra.field(), self.algebra.dim());
        let matrix = id.scale(&self.weight).add(&self.matrix).neg();
        RBOperator::new(self.algebra.clone(), matrix, self.weight.clone())
            .expect("the companion of a Rota-Baxter operator is Rota-Baxter")
    }
}

/// The descendent dendriform algebra of a Rota-Baxter operator: products
/// `x op_P y = P(x) op y + x op P(y) + lambda x op y` for both op. The
/// result satisfies the dendriform axioms and P is a homomorphism from it
/// back to the original algebra; both facts are verified before returning.
pub fn descendent(
    algebra: &DendriformAlgebra,
    p: &Matrix,
    weight: &Scalar,
) -> Result<DendriformAlgebra> {
    if !check_rb(algebra, p, weight)?.ok() {
        return Err(Error::NotRotaBaxter { context: "descendent" });
    }
    let n = algebra.dim();
    let field = algebra.field();
    let prec_op = |x: &[Scalar], y: &[Scalar]| algebra.prec_vec(x, y);
    let succ_op = |x: &[Scalar], y: &[Scalar]| algebra.succ_vec(x, y);
    let mut prec = Tensor3::cube(field, n);
    let mut succ = Tensor3::cube(field, n);
    for i in 0..n {
        for j in 0..n {
            let x = basis_vector(field, n, i);
            let y = basis_vector(field, n, j);
            let prec_vec = weighted_sum(&prec_op, p, weight, &x, &y);
            let succ_vec = weighted_sum(&succ_op, p, weight, &x, &y);
            for k in 0..n {
                prec.set(i, j, k, prec_vec[k].clone());
                succ.set(i, j, k, succ_vec[k].clone());
            }
        }
    }
    let result = DendriformAlgebra::new(field, n, Some(algebra.basis().to_vec()), prec, succ)?;
    assert!(
        check_dendriform(&result).ok(),
        "descendent products of a Rota-Baxter operator satisfy the dendriform axioms"
    );
    assert!(
        check_dendriform_hom(p, &result, algebra)?.ok(),
        "a Rota-Baxter operator is a homomorphism from its descendent algebra"
    );
    Ok(result)
}

/// Checks that T: B -> A is a relative Rota-Baxter operator of weight
/// lambda with respect to an action of A on B:
/// `T(u) succ T(v) = T(l_succ(Tu) v + r_succ(Tv) u + lambda u succ_B v)`
/// and the prec analogue, on all basis pairs of B.
pub fn check_relative_rb(
    t: &Matrix,
    algebra: &DendriformAlgebra,
    b: &DendriformAlgebra,
    action: &DendriformAction,
    weight: &Scalar,
) -> Result<bool> {
    if t.field() != algebra.field()
        || b.field() != algebra.field()
        || weight.field() != algebra.field()
    {
        return Err(Error::FieldMismatch { context: "check_relative_rb" });
    }
    if t.rows() != algebra.dim() || t.cols() != b.dim() {
        return Err(Error::DimensionMismatch {
            context: "relative operator shape",
            expected: algebra.dim(),
            found: if t.rows() != algebra.dim() { t.rows() } else { t.cols() },
        });
    }
    if action.target != *b {
        return Err(Error::InvalidRepresentation {
            context: "check_relative_rb: the action does not act on B",
        });
    }
    if !check_action(algebra, action)?.ok() {
        return Err(Error::InvalidRepresentation { context: "check_relative_rb" });
    }
    let m = b.dim();
    let field = b.field();
    for i in 0..m {
        for j in 0..m {
            let u = basis_vector(field, m, i);
            let v = basis_vector(field, m, j);
            let tu = t.apply(&u);
            let tv = t.apply(&v);
            let succ_arg = vec_add(
                &vec_add(
                    &action.rep.l_succ_of(&tu).apply(&v),
                    &action.rep.r_succ_of(&tv).apply(&u),
                ),
                &vec_scale(&b.succ_vec(&u, &v), weight),
            );
            if !vec_is_zero(&vec_sub(&algebra.succ_vec(&tu, &tv), &t.apply(&succ_arg))) {
                return Ok(false);
            }
            let prec_arg = vec_add(
                &vec_add(
                    &action.rep.l_prec_of(&tu).apply(&v),
                    &action.rep.r_prec_of(&tv).apply(&u),
                ),
                &vec_scale(&b.prec_vec(&u, &v), weight),
            );
            if !vec_is_zero(&vec_sub(&algebra.prec_vec(&tu, &tv), &t.apply(&prec_arg))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Shared scaffold for the plus and minus products on the dual space: both
/// need the skew part of r to be invariant and both are given by operator
/// adjoints applied through I, the skew part viewed as a map from the dual
/// space to the algebra.
fn skew_half_products(
    algebra: &DendriformAlgebra,
    r: &Matrix,
    context: &'static str,
    products: HalfProductPair<'_>,
) -> Result<DendriformAlgebra> {
    let n = algebra.dim();
    let field = algebra.field();
    if r.field() != field {
        return Err(Error::FieldMismatch { context });
    }
    if r.rows() != n || r.cols() != n {
        return Err(Error::DimensionMismatch {
            context,
            expected: n,
            found: if r.rows() != n { r.rows() } else { r.cols() },
        });
    }
    let t0 = r.sub(&r.transpose());
    if !check_lr_invariance(algebra, &t0)?.ok() {
        return Err(Error::SkewPartNotInvariant { context });
    }
    let i_map = i_matrix(r);
    let mut prec = Tensor3::cube(field, n);
    let mut succ = Tensor3::cube(field, n);
    for p in 0..n {
        for q in 0..n {
            let xi = basis_vector(field, n, p);
            let eta = basis_vector(field, n, q);
            let (succ_vec, prec_vec) = products(&i_map.apply(&xi), &xi, &i_map.apply(&eta), &eta);
            for k in 0..n {
                succ.set(p, q, k, succ_vec[k].clone());
                prec.set(p, q, k, prec_vec[k].clone());
            }
        }
    }
    let basis = algebra.basis().iter().map(|name| format!("{name}*")).collect();
    let result = DendriformAlgebra::new(field, n, Some(basis), prec, succ)?;
    assert!(
        check_dendriform(&result).ok(),
        "half products over an invariant skew part satisfy the dendriform axioms"
    );
    Ok(result)
}

/// The plus products on the dual space of an algebra with a two-tensor r
/// whose skew part is invariant:
/// `xi succ_+ eta = L_prec*(I eta) xi` and `xi prec_+ eta = R_succ*(I xi) eta`,
/// with I the skew part of r as a map from the dual space to the algebra.
/// The result always satisfies the dendriform axioms, which is asserted.
pub fn plus_products(algebra: &DendriformAlgebra, r: &Matrix) -> Result<DendriformAlgebra> {
    skew_half_products(algebra, r, "plus_products", &|i_xi, xi, i_eta, eta| {
        (
            algebra.l_prec(i_eta).transpose().apply(xi),
            algebra.r_succ(i_xi).transpose().apply(eta),
        )
    })
}

/// The minus products on the dual space, the companions of
/// [`plus_products`]: `xi succ_- eta = cal_R*(I xi) eta` and
/// `xi prec_- eta = cal_L*(I eta) xi`. Same precondition and the same
/// asserted dendriform conclusion.
pub fn minus_products(algebra: &DendriformAlgebra, r: &Matrix) -> Result<DendriformAlgebra> {
    skew_half_products(algebra, r, "minus_products", &|i_xi, xi, i_eta, eta| {
        (
            algebra.cal_r(i_xi).transpose().apply(eta),
            algebra.cal_l(i_eta).transpose().apply(xi),
        )
    })
}

/// One failed instance of the invariance identity of a quadratic form: the
/// basis triple (x, y, z) and which of the two equalities broke.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticViolation {
    pub triple: (usize, usize, usize),
    pub equality: &'static str,
}

/// Outcome of a quadratic-form check: antisymmetry, the rank of the form,
/// and every violated invariance instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticReport {
    pub antisymmetric: bool,
    pub rank: usize,
    pub dim: usize,
    pub violations: Vec<QuadraticViolation>,
}

impl QuadraticReport {
    pub fn nondegenerate(&self) -> bool {
        self.rank == self.dim
    }

    pub fn ok(&self) -> bool {
        self.antisymmetric && self.nondegenerate() && self.violations.is_empty()
    }
}

/// Checks that omega is a quadratic form for the algebra: antisymmetric,
/// nondegenerate, and invariant in the sense
/// `omega(x succ y, z) = -omega(x, y prec z) = omega(y, z star x)`
/// on all basis triples.
pub fn check_quadratic(algebra: &DendriformAlgebra, omega: &Matrix) -> Result<QuadraticReport> {
    validate_form(algebra.field(), algebra.dim(), omega, "check_quadratic")?;
    let n = algebra.dim();
    let field = algebra.field();
    let antisymmetric = omega.add(&omega.transpose()).is_zero();
    let rank = omega.rank();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let x = basis_vector(field, n, i);
                let y = basis_vector(field, n, j);
                let z = basis_vector(field, n, k);
                let reference = evaluate_form(omega, &y, &algebra.star_vec(&z, &x));
                let succ_leg = evaluate_form(omega, &algebra.succ_vec(&x, &y), &z);
                if succ_leg != reference {
                    violations.push(QuadraticViolation {
                        triple: (i, j, k),
                        equality: "omega(x succ y, z) = omega(y, z star x)",
                    });
                }
                let prec_leg = evaluate_form(omega, &x, &algebra.prec_vec(&y, &z)).neg();
                if prec_leg != reference {
                    violations.push(QuadraticViolation {
                        triple: (i, j, k),
                        equality: "-omega(x, y prec z) = omega(y, z star x)",
                    });
                }
            }
        }
    }
    Ok(QuadraticReport { antisymmetric, rank, dim: n, violations })
}

/// Outcome of a cyclic cocycle check: antisymmetry, every violated cyclic
/// identity instance, and (reported separately, not part of ok) whether the
/// form is nondegenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnesReport {
    pub antisymmetric: bool,
    pub nondegenerate: bool,
    pub violations: Vec<(usize, usize, usize)>,
}

impl ConnesReport {
    pub fn ok(&self) -> bool {
        self.antisymmetric && self.violations.is_empty()
    }
}

/// Checks the cyclic cocycle identity
/// `omega(x star y, z) + omega(y star z, x) + omega(z star x, y) = 0`
/// together with antisymmetry on an associative algebra. Nondegeneracy is
/// reported but not required for ok.
pub fn check_connes(algebra: &AssociativeAlgebra, omega: &Matrix) -> Result<ConnesReport> {
    validate_form(algebra.field(), algebra.dim(), omega, "check_connes")?;
    let n = algebra.dim();
    let field = algebra.field();
    let antisymmetric = omega.add(&omega.transpose()).is_zero();
    let nondegenerate = omega.rank() == n;
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let x = basis_vector(field, n, i);
                let y = basis_vector(field, n, j);
                let z = basis_vector(field, n, k);
                let total = evaluate_form(omega, &algebra.mult_vec(&x, &y), &z)
                    .add(&evaluate_form(omega, &algebra.mult_vec(&y, &z), &x))
                    .add(&evaluate_form(omega, &algebra.mult_vec(&z, &x), &y));
                if !total.is_zero() {
                    violations.push((i, j, k));
                }
            }
        }
    }
    Ok(ConnesReport { antisymmetric, nondegenerate, violations })
}

/// Splits an associative product into dendriform halves using a
/// nondegenerate cyclic cocycle: the unique products with
/// `omega(x succ y, z) = omega(y, z star x)` and
/// `omega(x prec y, z) = omega(x, y star z)`, solved exactly through the
/// inverse of the form. The sub-adjacent product of the result is the
/// input product and the result is quadratic for omega; both facts are
/// asserted.
pub fn dendriform_from_connes(
    algebra: &AssociativeAlgebra,
    omega: &Matrix,
) -> Result<DendriformAlgebra> {
    if !check_associative(algebra).ok() {
        return Err(Error::NotAssociative { context: "dendriform_from_connes" });
    }
    let report = check_connes(algebra, omega)?;
    if !report.ok() {
        return Err(Error::NotConnesCocycle { context: "dendriform_from_connes" });
    }
    if !report.nondegenerate {
        return Err(Error::DegenerateForm { context: "dendriform_from_connes" });
    }
    let n = algebra.dim();
    let field = algebra.field();
    let sharp = omega.transpose();
    let sharp_inv = sharp.inverse().expect("a full-rank form is invertible");
    let mut prec = Tensor3::cube(field, n);
    let mut succ = Tensor3::cube(field, n);
    for i in 0..n {
        for j in 0..n {
            let x = basis_vector(field, n, i);
            let y = basis_vector(field, n, j);
            // omega(x succ y, z) = omega(y, z star x) for all z reads
            // W^T (x succ y) = R_star(x)^T W^T y on coefficient vectors.
            let succ_vec =
                sharp_inv.apply(&algebra.right_mult(&x).transpose().apply(&sharp.apply(&y)));
            // omega(x prec y, z) = omega(x, y star z) similarly gives
            // W^T (x prec y) = L_star(y)^T W^T x.
            let prec_vec =
                sharp_inv.apply(&algebra.left_mult(&y).transpose().apply(&sharp.apply(&x)));
            for k in 0..n {
                succ.set(i, j, k, succ_vec[k].clone());
                prec.set(i, j, k, prec_vec[k].clone());
            }
        }
    }
    let result =
        DendriformAlgebra::new(field, n, Some(algebra.basis().to_vec()), prec, succ)?;
    assert_eq!(
        result.star_constants(),
        *algebra.constants(),
        "the halves recovered from a cyclic cocycle sum to the original product"
    );
    assert!(
        check_quadratic(&result, omega)?.ok(),
        "the recovered dendriform algebra is quadratic for the cocycle"
    );
    Ok(result)
}

/// A dendriform algebra with a validated quadratic form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticDendriform {
    algebra: DendriformAlgebra,
    omega: Matrix,
}

impl QuadraticDendriform {
    /// Wraps (A, omega) after verifying antisymmetry, nondegeneracy, and
    /// the invariance identity.
    pub fn new(algebra: DendriformAlgebra, omega: Matrix) -> Result<QuadraticDendriform> {
        let report = check_quadratic(&algebra, &omega)?;
        if !report.nondegenerate() {
            return Err(Error::DegenerateForm { context: "quadratic dendriform construction" });
        }
        if !report.ok() {
            return Err(Error::NotQuadraticRotaBaxter {
                context: "quadratic dendriform construction",
            });
        }
        Ok(QuadraticDendriform { algebra, omega })
    }

    pub fn algebra(&self) -> &DendriformAlgebra {
        &self.algebra
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    /// The musical map from the algebra to its dual sending x to
    /// omega(x, .): the matrix W^T on coefficient vectors.
    pub fn sharp(&self) -> Matrix {
        self.omega.transpose()
    }

    /// The inverse musical map from the dual space back to the algebra.
    pub fn sharp_inverse(&self) -> Matrix {
        self.sharp().inverse().expect("a nondegenerate form is invertible")
    }
}

/// Joint report for a quadratic Rota-Baxter bundle: the dendriform axioms,
/// the weighted Rota-Baxter identity, the quadratic form conditions, and
/// the weight compatibility
/// `omega(Px, y) + omega(x, Py) + lambda omega(x, y) = 0`
/// (as matrices, P^T W + W P + lambda W = 0), whose failing entries are
/// listed as basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRBReport {
    pub dendriform: DendriformReport,
    pub rota_baxter: RBReport,
    pub quadratic: QuadraticReport,
    pub compatibility: Vec<(usize, usize)>,
}

impl QuadraticRBReport {
    pub fn ok(&self) -> bool {
        self.dendriform.ok()
            && self.rota_baxter.ok()
            && self.quadratic.ok()
            && self.compatibility.is_empty()
    }
}

/// Checks the full quadratic Rota-Baxter bundle (A, P, omega, lambda):
/// dendriform axioms, Rota-Baxter identity, quadratic form conditions, and
/// the weight compatibility between P and omega.
pub fn check_quadratic_rb(
    algebra: &DendriformAlgebra,
    p: &Matrix,
    omega: &Matrix,
    weight: &Scalar,
) -> Result<QuadraticRBReport> {
    validate_operator(algebra.field(), algebra.dim(), p, weight, "check_quadratic_rb")?;
    validate_form(algebra.field(), algebra.dim(), omega, "check_quadratic_rb")?;
    let dendriform = check_dendriform(algebra);
    let rota_baxter = check_rb(algebra, p, weight)?;
    let quadratic = check_quadratic(algebra, omega)?;
    let defect = p
        .transpose()
        .mat_mul(omega)
        .add(&omega.mat_mul(p))
        .add(&omega.scale(weight));
    let mut compatibility = Vec::new();
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            if !defect.at(i, j).is_zero() {
                compatibility.push((i, j));
            }
        }
    }
    Ok(QuadraticRBReport { dendriform, rota_baxter, quadratic, compatibility })
}

/// A quadratic dendriform algebra and a Rota-Baxter operator on the same
/// algebra, compatible with the form through the weight identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRBData {
    pub quadratic: QuadraticDendriform,
    pub operator: RBOperator,
}

impl QuadraticRBData {
    /// Pairs the two structures after verifying they share the algebra and
    /// satisfy the weight compatibility.
    pub fn new(quadratic: QuadraticDendriform, operator: RBOperator) -> Result<QuadraticRBData> {
        if quadratic.algebra() != operator.algebra() {
            return Err(Error::NotQuadraticRotaBaxter {
                context: "quadratic data and operator live on different algebras",
            });
        }
        let report = check_quadratic_rb(
            quadratic.algebra(),
            operator.matrix(),
            quadratic.omega(),
            operator.weight(),
        )?;
        if !report.ok() {
            return Err(Error::NotQuadraticRotaBaxter {
                context: "quadratic Rota-Baxter construction",
            });
        }
        Ok(QuadraticRBData { quadratic, operator })
    }
}

/// Builds the quadratic Rota-Baxter data of a factorizable two-tensor:
/// with I the (invertible) skew part as a map from the dual space to the
/// algebra, `P = lambda r_minus I^{-1}` and `omega(x, y) = <I^{-1} x, y>`.
/// Returns the matrices (P, W); the bundle is asserted to pass the full
/// quadratic Rota-Baxter check for the given weight.
pub fn factorizable_to_qrb(
    algebra: &DendriformAlgebra,
    r: &Matrix,
    weight: &Scalar,
) -> Result<(Matrix, Matrix)> {
    if weight.field() != algebra.field() {
        return Err(Error::FieldMismatch { context: "factorizable_to_qrb" });
    }
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let classification = classify(algebra, r)?;
    if classification.class != RMatrixClass::Factorizable {
        return Err(Error::NotFactorizable {
            reason: if classification.skew_rank < algebra.dim() {
                "the skew part of r is degenerate"
            } else {
                "r is not quasi-triangular"
            },
        });
    }
    let i_inv = i_matrix(r).inverse().expect("a full-rank skew part is invertible");
    let p = minus_matrix(r).mat_mul(&i_inv).scale(weight);
    let omega = i_inv.transpose();
    assert!(
        check_quadratic_rb(algebra, &p, &omega, weight)?.ok(),
        "a factorizable two-tensor induces a quadratic Rota-Baxter bundle"
    );
    Ok((p, omega))
}

/// Rebuilds the factorizable two-tensor of a quadratic Rota-Baxter bundle:
/// with J the inverse musical map of omega (the matrix (W^T)^{-1}), the
/// half `r_plus = (1/lambda)(P + lambda Id) J` determines r. The result is
/// asserted to classify as factorizable with skew part exactly J, which
/// makes this construction and [`factorizable_to_qrb`] mutually inverse.
pub fn qrb_to_factorizable(
    algebra: &DendriformAlgebra,
    p: &Matrix,
    omega: &Matrix,
    weight: &Scalar,
) -> Result<Matrix> {
    if weight.field() != algebra.field() {
        return Err(Error::FieldMismatch { context: "qrb_to_factorizable" });
    }
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let report = check_quadratic_rb(algebra, p, omega, weight)?;
    if !report.ok() {
        return Err(Error::NotQuadraticRotaBaxter { context: "qrb_to_factorizable" });
    }
    let field = algebra.field();
    let j = omega.transpose().inverse().expect("a nondegenerate form is invertible");
    let id = Matrix::identity(field, algebra.dim());
    let weight_inv = weight.inv().expect("the weight is nonzero");
    let r_plus = p.add(&id.scale(weight)).mat_mul(&j).scale(&weight_inv);
    let r = r_plus.transpose();
    let classification = classify(algebra, &r)?;
    assert_eq!(
        classification.class,
        RMatrixClass::Factorizable,
        "a quadratic Rota-Baxter bundle rebuilds to a factorizable two-tensor"
    );
    assert_eq!(
        i_matrix(&r),
        j,
        "the skew part of the rebuilt two-tensor is the inverse musical map"
    );
    Ok(r)
}

/// Which component the semidirect Rota-Baxter operator rescales by
/// -lambda: the base algebra inside the sum or the dual part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemidirectProjection {
    Base,
    Dual,
}

/// The associative algebra on A + A* coupling the sub-adjacent product with
/// the coregular action,
/// `(x + xi)(y + eta) = x star y + R_prec*(x) eta + L_succ*(y) xi`,
/// together with the canonical pairing form
/// `omega(x + xi, y + eta) = <xi, y> - <eta, x>` and the Rota-Baxter
/// operator scaling the chosen component by -lambda. Returns the algebra
/// and the matrices (P, W); the bundle is asserted to be associative with
/// a nondegenerate cyclic cocycle, Rota-Baxter of the given weight, and
/// weight compatible.
pub fn semidirect_connes(
    algebra: &DendriformAlgebra,
    weight: &Scalar,
    projection: SemidirectProjection,
) -> Result<(AssociativeAlgebra, Matrix, Matrix)> {
    require_dendriform(algebra, "semidirect_connes")?;
    if weight.field() != algebra.field() {
        return Err(Error::FieldMismatch { context: "semidirect_connes" });
    }
    let n = algebra.dim();
    let d = 2 * n;
    let field = algebra.field();
    let mut mult = Tensor3::cube(field, d);
    for i in 0..n {
        for j in 0..n {
            let x = basis_vector(field, n, i);
            let y = basis_vector(field, n, j);
            let star = algebra.star_vec(&x, &y);
            let base_dual = algebra.r_prec(&x).transpose().apply(&y);
            let dual_base = algebra.l_succ(&y).transpose().apply(&x);
            for k in 0..n {
                mult.set(i, j, k, star[k].clone());
                mult.set(i, n + j, n + k, base_dual[k].clone());
                mult.set(n + i, j, n + k, dual_base[k].clone());
            }
        }
    }
    let mut basis = algebra.basis().to_vec();
    basis.extend(algebra.basis().iter().map(|name| format!("{name}*")));
    let result = AssociativeAlgebra::new(field, d, Some(basis), mult)?;
    assert!(
        check_associative(&result).ok(),
        "the coupled product on the sum with the dual space is associative"
    );
    let mut omega = Matrix::zero(field, d, d);
    for k in 0..n {
        omega.set(k, n + k, field.from_i64(-1));
        omega.set(n + k, k, field.one());
    }
    let mut p = Matrix::zero(field, d, d);
    let scale = weight.neg();
    let offset = match projection {
        SemidirectProjection::Base => 0,
        SemidirectProjection::Dual => n,
    };
    for k in 0..n {
        p.set(offset + k, offset + k, scale.clone());
    }
    let connes = check_connes(&result, &omega)?;
    assert!(
        connes.ok() && connes.nondegenerate,
        "the pairing form is a nondegenerate cyclic cocycle on the coupled product"
    );
    assert!(
        check_rb_associative(&result, &p, weight)?.ok(),
        "rescaling one component by minus the weight is Rota-Baxter on the coupled product"
    );
    let compat = p
        .transpose()
        .mat_mul(&omega)
        .add(&omega.mat_mul(&p))
        .add(&omega.scale(weight));
    assert!(
        compat.is_zero(),
        "the component rescaling is weight compatible with the pairing form"
    );
    Ok((result, p, omega))
}

/// Checks the four weighted intertwining identities tying an operator T on
/// the carrier of a representation to a Rota-Baxter operator on the base:
/// `m(Px) T = T (m(Px) + m(x) T + lambda m(x))` for m ranging over the four
/// representation families, at every basis element x.
pub fn check_rb_representation(
    algebra: &DendriformAlgebra,
    p: &Matrix,
    weight: &Scalar,
    rep: &DendriformRep,
    t: &Matrix,
) -> Result<bool> {
    validate_operator(algebra.field(), algebra.dim(), p, weight, "check_rb_representation")?;
    require_valid_rep(algebra, rep, "check_rb_representation")?;
    if !check_rb(algebra, p, weight)?.ok() {
        return Err(Error::NotRotaBaxter { context: "check_rb_representation" });
    }
    if t.field() != algebra.field() {
        return Err(Error::FieldMismatch { context: "check_rb_representation" });
    }
    if t.rows() != rep.carrier() || t.cols() != rep.carrier() {
        return Err(Error::DimensionMismatch {
            context: "carrier operator shape",
            expected: rep.carrier(),
            found: if t.rows() != rep.carrier() { t.rows() } else { t.cols() },
        });
    }
    let n = algebra.dim();
    let field = algebra.field();
    for i in 0..n {
        let x = basis_vector(field, n, i);
        let px = p.apply(&x);
        let families = [
            (rep.l_succ_of(&px), rep.l_succ_of(&x)),
            (rep.r_succ_of(&px), rep.r_succ_of(&x)),
            (rep.l_prec_of(&px), rep.l_prec_of(&x)),
            (rep.r_prec_of(&px), rep.r_prec_of(&x)),
        ];
        for (m_px, m_x) in families {
            let lhs = m_px.mat_mul(t);
            let rhs = t.mat_mul(&m_px.add(&m_x.mat_mul(t)).add(&m_x.scale(weight)));
            if !lhs.sub(&rhs).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A representation of a Rota-Baxter dendriform algebra: a dendriform
/// representation together with an operator on the carrier satisfying the
/// four weighted intertwining identities. Validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBRepresentation {
    rep: DendriformRep,
    t: Matrix,
}

impl RBRepresentation {
    pub fn new(operator: &RBOperator, rep: DendriformRep, t: Matrix) -> Result<RBRepresentation> {
        if !check_rb_representation(
            operator.algebra(),
            operator.matrix(),
            operator.weight(),
            &rep,
            &t,
        )? {
            return Err(Error::InvalidRepresentation {
                context: "Rota-Baxter representation construction",
            });
        }
        Ok(RBRepresentation { rep, t })
    }

    pub fn rep(&self) -> &DendriformRep {
        &self.rep
    }

    pub fn carrier_operator(&self) -> &Matrix {
        &self.t
    }
}

/// The semidirect product of a Rota-Baxter dendriform algebra with a
/// Rota-Baxter representation: the dendriform semidirect sum carrying the
/// block-diagonal operator P + T, returned as a validated operator of the
/// same weight.
pub fn rb_semidirect(
    algebra: &DendriformAlgebra,
    p: &Matrix,
    weight: &Scalar,
    rep: &DendriformRep,
    t: &Matrix,
) -> Result<(DendriformAlgebra, RBOperator)> {
    if !check_rb_representation(algebra, p, weight, rep, t)? {
        return Err(Error::InvalidRepresentation { context: "rb_semidirect" });
    }
    let sum = semidirect(algebra, rep)?;
    let n = algebra.dim();
    let carrier = rep.carrier();
    let field = algebra.field();
    let mut block = Matrix::zero(field, n + carrier, n + carrier);
    for i in 0..n {
        for j in 0..n {
            block.set(i, j, p.at(i, j).clone());
        }
    }
    for i in 0..carrier {
        for j in 0..carrier {
            block.set(n + i, n + j, t.at(i, j).clone());
        }
    }
    let operator = RBOperator::new(sum.clone(), block, weight.clone())
        .expect("the block operator on a Rota-Baxter semidirect product is Rota-Baxter");
    Ok((sum, operator))
}

/// One failed intertwining family of the musical map: which of the five
/// (numbered as in [`omega_sharp_family_formula`]) and the basis witness x.
/// Family 5 constrains the operator rather than a basis element and
/// reports witness 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSharpViolation {
    pub family: u8,
    pub witness: usize,
}

/// Outcome of the musical intertwining check: every violated family
/// instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSharpReport {
    pub violations: Vec<OmegaSharpViolation>,
}

impl OmegaSharpReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Human-readable statement of one of the five intertwining families of
/// the musical map, numbered 1 through 5.
pub fn omega_sharp_family_formula(family: u8) -> &'static str {
    match family {
        1 => "sharp L_succ(x) = cal_R*(x) sharp",
        2 => "sharp R_succ(x) = -L_prec*(x) sharp",
        3 => "sharp R_prec(x) = cal_L*(x) sharp",
        4 => "sharp L_prec(x) = -R_succ*(x) sharp",
        5 => "sharp P = (-lambda Id - P*) sharp",
        _ => "unknown family",
    }
}

/// Verifies the five intertwining families of the musical map W^T for an
/// arbitrary (A, P, omega, lambda), with no precondition: families 1-4 lift
/// the invariance identity to operator form and family 5 lifts the weight
/// compatibility.
pub fn check_omega_sharp_families(
    algebra: &DendriformAlgebra,
    p: &Matrix,
    omega: &Matrix,
    weight: &Scalar,
) -> Result<OmegaSharpReport> {
    validate_operator(algebra.field(), algebra.dim(), p, weight, "check_omega_sharp_families")?;
    validate_form(algebra.field(), algebra.dim(), omega, "check_omega_sharp_families")?;
    let n = algebra.dim();
    let field = algebra.field();
    let sharp = omega.transpose();
    let mut violations = Vec::new();
    for i in 0..n {
        let x = basis_vector(field, n, i);
        let families = [
            (1u8, sharp.mat_mul(&algebra.l_succ(&x)), algebra.cal_r(&x).transpose().mat_mul(&sharp)),
            (2, sharp.mat_mul(&algebra.r_succ(&x)), algebra.l_prec(&x).transpose().neg().mat_mul(&sharp)),
            (3, sharp.mat_mul(&algebra.r_prec(&x)), algebra.cal_l(&x).transpose().mat_mul(&sharp)),
            (4, sharp.mat_mul(&algebra.l_prec(&x)), algebra.r_succ(&x).transpose().neg().mat_mul(&sharp)),
        ];
        for (family, lhs, rhs) in families {
            if !lhs.sub(&rhs).is_zero() {
                violations.push(OmegaSharpViolation { family, witness: i });
            }
        }
    }
    let id = Matrix::identity(field, n);
    let coregular_t = id.scale(weight).add(&p.transpose()).neg();
    if !sharp.mat_mul(p).sub(&coregular_t.mat_mul(&sharp)).is_zero() {
        violations.push(OmegaSharpViolation { family: 5, witness: 0 });
    }
    Ok(OmegaSharpReport { violations })
}

/// The musical isomorphism from the regular to the coregular Rota-Baxter
/// representation: the matrix W^T of x -> omega(x, .), verified to satisfy
/// all five intertwining families. Requires the full quadratic Rota-Baxter
/// bundle to hold; the verification report is returned as evidence.
pub fn omega_sharp_iso(
    algebra: &DendriformAlgebra,
    p: &Matrix,
    omega: &Matrix,
    weight: &Scalar,
) -> Result<(Matrix, OmegaSharpReport)> {
    if !check_quadratic_rb(algebra, p, omega, weight)?.ok() {
        return Err(Error::NotQuadraticRotaBaxter { context: "omega_sharp_iso" });
    }
    let report = check_omega_sharp_families(algebra, p, omega, weight)?;
    assert!(
        report.ok(),
        "a quadratic Rota-Baxter bundle satisfies all five intertwining families"
    );
    Ok((omega.transpose(), report))
}
