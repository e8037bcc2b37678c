//! Dendriform D-bialgebras: cobrackets and their cocycle conditions,
//! coboundary structures induced by a 2-tensor r, the D-equation,
//! (L_succ, R_prec)-invariance, classification of r-matrices, factorization,
//! and the dendriform double.
//!
//! Conventions: a 2-tensor r = sum R[i][j] e_i (x) e_j is stored by its
//! coefficient matrix R. The induced maps r_plus, r_minus: A* -> A have
//! matrices transpose(R) and R, and I = r_plus - r_minus. An operator pair
//! acts on a 2-tensor by (M (x) N) t = M T transpose(N) on coefficient
//! matrices.

use crate::algebra::{check_dendriform, DendriformAlgebra, DendriformReport};
use crate::error::{Error, Result};
use crate::matrix::{basis_vector, vec_is_zero, vec_neg, vec_sub, Matrix};
use crate::rep::{check_dendriform_hom, HomReport};
use crate::scalar::{Field, Scalar};
use crate::tensor::{exchange_sigma, i_matrix, minus_matrix, plus_matrix, push_two_tensor, Tensor3};

/// A pair of linear maps A -> A (x) A, stored as one coefficient matrix per
/// basis element: `prec[i]` is the image of e_i under the prec component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    field: Field,
    dim: usize,
    prec: Vec<Matrix>,
    succ: Vec<Matrix>,
}

impl Cobracket {
    pub fn new(field: Field, dim: usize, prec: Vec<Matrix>, succ: Vec<Matrix>) -> Result<Cobracket> {
        field.validate()?;
        for family in [&prec, &succ] {
            if family.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "cobracket component count",
                    expected: dim,
                    found: family.len(),
                });
            }
            for m in family {
                if m.field() != field {
                    return Err(Error::FieldMismatch { context: "cobracket matrices" });
                }
                if m.rows() != dim || m.cols() != dim {
                    return Err(Error::DimensionMismatch {
                        context: "cobracket matrix shape",
                        expected: dim,
                        found: m.rows(),
                    });
                }
            }
        }
        Ok(Cobracket { field, dim, prec, succ })
    }

    pub fn zero(field: Field, dim: usize) -> Cobracket {
        let family = vec![Matrix::zero(field, dim, dim); dim];
        Cobracket::new(field, dim, family.clone(), family).expect("zero cobracket is well-formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prec_component(&self, i: usize) -> &Matrix {
        &self.prec[i]
    }

    pub fn succ_component(&self, i: usize) -> &Matrix {
        &self.succ[i]
    }

    fn combine(family: &[Matrix], x: &[Scalar], field: Field, dim: usize) -> Matrix {
        assert!(x.len() == family.len(), "cobracket argument of wrong length");
        let mut out = Matrix::zero(field, dim, dim);
        for (xi, m) in x.iter().zip(family) {
            if !xi.is_zero() {
                out = out.add(&m.scale(xi));
            }
        }
        out
    }

    /// Image of an arbitrary vector under the prec component.
    pub fn prec_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.prec, x, self.field, self.dim)
    }

    /// Image of an arbitrary vector under the succ component.
    pub fn succ_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.succ, x, self.field, self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.prec.iter().all(Matrix::is_zero) && self.succ.iter().all(Matrix::is_zero)
    }
}

/// The cobracket on A whose components are adjoint to the products of the
/// given algebra on the dual space: component[i][p][q] is the structure
/// constant dual.prod[p][q][i].
pub fn adjoint_cobracket(dual: &DendriformAlgebra) -> Cobracket {
    let n = dual.dim();
    let field = dual.field();
    let component = |t: &Tensor3| -> Vec<Matrix> {
        (0..n)
            .map(|i| Matrix::from_fn(field, n, n, |p, q| t.at(p, q, i).clone()))
            .collect()
    };
    Cobracket::new(field, n, component(dual.prec_constants()), component(dual.succ_constants()))
        .expect("adjoint cobracket shapes are consistent")
}

/// The coboundary cobracket induced by a 2-tensor r: with Q-style operator
/// pairs acting on coefficient matrices,
///   succ component of x: (Id (x) cal_L(x) - R_prec(x) (x) Id) applied to r,
///   prec component of x: (Id (x) L_succ(x) - cal_R(x) (x) Id) applied to -sigma(r).
///
/// The tensor assignment (r to the succ component, -sigma(r) to the prec
/// component) is forced by requiring the adjoints of this cobracket to equal
/// the dual products `dual_products` computes; see that function's
/// consistency assertion.
pub fn cobracket_from_r(algebra: &DendriformAlgebra, r: &Matrix) -> Result<Cobracket> {
    validate_two_tensor(algebra, r, "cobracket_from_r")?;
    let n = algebra.dim();
    let field = algebra.field();
    let id = Matrix::identity(field, n);
    let neg_sigma_r = exchange_sigma(r).neg();
    let mut prec = Vec::with_capacity(n);
    let mut succ = Vec::with_capacity(n);
    for i in 0..n {
        let x = basis_vector(field, n, i);
        succ.push(
            push_two_tensor(r, &id, &algebra.cal_l(&x))
                .sub(&push_two_tensor(r, &algebra.r_prec(&x), &id)),
        );
        prec.push(
            push_two_tensor(&neg_sigma_r, &id, &algebra.l_succ(&x))
                .sub(&push_two_tensor(&neg_sigma_r, &algebra.cal_r(&x), &id)),
        );
    }
    Cobracket::new(field, n, prec, succ)
}

/// The three cocycle/compatibility conditions a cobracket must satisfy
/// against its algebra (one half of the D-bialgebra axioms; the other half
/// is the same check with the roles of the algebra and its dual swapped).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleEquation {
    /// prec component is a 1-cocycle: for all x, y,
    /// Delta_prec(x*y) = (Id (x) L_succ(x)) Delta_prec(y) + (cal_R(y) (x) Id) Delta_prec(x)
    Prec,
    /// succ component is a 1-cocycle: for all x, y,
    /// Delta_succ(x*y) = (Id (x) cal_L(x)) Delta_succ(y) + (R_prec(y) (x) Id) Delta_succ(x)
    Succ,
    /// compatibility between the two components: for all x, y,
    /// (cal_L(x) (x) Id - Id (x) R_prec(x)) Delta_prec(y)
    ///   + sigma((L_succ(y) (x) Id - Id (x) cal_R(y)) Delta_succ(x)) = 0
    Mixed,
}

impl CocycleEquation {
    pub fn name(self) -> &'static str {
        match self {
            CocycleEquation::Prec => "prec cocycle",
            CocycleEquation::Succ => "succ cocycle",
            CocycleEquation::Mixed => "mixed compatibility",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleViolation {
    pub equation: CocycleEquation,
    pub pair: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    pub violations: Vec<CocycleViolation>,
}

impl CocycleReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three cocycle conditions of a cobracket against its algebra on
/// all basis pairs. This is the free entry point; `check_d_bialgebra` applies
/// it to the two adjoint cobrackets of an algebra/dual pair.
pub fn check_cobracket_cocycles(
    algebra: &DendriformAlgebra,
    cobracket: &Cobracket,
) -> Result<CocycleReport> {
    if cobracket.field() != algebra.field() {
        return Err(Error::FieldMismatch { context: "check_cobracket_cocycles" });
    }
    if cobracket.dim() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            context: "cobracket dimension",
            expected: algebra.dim(),
            found: cobracket.dim(),
        });
    }
    let n = algebra.dim();
    let field = algebra.field();
    let id = Matrix::identity(field, n);
    let mut violations = Vec::new();
    for equation in [CocycleEquation::Prec, CocycleEquation::Succ, CocycleEquation::Mixed] {
        for i in 0..n {
            for j in 0..n {
                let x = basis_vector(field, n, i);
                let y = basis_vector(field, n, j);
                let defect = match equation {
                    CocycleEquation::Prec => cobracket
                        .prec_of(&algebra.star_vec(&x, &y))
                        .sub(&push_two_tensor(cobracket.prec_component(j), &id, &algebra.l_succ(&x)))
                        .sub(&push_two_tensor(cobracket.prec_component(i), &algebra.cal_r(&y), &id)),
                    CocycleEquation::Succ => cobracket
                        .succ_of(&algebra.star_vec(&x, &y))
                        .sub(&push_two_tensor(cobracket.succ_component(j), &id, &algebra.cal_l(&x)))
                        .sub(&push_two_tensor(cobracket.succ_component(i), &algebra.r_prec(&y), &id)),
                    CocycleEquation::Mixed => {
                        let first = push_two_tensor(cobracket.prec_component(j), &algebra.cal_l(&x), &id)
                            .sub(&push_two_tensor(cobracket.prec_component(j), &id, &algebra.r_prec(&x)));
                        let second = push_two_tensor(cobracket.succ_component(i), &algebra.l_succ(&y), &id)
                            .sub(&push_two_tensor(cobracket.succ_component(i), &id, &algebra.cal_r(&y)));
                        first.add(&second.transpose())
                    }
                };
                if !defect.is_zero() {
                    violations.push(CocycleViolation { equation, pair: (i, j) });
                }
            }
        }
    }
    Ok(CocycleReport { violations })
}

/// Itemized result of the D-bialgebra axioms for a pair of dendriform
/// structures on dual spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DBialgebraReport {
    /// The primal algebra's dendriform axioms.
    pub algebra_dendriform: DendriformReport,
    /// The dual algebra's dendriform axioms.
    pub dual_dendriform: DendriformReport,
    /// Cocycle conditions of the cobracket on A (adjoint to the dual's
    /// products) against A.
    pub algebra_side: CocycleReport,
    /// Cocycle conditions of the cobracket on A* (adjoint to A's products)
    /// against the dual algebra.
    pub dual_side: CocycleReport,
}

impl DBialgebraReport {
    pub fn ok(&self) -> bool {
        self.algebra_dendriform.ok()
            && self.dual_dendriform.ok()
            && self.algebra_side.ok()
            && self.dual_side.ok()
    }
}

/// Checks whether (A, A*) with the given dendriform structures is a
/// dendriform D-bialgebra: both are dendriform and the two adjoint
/// cobrackets satisfy their cocycle conditions.
pub fn check_d_bialgebra(
    algebra: &DendriformAlgebra,
    dual: &DendriformAlgebra,
) -> Result<DBialgebraReport> {
    if algebra.field() != dual.field() {
        return Err(Error::FieldMismatch { context: "check_d_bialgebra" });
    }
    if algebra.dim() != dual.dim() {
        return Err(Error::DimensionMismatch {
            context: "d-bialgebra dual dimension",
            expected: algebra.dim(),
            found: dual.dim(),
        });
    }
    let delta = adjoint_cobracket(dual);
    let beta = adjoint_cobracket(algebra);
    Ok(DBialgebraReport {
        algebra_dendriform: check_dendriform(algebra),
        dual_dendriform: check_dendriform(dual),
        algebra_side: check_cobracket_cocycles(algebra, &delta)?,
        dual_side: check_cobracket_cocycles(dual, &beta)?,
    })
}

/// Result of a D-bialgebra homomorphism check: f must be a dendriform
/// homomorphism on the primal side and its adjoint (transpose) a dendriform
/// homomorphism between the duals in the opposite direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DBialgebraHomReport {
    /// f as a map of the primal algebras.
    pub algebra_hom: HomReport,
    /// transpose(f) as a map of the dual algebras (target dual to source dual).
    pub dual_hom: HomReport,
}

impl DBialgebraHomReport {
    pub fn ok(&self) -> bool {
        self.algebra_hom.ok() && self.dual_hom.ok()
    }
}

/// Checks that f: A -> B is a homomorphism of D-bialgebras (A, Astar) ->
/// (B, Bstar): f is a dendriform homomorphism and transpose(f): B* -> A* is
/// one as well. The second condition is evaluated both on the dual structure
/// constants and through the cobracket compatibility
/// (f (x) f) Delta_A = Delta_B f; the two routes must agree.
pub fn check_d_bialgebra_hom(
    f: &Matrix,
    algebra: &DendriformAlgebra,
    dual: &DendriformAlgebra,
    target: &DendriformAlgebra,
    target_dual: &DendriformAlgebra,
) -> Result<DBialgebraHomReport> {
    let algebra_hom = check_dendriform_hom(f, algebra, target)?;
    let dual_hom = check_dendriform_hom(&f.transpose(), target_dual, dual)?;
    // Independent route: coalgebra compatibility of the adjoint cobrackets.
    let delta_a = adjoint_cobracket(dual);
    let delta_b = adjoint_cobracket(target_dual);
    let mut coalgebra_ok = true;
    for i in 0..algebra.dim() {
        for (component_a, component_b) in [
            (delta_a.prec_component(i), &delta_b.prec),
            (delta_a.succ_component(i), &delta_b.succ),
        ] {
            let pushed = f.mat_mul(component_a).mat_mul(&f.transpose());
            let mut image = Matrix::zero(f.field(), target.dim(), target.dim());
            for (k, component) in component_b.iter().enumerate() {
                let weight = f.at(k, i);
                if !weight.is_zero() {
                    image = image.add(&component.scale(weight));
                }
            }
            if pushed != image {
                coalgebra_ok = false;
            }
        }
    }
    debug_assert_eq!(
        dual_hom.ok(),
        coalgebra_ok,
        "dual homomorphism route and cobracket compatibility route disagree"
    );
    Ok(DBialgebraHomReport { algebra_hom, dual_hom })
}

fn validate_two_tensor(algebra: &DendriformAlgebra, r: &Matrix, context: &'static str) -> Result<()> {
    if r.field() != algebra.field() {
        return Err(Error::FieldMismatch { context });
    }
    if r.rows() != algebra.dim() || r.cols() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            context,
            expected: algebra.dim(),
            found: r.rows(),
        });
    }
    Ok(())
}

/// The dendriform products induced on the dual space by a 2-tensor r:
///   xi succ_r eta = cal_R*(r_plus xi) eta - L_prec*(r_minus eta) xi,
///   xi prec_r eta = cal_L*(r_plus eta) xi - R_succ*(r_minus xi) eta,
/// with adjoints realized as transposes. The result's products are by
/// construction the adjoints of `cobracket_from_r` (asserted internally);
/// whether they satisfy the dendriform axioms is a property of r.
pub fn dual_products(algebra: &DendriformAlgebra, r: &Matrix) -> Result<DendriformAlgebra> {
    validate_two_tensor(algebra, r, "dual_products")?;
    let n = algebra.dim();
    let field = algebra.field();
    let r_plus = plus_matrix(r);
    let r_minus = minus_matrix(r);
    let mut prec = Tensor3::cube(field, n);
    let mut succ = Tensor3::cube(field, n);
    for p in 0..n {
        for q in 0..n {
            let xi = basis_vector(field, n, p);
            let eta = basis_vector(field, n, q);
            let succ_vec = vec_sub(
                &algebra.cal_r(&r_plus.apply(&xi)).transpose().apply(&eta),
                &algebra.l_prec(&r_minus.apply(&eta)).transpose().apply(&xi),
            );
            let prec_vec = vec_sub(
                &algebra.cal_l(&r_plus.apply(&eta)).transpose().apply(&xi),
                &algebra.r_succ(&r_minus.apply(&xi)).transpose().apply(&eta),
            );
            for k in 0..n {
                succ.set(p, q, k, succ_vec[k].clone());
                prec.set(p, q, k, prec_vec[k].clone());
            }
        }
    }
    let basis = algebra.basis().iter().map(|name| format!("{name}*")).collect();
    let dual = DendriformAlgebra::new(field, n, Some(basis), prec, succ)?;
    debug_assert_eq!(
        adjoint_cobracket(&dual),
        cobracket_from_r(algebra, r)?,
        "dual products must be the adjoints of the induced cobracket"
    );
    Ok(dual)
}

/// The Lambda-only form of the dual products, valid when the skew part of r
/// is invariant: with Lambda_plus the symmetric part of r (as a map A* -> A),
///   xi prec_r eta = cal_L*(Lambda_plus eta) xi - R_succ*(Lambda_plus xi) eta,
///   xi succ_r eta = cal_R*(Lambda_plus xi) eta - L_prec*(Lambda_plus eta) xi.
/// Requires halving, so characteristic 2 is rejected.
pub fn lambda_dual_products(algebra: &DendriformAlgebra, r: &Matrix) -> Result<DendriformAlgebra> {
    validate_two_tensor(algebra, r, "lambda_dual_products")?;
    algebra.field().reject_characteristic_two()?;
    let n = algebra.dim();
    let field = algebra.field();
    let lambda_plus = Matrix::from_fn(field, n, n, |i, j| {
        r.at(i, j).add(r.at(j, i)).halve()
    });
    let mut prec = Tensor3::cube(field, n);
    let mut succ = Tensor3::cube(field, n);
    for p in 0..n {
        for q in 0..n {
            let xi = basis_vector(field, n, p);
            let eta = basis_vector(field, n, q);
            let succ_vec = vec_sub(
                &algebra.cal_r(&lambda_plus.apply(&xi)).transpose().apply(&eta),
                &algebra.l_prec(&lambda_plus.apply(&eta)).transpose().apply(&xi),
            );
            let prec_vec = vec_sub(
                &algebra.cal_l(&lambda_plus.apply(&eta)).transpose().apply(&xi),
                &algebra.r_succ(&lambda_plus.apply(&xi)).transpose().apply(&eta),
            );
            for k in 0..n {
                succ.set(p, q, k, succ_vec[k].clone());
                prec.set(p, q, k, prec_vec[k].clone());
            }
        }
    }
    let basis = algebra.basis().iter().map(|name| format!("{name}*")).collect();
    DendriformAlgebra::new(field, n, Some(basis), prec, succ)
}

/// The D-equation defect of r by direct triple contraction of structure
/// constants: entry [p][q][s] is
///   sum_{i,j} star[i][j][p] R[i][q] R[j][s]
///   - sum_{i,j} R[p][i] R[q][j] prec[i][j][s]
///   - sum_{i,j} R[i][s] R[p][j] succ[i][j][q].
///
/// r satisfies the D-equation exactly when the defect is the zero tensor.
pub fn d_equation_defect(algebra: &DendriformAlgebra, r: &Matrix) -> Result<Tensor3> {
    validate_two_tensor(algebra, r, "d_equation_defect")?;
    let n = algebra.dim();
    let field = algebra.field();
    let star = algebra.star_constants();
    let prec = algebra.prec_constants();
    let succ = algebra.succ_constants();
    let mut defect = Tensor3::cube(field, n);
    for i in 0..n {
        for j in 0..n {
            for p in 0..n {
                let c = star.at(i, j, p);
                if c.is_zero() {
                    continue;
                }
                for q in 0..n {
                    let rq = r.at(i, q);
                    if rq.is_zero() {
                        continue;
                    }
                    for s in 0..n {
                        defect.add_at(p, q, s, &c.mul(rq).mul(r.at(j, s)));
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                let c = prec.at(i, j, s);
                if c.is_zero() {
                    continue;
                }
                for p in 0..n {
                    let rp = r.at(p, i);
                    if rp.is_zero() {
                        continue;
                    }
                    for q in 0..n {
                        defect.add_at(p, q, s, &c.mul(rp).mul(r.at(q, j)).neg());
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for q in 0..n {
                let c = succ.at(i, j, q);
                if c.is_zero() {
                    continue;
                }
                for s in 0..n {
                    let rs = r.at(i, s);
                    if rs.is_zero() {
                        continue;
                    }
                    for p in 0..n {
                        defect.add_at(p, q, s, &c.mul(rs).mul(r.at(p, j)).neg());
                    }
                }
            }
        }
    }
    Ok(defect)
}

/// One failed invariance condition: which of the two defining families and
/// which basis element witnessed it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceViolation {
    pub family: u8,
    pub basis: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub violations: Vec<InvarianceViolation>,
}

impl InvarianceReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks (L_succ, R_prec)-invariance of a 2-tensor t (given by its
/// coefficient matrix): for every basis x,
///   family 1: (Id (x) cal_L(x) - R_prec(x) (x) Id) t = 0,
///   family 2: (Id (x) L_succ(x) - cal_R(x) (x) Id) sigma(t) = 0.
/// The equivalent operator formulation (cal_L(x) t_plus = t_plus R_prec*(x)
/// and cal_R(x) t_plus = t_plus L_succ*(x)) is evaluated as an independent
/// route and the two must agree; for skew t the multiplication-operator
/// exchange form through I is checked as a third route.
pub fn check_lr_invariance(algebra: &DendriformAlgebra, t: &Matrix) -> Result<InvarianceReport> {
    validate_two_tensor(algebra, t, "check_lr_invariance")?;
    let n = algebra.dim();
    let field = algebra.field();
    let id = Matrix::identity(field, n);
    let t_plus = t.transpose();
    let mut violations = Vec::new();
    let mut operator_route = Vec::new();
    for family in 1..=2u8 {
        for i in 0..n {
            let x = basis_vector(field, n, i);
            let definitional = match family {
                1 => push_two_tensor(t, &id, &algebra.cal_l(&x))
                    .sub(&push_two_tensor(t, &algebra.r_prec(&x), &id)),
                _ => push_two_tensor(&t_plus, &id, &algebra.l_succ(&x))
                    .sub(&push_two_tensor(&t_plus, &algebra.cal_r(&x), &id)),
            };
            if !definitional.is_zero() {
                violations.push(InvarianceViolation { family, basis: i });
            }
            let operator_form = match family {
                1 => algebra
                    .cal_l(&x)
                    .mat_mul(&t_plus)
                    .sub(&t_plus.mat_mul(&algebra.r_prec(&x).transpose())),
                _ => algebra
                    .cal_r(&x)
                    .mat_mul(&t_plus)
                    .sub(&t_plus.mat_mul(&algebra.l_succ(&x).transpose())),
            };
            if !operator_form.is_zero() {
                operator_route.push(InvarianceViolation { family, basis: i });
            }
        }
    }
    assert_eq!(
        violations, operator_route,
        "definitional and operator invariance routes disagree"
    );
    if t.transpose() == t.neg() {
        // Third route for skew tensors: R_prec(x) t_plus = t_plus cal_L*(x)
        // and L_succ(x) t_plus = t_plus cal_R*(x).
        let mut skew_route = Vec::new();
        for family in 1..=2u8 {
            for i in 0..n {
                let x = basis_vector(field, n, i);
                let form = match family {
                    1 => algebra
                        .r_prec(&x)
                        .mat_mul(&t_plus)
                        .sub(&t_plus.mat_mul(&algebra.cal_l(&x).transpose())),
                    _ => algebra
                        .l_succ(&x)
                        .mat_mul(&t_plus)
                        .sub(&t_plus.mat_mul(&algebra.cal_r(&x).transpose())),
                };
                if !form.is_zero() {
                    skew_route.push(InvarianceViolation { family, basis: i });
                }
            }
        }
        assert_eq!(
            violations, skew_route,
            "skew-tensor operator exchange route disagrees with the definition"
        );
    }
    Ok(InvarianceReport { violations })
}

/// Witness of a failed coboundary condition: the condition number (1-5 in
/// the order of `coboundary_condition_formula`) plus the basis element(s) it
/// failed on (conditions 1-2 quantify over pairs, 3-5 over single elements).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryViolation {
    pub condition: u8,
    pub x: usize,
    pub y: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryReport {
    pub violations: Vec<CoboundaryViolation>,
}

impl CoboundaryReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn condition_holds(&self, condition: u8) -> bool {
        !self.violations.iter().any(|v| v.condition == condition)
    }
}

pub fn coboundary_condition_formula(condition: u8) -> &'static str {
    match condition {
        1 => "(L_succ(x) (x) Id - Id (x) R_prec(x)) Q(y) (r - sigma(r)) = 0",
        2 => "(R_prec(x) (x) L_succ(y) - Id (x) L_succ(y prec x) - R_prec(y succ x) (x) Id)(r - sigma(r)) = 0",
        3 => "(R_prec(x) (x) Id (x) Id - Id (x) Id (x) L_succ(x)) B1 = 0 with B1 the (2,3,1)-rotation of the negated D-equation defect",
        4 => "<(xi succ_r eta) prec_r zeta - xi succ_r (eta prec_r zeta), x> = 0 for the induced dual products",
        5 => "<xi succ_r (eta succ_r zeta) - (xi star_r eta) succ_r zeta, x> = 0 for the induced dual products",
        _ => "unknown condition",
    }
}

/// Evaluates the five conditions that characterize when r induces a
/// coboundary D-bialgebra structure: the pair (A, A*_r) satisfies the
/// bialgebra axioms if and only if all five hold.
///
/// Conditions 1-3 are closed-form tensor identities in r: condition 1 makes
/// the mixed cocycle equation on the dual side hold, condition 2 the prec
/// and succ cocycle equations, and condition 3 (a contraction of the
/// D-equation defect) the prec-prec dendriform axiom of the dual products.
/// Conditions 4 and 5 are the two remaining dendriform axioms of the dual
/// products, evaluated as tensors paired against each primal basis element.
pub fn check_coboundary_conditions(
    algebra: &DendriformAlgebra,
    r: &Matrix,
) -> Result<CoboundaryReport> {
    validate_two_tensor(algebra, r, "check_coboundary_conditions")?;
    let n = algebra.dim();
    let field = algebra.field();
    let t0 = r.sub(&r.transpose());
    let id = Matrix::identity(field, n);
    // Q(v) applied to a coefficient matrix: M L_succ(v)^T - R_prec(v) M.
    let q_apply = |v: &[Scalar], m: &Matrix| -> Matrix {
        push_two_tensor(m, &id, &algebra.l_succ(v))
            .sub(&push_two_tensor(m, &algebra.r_prec(v), &id))
    };
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| basis_vector(field, n, i)).collect();
    let qt0: Vec<Matrix> = (0..n).map(|k| q_apply(&basis[k], &t0)).collect();
    let defect = d_equation_defect(algebra, r)?;
    let b1 = defect.cycle_to_front().neg();
    let dual = dual_products(algebra, r)?;
    let dprec = dual.prec_constants().clone();
    let dsucc = dual.succ_constants().clone();
    let dstar = dual.star_constants();
    let mut violations = Vec::new();
    // Condition 1: the slot-swapped pair (L_succ(x) (x) Id - Id (x)
    // R_prec(x)) kills Q(y)(r - sigma(r)) for every basis pair (x, y). On
    // coefficient matrices: L_succ(x) M - M R_prec(x)^T with M = Q(e_j) t0.
    for (i, x) in basis.iter().enumerate() {
        for (j, m) in qt0.iter().enumerate() {
            let swapped = push_two_tensor(m, &algebra.l_succ(x), &id)
                .sub(&push_two_tensor(m, &id, &algebra.r_prec(x)));
            if !swapped.is_zero() {
                violations.push(CoboundaryViolation { condition: 1, x: i, y: Some(j) });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let x = &basis[i];
            let y = &basis[j];
            let term1 = push_two_tensor(&t0, &algebra.r_prec(x), &algebra.l_succ(y));
            let term2 = push_two_tensor(&t0, &id, &algebra.l_succ(&algebra.prec_vec(y, x)));
            let term3 = push_two_tensor(&t0, &algebra.r_prec(&algebra.succ_vec(y, x)), &id);
            if !term1.sub(&term2).sub(&term3).is_zero() {
                violations.push(CoboundaryViolation { condition: 2, x: i, y: Some(j) });
            }
        }
    }
    for (k, x) in basis.iter().enumerate() {
        if !b1
            .apply_slot0(&algebra.r_prec(x))
            .sub(&b1.apply_slot2(&algebra.l_succ(x)))
            .is_zero()
        {
            violations.push(CoboundaryViolation { condition: 3, x: k, y: None });
        }
    }
    // Conditions 4 and 5: for each primal basis element e_m, the pairing of
    // a dual dendriform axiom defect with e_m must vanish on all dual basis
    // triples (p, q, s). Condition 4 is the middle axiom
    // (xi succ eta) prec zeta = xi succ (eta prec zeta); condition 5 is
    // xi succ (eta succ zeta) = (xi star eta) succ zeta.
    let contract = |left: &Tensor3, lp: usize, lq: usize, right: &Tensor3, rs: usize, m: usize| {
        let mut acc = field.zero();
        for u in 0..n {
            let lc = left.at(lp, lq, u);
            if lc.is_zero() {
                continue;
            }
            acc = acc.add(&lc.mul(right.at(u, rs, m)));
        }
        acc
    };
    let contract_mid = |left: &Tensor3, lq: usize, ls: usize, right: &Tensor3, rp: usize, m: usize| {
        let mut acc = field.zero();
        for u in 0..n {
            let lc = left.at(lq, ls, u);
            if lc.is_zero() {
                continue;
            }
            acc = acc.add(&lc.mul(right.at(rp, u, m)));
        }
        acc
    };
    for m in 0..n {
        // (e_p succ e_q) prec e_s versus e_p succ (e_q prec e_s) at e_m
        let mut failed = false;
        'c4: for p in 0..n {
            for q in 0..n {
                for s in 0..n {
                    if contract(&dsucc, p, q, &dprec, s, m)
                        != contract_mid(&dprec, q, s, &dsucc, p, m)
                    {
                        failed = true;
                        break 'c4;
                    }
                }
            }
        }
        if failed {
            violations.push(CoboundaryViolation { condition: 4, x: m, y: None });
        }
    }
    for m in 0..n {
        // e_p succ (e_q succ e_s) versus (e_p star e_q) succ e_s at e_m
        let mut failed = false;
        'c5: for p in 0..n {
            for q in 0..n {
                for s in 0..n {
                    if contract_mid(&dsucc, q, s, &dsucc, p, m)
                        != contract(&dstar, p, q, &dsucc, s, m)
                    {
                        failed = true;
                        break 'c5;
                    }
                }
            }
        }
        if failed {
            violations.push(CoboundaryViolation { condition: 5, x: m, y: None });
        }
    }
    // When the other four conditions hold, the closed form of condition 3
    // is equivalent to the remaining dual axiom
    // (xi prec eta) prec zeta = xi prec (eta star zeta). The equivalence is
    // only conditional: an elementary tensor on a four-dimensional double
    // can pass the closed form while failing the axiom, but in every such
    // case another condition fails too, so the conjunction of all five
    // still matches the ground-truth bialgebra check.
    #[cfg(debug_assertions)]
    if !violations.iter().any(|v| v.condition != 3) {
        let mut axiom_fails = false;
        'all: for p in 0..n {
            for q in 0..n {
                for s in 0..n {
                    for m in 0..n {
                        if contract(&dprec, p, q, &dprec, s, m)
                            != contract_mid(&dstar, q, s, &dprec, p, m)
                        {
                            axiom_fails = true;
                            break 'all;
                        }
                    }
                }
            }
        }
        debug_assert_eq!(
            violations.iter().any(|v| v.condition == 3),
            axiom_fails,
            "with the other conditions holding, closed-form condition 3 \
             disagrees with the prec-prec dual axiom"
        );
    }
    violations.sort_by_key(|v| (v.condition, v.x, v.y));
    Ok(CoboundaryReport { violations })
}

/// The class of a 2-tensor on a dendriform algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RMatrixClass {
    /// At least one of the five coboundary conditions fails: the induced
    /// dual products do not form a coboundary D-bialgebra.
    InvalidProducts,
    /// All five conditions hold but r is not quasi-triangular.
    Coboundary,
    /// Quasi-triangular with symmetric r (zero skew part).
    Triangular,
    /// D-equation holds and the skew part is invariant.
    QuasiTriangular,
    /// Quasi-triangular with nondegenerate skew part.
    Factorizable,
}

impl RMatrixClass {
    pub fn name(self) -> &'static str {
        match self {
            RMatrixClass::InvalidProducts => "invalid-products",
            RMatrixClass::Coboundary => "coboundary",
            RMatrixClass::Triangular => "triangular",
            RMatrixClass::QuasiTriangular => "quasi-triangular",
            RMatrixClass::Factorizable => "factorizable",
        }
    }
}

impl std::fmt::Display for RMatrixClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Classification of a 2-tensor together with the evidence used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: RMatrixClass,
    pub coboundary: CoboundaryReport,
    pub dual_dendriform: bool,
    pub defect_zero: bool,
    pub skew_invariant: bool,
    pub symmetric: bool,
    pub skew_rank: usize,
}

/// Classifies r: invalid-products if any coboundary condition fails;
/// otherwise quasi-triangular (defect zero and skew part invariant),
/// refined to factorizable (skew part of full rank) or triangular
/// (r symmetric); otherwise coboundary. Characteristic 2 is rejected
/// because the skew/symmetric decomposition underlying the definitions
/// needs halving.
pub fn classify(algebra: &DendriformAlgebra, r: &Matrix) -> Result<Classification> {
    validate_two_tensor(algebra, r, "classify")?;
    algebra.field().reject_characteristic_two()?;
    let coboundary = check_coboundary_conditions(algebra, r)?;
    let dual_dendriform = check_dendriform(&dual_products(algebra, r)?).ok();
    let defect_zero = d_equation_defect(algebra, r)?.is_zero();
    let t0 = r.sub(&r.transpose());
    let skew_invariant = check_lr_invariance(algebra, &t0)?.ok();
    let symmetric = t0.is_zero();
    let skew_rank = i_matrix(r).rank();
    let class = if !coboundary.ok() {
        RMatrixClass::InvalidProducts
    } else if defect_zero && skew_invariant {
        if skew_rank == algebra.dim() {
            RMatrixClass::Factorizable
        } else if symmetric {
            RMatrixClass::Triangular
        } else {
            RMatrixClass::QuasiTriangular
        }
    } else {
        RMatrixClass::Coboundary
    };
    Ok(Classification {
        class,
        coboundary,
        dual_dendriform,
        defect_zero,
        skew_invariant,
        symmetric,
        skew_rank,
    })
}

/// Factorizes x through a factorizable r: x_plus = r_plus(I^{-1} x),
/// x_minus = r_minus(I^{-1} x), so that x = x_plus - x_minus exactly.
pub fn factorize(
    algebra: &DendriformAlgebra,
    r: &Matrix,
    x: &[Scalar],
) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
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
    if x.len() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            context: "factorize input vector",
            expected: algebra.dim(),
            found: x.len(),
        });
    }
    let inv = i_matrix(r)
        .inverse()
        .expect("full-rank skew part must be invertible");
    let xi = inv.apply(x);
    let x_plus = plus_matrix(r).apply(&xi);
    let x_minus = minus_matrix(r).apply(&xi);
    assert!(
        vec_is_zero(&vec_sub(&vec_sub(&x_plus, &x_minus), x)),
        "factorization must recompose to the input"
    );
    Ok((x_plus, x_minus))
}

/// The coefficient matrix of the canonical 2-tensor sum_i e_i (x) e_i* on a
/// double of dimension 2n.
pub fn canonical_r(field: Field, n: usize) -> Matrix {
    Matrix::from_fn(field, 2 * n, 2 * n, |i, j| {
        if j == i + n && i < n {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// The dendriform double of a D-bialgebra (A, A*): the dendriform structure
/// on A + A* in which both algebras embed and act on each other through the
/// adjoints of their multiplication operators. Returns the double together
/// with the coefficient matrix of the canonical 2-tensor sum_i e_i (x) e_i*.
pub fn double(
    algebra: &DendriformAlgebra,
    dual: &DendriformAlgebra,
) -> Result<(DendriformAlgebra, Matrix)> {
    if !check_d_bialgebra(algebra, dual)?.ok() {
        return Err(Error::NotBialgebra { context: "double" });
    }
    let n = algebra.dim();
    let d = 2 * n;
    let field = algebra.field();
    let mut prec = Tensor3::cube(field, d);
    let mut succ = Tensor3::cube(field, d);
    let set_pair = |t: &mut Tensor3, lhs: usize, rhs: usize, a_part: &[Scalar], dual_part: &[Scalar]| {
        for k in 0..n {
            t.set(lhs, rhs, k, a_part[k].clone());
            t.set(lhs, rhs, n + k, dual_part[k].clone());
        }
    };
    let zero_vec = vec![field.zero(); n];
    for i in 0..n {
        for j in 0..n {
            let x = basis_vector(field, n, i);
            let y = basis_vector(field, n, j);
            // A block: (x,0) op (y,0) = (x op y, 0).
            set_pair(&mut succ, i, j, &algebra.succ_vec(&x, &y), &zero_vec);
            set_pair(&mut prec, i, j, &algebra.prec_vec(&x, &y), &zero_vec);
            // Dual block: (0,xi) op (0,eta) = (0, xi op eta).
            set_pair(&mut succ, n + i, n + j, &zero_vec, &dual.succ_vec(&x, &y));
            set_pair(&mut prec, n + i, n + j, &zero_vec, &dual.prec_vec(&x, &y));
            // Mixed: (e_i, 0) op (0, e_j*).
            let eta = &y;
            set_pair(
                &mut succ,
                i,
                n + j,
                &vec_neg(&dual.l_prec(eta).transpose().apply(&x)),
                &algebra.cal_r(&x).transpose().apply(eta),
            );
            set_pair(
                &mut prec,
                i,
                n + j,
                &dual.cal_l(eta).transpose().apply(&x),
                &vec_neg(&algebra.r_succ(&x).transpose().apply(eta)),
            );
            // Mixed: (0, e_i*) op (e_j, 0).
            let xi = &x;
            set_pair(
                &mut succ,
                n + i,
                j,
                &dual.cal_r(xi).transpose().apply(&y),
                &vec_neg(&algebra.l_prec(&y).transpose().apply(xi)),
            );
            set_pair(
                &mut prec,
                n + i,
                j,
                &vec_neg(&dual.r_succ(xi).transpose().apply(&y)),
                &algebra.cal_l(&y).transpose().apply(xi),
            );
        }
    }
    let mut basis = algebra.basis().to_vec();
    basis.extend(dual.basis().iter().cloned());
    let double_algebra = DendriformAlgebra::new(field, d, Some(basis), prec, succ)?;
    Ok((double_algebra, canonical_r(field, n)))
}
