//! Representations of dendriform algebras, semidirect products, actions on
//! dendriform algebras, and homomorphism checks.
//!
//! A representation of A on a space V is a quadruple of linear families
//! (l_succ, r_succ, l_prec, r_prec), one operator on V per element of A,
//! subject to nine identities (writing l_star = l_prec + l_succ and r_star =
//! r_prec + r_succ, and * for the sub-adjacent product):
//!
//!  1. l_prec(x prec y) = l_prec(x) l_star(y)
//!  2. r_prec(x) l_prec(y) = l_prec(y) r_star(x)
//!  3. r_prec(x) r_prec(y) = r_prec(y * x)
//!  4. l_prec(x succ y) = l_succ(x) l_prec(y)
//!  5. r_prec(x) l_succ(y) = l_succ(y) r_prec(x)
//!  6. r_prec(x) r_succ(y) = r_succ(y prec x)
//!  7. l_succ(x * y) = l_succ(x) l_succ(y)
//!  8. r_succ(x) l_star(y) = l_succ(y) r_succ(x)
//!  9. r_succ(x) r_star(y) = r_succ(y succ x)
//!
//! The identities hold exactly when the semidirect sum A + V (with V an
//! ideal squaring to zero) is again dendriform; `semidirect` builds that
//! algebra so the equivalence can be observed directly.

use crate::algebra::{check_dendriform, DendriformAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{basis_vector, vec_is_zero, vec_sub, Matrix};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;

/// A quadruple of operator families on a carrier space, one matrix per basis
/// element of the base algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendriformRep {
    field: Field,
    base_dim: usize,
    carrier: usize,
    l_succ: Vec<Matrix>,
    r_succ: Vec<Matrix>,
    l_prec: Vec<Matrix>,
    r_prec: Vec<Matrix>,
}

impl DendriformRep {
    pub fn new(
        field: Field,
        base_dim: usize,
        carrier: usize,
        l_succ: Vec<Matrix>,
        r_succ: Vec<Matrix>,
        l_prec: Vec<Matrix>,
        r_prec: Vec<Matrix>,
    ) -> Result<DendriformRep> {
        field.validate()?;
        for family in [&l_succ, &r_succ, &l_prec, &r_prec] {
            if family.len() != base_dim {
                return Err(Error::DimensionMismatch {
                    context: "representation family length",
                    expected: base_dim,
                    found: family.len(),
                });
            }
            for m in family {
                if m.field() != field {
                    return Err(Error::FieldMismatch { context: "representation matrices" });
                }
                if m.rows() != carrier || m.cols() != carrier {
                    return Err(Error::DimensionMismatch {
                        context: "representation matrix shape",
                        expected: carrier,
                        found: m.rows(),
                    });
                }
            }
        }
        Ok(DendriformRep { field, base_dim, carrier, l_succ, r_succ, l_prec, r_prec })
    }

    /// The representation with all four families zero.
    pub fn zero(field: Field, base_dim: usize, carrier: usize) -> DendriformRep {
        let family = vec![Matrix::zero(field, carrier, carrier); base_dim];
        DendriformRep::new(field, base_dim, carrier, family.clone(), family.clone(), family.clone(), family)
            .expect("zero representation is well-formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn l_succ_family(&self) -> &[Matrix] {
        &self.l_succ
    }

    pub fn r_succ_family(&self) -> &[Matrix] {
        &self.r_succ
    }

    pub fn l_prec_family(&self) -> &[Matrix] {
        &self.l_prec
    }

    pub fn r_prec_family(&self) -> &[Matrix] {
        &self.r_prec
    }

    fn combine(family: &[Matrix], x: &[Scalar], field: Field, carrier: usize) -> Matrix {
        assert!(x.len() == family.len(), "operator argument of wrong length");
        let mut out = Matrix::zero(field, carrier, carrier);
        for (xi, m) in x.iter().zip(family) {
            if !xi.is_zero() {
                out = out.add(&m.scale(xi));
            }
        }
        out
    }

    pub fn l_succ_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.l_succ, x, self.field, self.carrier)
    }

    pub fn r_succ_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.r_succ, x, self.field, self.carrier)
    }

    pub fn l_prec_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.l_prec, x, self.field, self.carrier)
    }

    pub fn r_prec_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.r_prec, x, self.field, self.carrier)
    }

    pub fn l_star_of(&self, x: &[Scalar]) -> Matrix {
        self.l_prec_of(x).add(&self.l_succ_of(x))
    }

    pub fn r_star_of(&self, x: &[Scalar]) -> Matrix {
        self.r_prec_of(x).add(&self.r_succ_of(x))
    }
}

/// The regular representation of A on itself: the four multiplication
/// operator families.
pub fn regular_rep(algebra: &DendriformAlgebra) -> DendriformRep {
    let n = algebra.dim();
    let field = algebra.field();
    let mut l_succ = Vec::with_capacity(n);
    let mut r_succ = Vec::with_capacity(n);
    let mut l_prec = Vec::with_capacity(n);
    let mut r_prec = Vec::with_capacity(n);
    for i in 0..n {
        let e = basis_vector(field, n, i);
        l_succ.push(algebra.l_succ(&e));
        r_succ.push(algebra.r_succ(&e));
        l_prec.push(algebra.l_prec(&e));
        r_prec.push(algebra.r_prec(&e));
    }
    DendriformRep::new(field, n, n, l_succ, r_succ, l_prec, r_prec)
        .expect("regular representation shapes are consistent")
}

/// The coregular representation of A on its dual space: in slot order
/// (l_succ, r_succ, l_prec, r_prec) the quadruple
/// (cal_R*, -L_prec*, -R_succ*, cal_L*), adjoints realized as transposes.
pub fn coregular_rep(algebra: &DendriformAlgebra) -> DendriformRep {
    let n = algebra.dim();
    let field = algebra.field();
    let mut l_succ = Vec::with_capacity(n);
    let mut r_succ = Vec::with_capacity(n);
    let mut l_prec = Vec::with_capacity(n);
    let mut r_prec = Vec::with_capacity(n);
    for i in 0..n {
        let e = basis_vector(field, n, i);
        l_succ.push(algebra.cal_r(&e).transpose());
        r_succ.push(algebra.l_prec(&e).transpose().neg());
        l_prec.push(algebra.r_succ(&e).transpose().neg());
        r_prec.push(algebra.cal_l(&e).transpose());
    }
    DendriformRep::new(field, n, n, l_succ, r_succ, l_prec, r_prec)
        .expect("coregular representation shapes are consistent")
}

/// One failed representation identity: the identity number (1-9 as in the
/// module table) and the basis pair (x, y), 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepViolation {
    pub identity: u8,
    pub pair: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepReport {
    pub violations: Vec<RepViolation>,
}

impl RepReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Human-readable formulas for the nine representation identities.
pub fn rep_identity_formula(identity: u8) -> &'static str {
    match identity {
        1 => "l_prec(x prec y) = l_prec(x) l_star(y)",
        2 => "r_prec(x) l_prec(y) = l_prec(y) r_star(x)",
        3 => "r_prec(x) r_prec(y) = r_prec(y star x)",
        4 => "l_prec(x succ y) = l_succ(x) l_prec(y)",
        5 => "r_prec(x) l_succ(y) = l_succ(y) r_prec(x)",
        6 => "r_prec(x) r_succ(y) = r_succ(y prec x)",
        7 => "l_succ(x star y) = l_succ(x) l_succ(y)",
        8 => "r_succ(x) l_star(y) = l_succ(y) r_succ(x)",
        9 => "r_succ(x) r_star(y) = r_succ(y succ x)",
        _ => "unknown identity",
    }
}

/// Checks the nine representation identities on all basis pairs of the base
/// algebra, reporting every violation in (identity, x, y) order.
pub fn check_representation(algebra: &DendriformAlgebra, rep: &DendriformRep) -> Result<RepReport> {
    if rep.field != algebra.field() {
        return Err(Error::FieldMismatch { context: "check_representation" });
    }
    if rep.base_dim != algebra.dim() {
        return Err(Error::DimensionMismatch {
            context: "representation base dimension",
            expected: algebra.dim(),
            found: rep.base_dim,
        });
    }
    let n = algebra.dim();
    let field = algebra.field();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| basis_vector(field, n, i)).collect();
    let mut violations = Vec::new();
    for identity in 1..=9u8 {
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (&basis[i], &basis[j]);
                let (lhs, rhs) = match identity {
                    1 => (
                        rep.l_prec_of(&algebra.prec_vec(x, y)),
                        rep.l_prec_of(x).mat_mul(&rep.l_star_of(y)),
                    ),
                    2 => (
                        rep.r_prec_of(x).mat_mul(&rep.l_prec_of(y)),
                        rep.l_prec_of(y).mat_mul(&rep.r_star_of(x)),
                    ),
                    3 => (
                        rep.r_prec_of(x).mat_mul(&rep.r_prec_of(y)),
                        rep.r_prec_of(&algebra.star_vec(y, x)),
                    ),
                    4 => (
                        rep.l_prec_of(&algebra.succ_vec(x, y)),
                        rep.l_succ_of(x).mat_mul(&rep.l_prec_of(y)),
                    ),
                    5 => (
                        rep.r_prec_of(x).mat_mul(&rep.l_succ_of(y)),
                        rep.l_succ_of(y).mat_mul(&rep.r_prec_of(x)),
                    ),
                    6 => (
                        rep.r_prec_of(x).mat_mul(&rep.r_succ_of(y)),
                        rep.r_succ_of(&algebra.prec_vec(y, x)),
                    ),
                    7 => (
                        rep.l_succ_of(&algebra.star_vec(x, y)),
                        rep.l_succ_of(x).mat_mul(&rep.l_succ_of(y)),
                    ),
                    8 => (
                        rep.r_succ_of(x).mat_mul(&rep.l_star_of(y)),
                        rep.l_succ_of(y).mat_mul(&rep.r_succ_of(x)),
                    ),
                    _ => (
                        rep.r_succ_of(x).mat_mul(&rep.r_star_of(y)),
                        rep.r_succ_of(&algebra.succ_vec(y, x)),
                    ),
                };
                if lhs != rhs {
                    violations.push(RepViolation { identity, pair: (i, j) });
                }
            }
        }
    }
    Ok(RepReport { violations })
}

/// The semidirect sum A + V: V is an ideal with zero products, A acts
/// through the representation. The result is dendriform exactly when the
/// representation identities hold.
pub fn semidirect(algebra: &DendriformAlgebra, rep: &DendriformRep) -> Result<DendriformAlgebra> {
    if rep.field != algebra.field() {
        return Err(Error::FieldMismatch { context: "semidirect" });
    }
    if rep.base_dim != algebra.dim() {
        return Err(Error::DimensionMismatch {
            context: "semidirect base dimension",
            expected: algebra.dim(),
            found: rep.base_dim,
        });
    }
    let n = algebra.dim();
    let m = rep.carrier;
    let d = n + m;
    let field = algebra.field();
    let mut prec = Tensor3::cube(field, d);
    let mut succ = Tensor3::cube(field, d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                prec.set(i, j, k, algebra.prec_constants().at(i, j, k).clone());
                succ.set(i, j, k, algebra.succ_constants().at(i, j, k).clone());
            }
        }
    }
    for i in 0..n {
        for b in 0..m {
            for a in 0..m {
                // e_i op f_b = l_op(e_i) f_b, f_b op e_i = r_op(e_i) f_b.
                prec.set(i, n + b, n + a, rep.l_prec[i].at(a, b).clone());
                succ.set(i, n + b, n + a, rep.l_succ[i].at(a, b).clone());
                prec.set(n + b, i, n + a, rep.r_prec[i].at(a, b).clone());
                succ.set(n + b, i, n + a, rep.r_succ[i].at(a, b).clone());
            }
        }
    }
    let mut basis = algebra.basis().to_vec();
    basis.extend((1..=m).map(|b| format!("v{b}")));
    DendriformAlgebra::new(field, d, Some(basis), prec, succ)
}

/// One failed homomorphism equation: which product and which basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomViolation {
    pub product: &'static str,
    pub pair: (usize, usize),
    pub defect: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomReport {
    pub violations: Vec<HomViolation>,
}

impl HomReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the linear map f (matrix columns = images of source basis)
/// is a dendriform homomorphism from `source` to `target`.
pub fn check_dendriform_hom(
    f: &Matrix,
    source: &DendriformAlgebra,
    target: &DendriformAlgebra,
) -> Result<HomReport> {
    if f.field() != source.field() || source.field() != target.field() {
        return Err(Error::FieldMismatch { context: "check_dendriform_hom" });
    }
    if f.cols() != source.dim() {
        return Err(Error::DimensionMismatch {
            context: "homomorphism domain",
            expected: source.dim(),
            found: f.cols(),
        });
    }
    if f.rows() != target.dim() {
        return Err(Error::DimensionMismatch {
            context: "homomorphism codomain",
            expected: target.dim(),
            found: f.rows(),
        });
    }
    let n = source.dim();
    let field = source.field();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let x = basis_vector(field, n, i);
            let y = basis_vector(field, n, j);
            let fx = f.apply(&x);
            let fy = f.apply(&y);
            let prec_defect = vec_sub(&f.apply(&source.prec_vec(&x, &y)), &target.prec_vec(&fx, &fy));
            if !vec_is_zero(&prec_defect) {
                violations.push(HomViolation { product: "prec", pair: (i, j), defect: prec_defect });
            }
            let succ_defect = vec_sub(&f.apply(&source.succ_vec(&x, &y)), &target.succ_vec(&fx, &fy));
            if !vec_is_zero(&succ_defect) {
                violations.push(HomViolation { product: "succ", pair: (i, j), defect: succ_defect });
            }
        }
    }
    Ok(HomReport { violations })
}

/// An action of a dendriform algebra A on a dendriform algebra B: a
/// representation on the underlying space of B together with B's own
/// products, subject to nine compatibility equations beyond the
/// representation identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendriformAction {
    pub rep: DendriformRep,
    pub target: DendriformAlgebra,
}

/// One failed action equation: the equation number (1-9 in the order of
/// `action_equation_formula`) and the witness (x, u, v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionViolation {
    pub equation: u8,
    pub witness: (usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionReport {
    pub rep: RepReport,
    pub violations: Vec<ActionViolation>,
}

impl ActionReport {
    pub fn ok(&self) -> bool {
        self.rep.ok() && self.violations.is_empty()
    }
}

pub fn action_equation_formula(equation: u8) -> &'static str {
    match equation {
        1 => "r_prec(x)(u succ v) = u succ (r_prec(x) v)",
        2 => "(l_succ(x) u) prec v = l_succ(x)(u prec v)",
        3 => "(r_succ(x) u) prec v = u succ (l_prec(x) v)",
        4 => "r_prec(x)(u prec v) = u prec (r_star(x) v)",
        5 => "(l_prec(x) u) prec v = l_prec(x)(u star v)",
        6 => "(r_prec(x) u) prec v = u prec (l_star(x) v)",
        7 => "l_succ(x)(u succ v) = (l_star(x) u) succ v",
        8 => "u succ (l_succ(x) v) = (r_star(x) u) succ v",
        9 => "u succ (r_succ(x) v) = r_succ(x)(u star v)",
        _ => "unknown equation",
    }
}

/// Checks an action: the representation identities plus the nine product
/// compatibility equations on all (x, u, v) basis triples.
pub fn check_action(algebra: &DendriformAlgebra, action: &DendriformAction) -> Result<ActionReport> {
    let rep = &action.rep;
    let b = &action.target;
    if b.field() != algebra.field() {
        return Err(Error::FieldMismatch { context: "check_action" });
    }
    if rep.carrier != b.dim() {
        return Err(Error::DimensionMismatch {
            context: "action carrier",
            expected: b.dim(),
            found: rep.carrier,
        });
    }
    let rep_report = check_representation(algebra, rep)?;
    let n = algebra.dim();
    let m = b.dim();
    let field = algebra.field();
    let a_basis: Vec<Vec<Scalar>> = (0..n).map(|i| basis_vector(field, n, i)).collect();
    let b_basis: Vec<Vec<Scalar>> = (0..m).map(|i| basis_vector(field, m, i)).collect();
    let mut violations = Vec::new();
    for equation in 1..=9u8 {
        for (xi, x) in a_basis.iter().enumerate() {
            for (ui, u) in b_basis.iter().enumerate() {
                for (vi, v) in b_basis.iter().enumerate() {
                    let (lhs, rhs) = match equation {
                        1 => (
                            rep.r_prec_of(x).apply(&b.succ_vec(u, v)),
                            b.succ_vec(u, &rep.r_prec_of(x).apply(v)),
                        ),
                        2 => (
                            b.prec_vec(&rep.l_succ_of(x).apply(u), v),
                            rep.l_succ_of(x).apply(&b.prec_vec(u, v)),
                        ),
                        3 => (
                            b.prec_vec(&rep.r_succ_of(x).apply(u), v),
                            b.succ_vec(u, &rep.l_prec_of(x).apply(v)),
                        ),
                        4 => (
                            rep.r_prec_of(x).apply(&b.prec_vec(u, v)),
                            b.prec_vec(u, &rep.r_star_of(x).apply(v)),
                        ),
                        5 => (
                            b.prec_vec(&rep.l_prec_of(x).apply(u), v),
                            rep.l_prec_of(x).apply(&b.star_vec(u, v)),
                        ),
                        6 => (
                            b.prec_vec(&rep.r_prec_of(x).apply(u), v),
                            b.prec_vec(u, &rep.l_star_of(x).apply(v)),
                        ),
                        7 => (
                            rep.l_succ_of(x).apply(&b.succ_vec(u, v)),
                            b.succ_vec(&rep.l_star_of(x).apply(u), v),
                        ),
                        8 => (
                            b.succ_vec(u, &rep.l_succ_of(x).apply(v)),
                            b.succ_vec(&rep.r_star_of(x).apply(u), v),
                        ),
                        _ => (
                            b.succ_vec(u, &rep.r_succ_of(x).apply(v)),
                            rep.r_succ_of(x).apply(&b.star_vec(u, v)),
                        ),
                    };
                    if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                        violations.push(ActionViolation { equation, witness: (xi, ui, vi) });
                    }
                }
            }
        }
    }
    Ok(ActionReport { rep: rep_report, violations })
}

/// Convenience wrapper asserting a representation is valid before use.
pub fn require_valid_rep(
    algebra: &DendriformAlgebra,
    rep: &DendriformRep,
    context: &'static str,
) -> Result<()> {
    if check_representation(algebra, rep)?.ok() {
        Ok(())
    } else {
        Err(Error::InvalidRepresentation { context })
    }
}

/// Convenience wrapper asserting an algebra is dendriform before use.
pub fn require_dendriform(algebra: &DendriformAlgebra, context: &'static str) -> Result<()> {
    if check_dendriform(algebra).ok() {
        Ok(())
    } else {
        Err(Error::NotDendriform { context })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::two_dim;

    const Q: Field = Field::Rational;

    #[test]
    fn regular_rep_is_valid() {
        for field in [Q, Field::Gf(3)] {
            let a = two_dim(field);
            let rep = regular_rep(&a);
            assert!(check_representation(&a, &rep).unwrap().ok());
        }
    }

    #[test]
    fn coregular_rep_is_valid() {
        for field in [Q, Field::Gf(3), Field::Gf(5)] {
            let a = two_dim(field);
            let rep = coregular_rep(&a);
            assert!(check_representation(&a, &rep).unwrap().ok());
        }
    }

    #[test]
    fn zero_rep_is_valid() {
        let a = two_dim(Q);
        let rep = DendriformRep::zero(Q, 2, 3);
        assert!(check_representation(&a, &rep).unwrap().ok());
    }

    #[test]
    fn zeroing_l_prec_breaks_exactly_identity_eight() {
        // Hand-derived: dropping the l_prec family of the regular
        // representation leaves identities 1-7 and 9 intact (they become
        // 0 = 0 or never involve l_prec) and breaks identity 8 exactly where
        // R_succ(x) L_prec(y) is nonzero: (x, y) = (e1, e2) and (e2, e1).
        let a = two_dim(Q);
        let rep = regular_rep(&a);
        let broken = DendriformRep::new(
            Q,
            2,
            2,
            rep.l_succ_family().to_vec(),
            rep.r_succ_family().to_vec(),
            vec![Matrix::zero(Q, 2, 2); 2],
            rep.r_prec_family().to_vec(),
        )
        .unwrap();
        let report = check_representation(&a, &broken).unwrap();
        let got: Vec<_> = report.violations.iter().map(|v| (v.identity, v.pair)).collect();
        assert_eq!(got, vec![(8, (0, 1)), (8, (1, 0))]);
    }

    #[test]
    fn semidirect_validity_tracks_the_representation() {
        let a = two_dim(Q);
        for rep in [regular_rep(&a), coregular_rep(&a), DendriformRep::zero(Q, 2, 2)] {
            let big = semidirect(&a, &rep).unwrap();
            assert_eq!(big.dim(), 4);
            assert!(check_dendriform(&big).ok(), "valid rep gives a dendriform semidirect sum");
        }
        let rep = regular_rep(&a);
        let broken = DendriformRep::new(
            Q,
            2,
            2,
            rep.l_succ_family().to_vec(),
            rep.r_succ_family().to_vec(),
            vec![Matrix::zero(Q, 2, 2); 2],
            rep.r_prec_family().to_vec(),
        )
        .unwrap();
        let big = semidirect(&a, &broken).unwrap();
        assert!(!check_dendriform(&big).ok(), "broken rep gives a non-dendriform sum");
    }

    #[test]
    fn semidirect_products_embed_both_parts() {
        let a = two_dim(Q);
        let rep = regular_rep(&a);
        let big = semidirect(&a, &rep).unwrap();
        let e1 = basis_vector(Q, 4, 0);
        let f1 = basis_vector(Q, 4, 2);
        // e1 prec e1 = e1 in the A block.
        assert_eq!(big.prec_vec(&e1, &e1), e1);
        // e1 succ f2 = l_succ(e1) f2 = e1 succ e2 = e2 seen in the V block.
        let f2 = basis_vector(Q, 4, 3);
        assert_eq!(big.succ_vec(&e1, &f2), f2);
        // f1 prec e1 = r_prec(e1) f1 = e1 prec e1 placed in V: equals f1.
        assert_eq!(big.prec_vec(&f1, &e1), f1);
        // V squares to zero.
        assert!(vec_is_zero(&big.star_vec(&f1, &f2)));
    }

    #[test]
    fn hom_check_accepts_identity_and_zero() {
        let a = two_dim(Q);
        assert!(check_dendriform_hom(&Matrix::identity(Q, 2), &a, &a).unwrap().ok());
        assert!(check_dendriform_hom(&Matrix::zero(Q, 2, 2), &a, &a).unwrap().ok());
    }

    #[test]
    fn hom_check_rejects_scaling() {
        // f = 2 Id fails because products are quadratic in the map.
        let a = two_dim(Q);
        let f = Matrix::identity(Q, 2).scale(&Q.from_i64(2));
        let report = check_dendriform_hom(&f, &a, &a).unwrap();
        assert!(!report.ok());
        assert!(report.violations.iter().any(|v| v.product == "prec" && v.pair == (0, 0)));
    }

    #[test]
    fn action_on_zero_target_is_any_valid_rep() {
        let a = two_dim(Q);
        let action = DendriformAction {
            rep: coregular_rep(&a),
            target: DendriformAlgebra::zero(Q, 2),
        };
        assert!(check_action(&a, &action).unwrap().ok());
    }

    #[test]
    fn action_report_agrees_with_direct_evaluation() {
        // Perturb the coregular representation and verify the violation set
        // against a direct evaluation of each equation in the test.
        let a = two_dim(Q);
        let rep = coregular_rep(&a);
        let mut l_succ = rep.l_succ_family().to_vec();
        l_succ[0] = l_succ[0].add(&Matrix::from_i64_rows(Q, &[&[0, 1], &[0, 0]]));
        let perturbed = DendriformRep::new(
            Q,
            2,
            2,
            l_succ,
            rep.r_succ_family().to_vec(),
            rep.l_prec_family().to_vec(),
            rep.r_prec_family().to_vec(),
        )
        .unwrap();
        // Target with nonzero products so the action equations bite.
        let target = two_dim(Q);
        let action = DendriformAction { rep: perturbed.clone(), target: target.clone() };
        let report = check_action(&a, &action).unwrap();
        assert!(!report.ok());
        // Directly re-evaluate equation 7 at each triple as an independent check.
        let mut expected7 = Vec::new();
        for xi in 0..2 {
            for ui in 0..2 {
                for vi in 0..2 {
                    let x = basis_vector(Q, 2, xi);
                    let u = basis_vector(Q, 2, ui);
                    let v = basis_vector(Q, 2, vi);
                    let lhs = perturbed.l_succ_of(&x).apply(&target.succ_vec(&u, &v));
                    let rhs = target.succ_vec(&perturbed.l_star_of(&x).apply(&u), &v);
                    if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                        expected7.push((xi, ui, vi));
                    }
                }
            }
        }
        let got7: Vec<_> = report
            .violations
            .iter()
            .filter(|v| v.equation == 7)
            .map(|v| v.witness)
            .collect();
        assert_eq!(got7, expected7);
    }
}
