//! Exhaustive brute-force search over small prime fields, plus an
//! independent operator-composition realization of the compatibility
//! defect.
//!
//! The module supplies ground truth for the direct checkers: the
//! enumerators visit every candidate matrix over GF(p) in lexicographic
//! order and keep exactly those the checkers accept, while
//! [`oracle_defect`] recomputes the defect of the compatibility equation
//! by composing multiplication-operator matrices, sharing no code with
//! the index-formula path in [`crate::bialgebra::d_equation_defect`].
//! Candidate spaces may be partitioned into shards that are scanned
//! independently; the merged result is byte-identical no matter how the
//! shards are scheduled.

use std::thread;

use crate::algebra::DendriformAlgebra;
use crate::bialgebra::{classify, d_equation_defect, Classification};
use crate::error::{Error, Result};
use crate::matrix::{basis_vector, Matrix};
use crate::rota_baxter::check_rb;
use crate::scalar::{Field, Scalar};
use crate::tensor::{minus_matrix, plus_matrix, Tensor3};

/// Default bound on the number of candidates an exhaustive search visits.
pub const DEFAULT_SEARCH_CAP: u128 = 10_000_000;

/// The kind of matrix object an exhaustive search enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchTarget {
    /// Coefficient matrices of two-tensors in the double tensor square.
    TwoTensor,
    /// Candidate Rota-Baxter operator matrices.
    RbOperator,
}

/// Restriction on the entries of the enumerated matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryConstraint {
    /// Every entry ranges independently over the whole field.
    Free,
    /// The matrix is symmetric; only entries on or above the diagonal
    /// are free.
    Symmetric,
    /// The matrix is skew-symmetric with zero diagonal; only entries
    /// above the diagonal are free.
    Skew,
    /// The listed (row, column, value) entries are pinned; all other
    /// entries are free.
    Fixed(Vec<(usize, usize, Scalar)>),
}

/// A validated exhaustive search space over an odd prime field.
///
/// Candidates are square matrices over the base algebra's field,
/// identified with their index in the lexicographic enumeration of the
/// free entries (row-major, each entry running over the residues
/// 0, 1, ..., p-1 in order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpace {
    algebra: DendriformAlgebra,
    target: SearchTarget,
    constraint: EntryConstraint,
    free: Vec<(usize, usize)>,
    size: u128,
}

impl SearchSpace {
    /// Builds a search space with the default candidate cap.
    ///
    /// The base algebra must live over GF(p) with p an odd prime: a
    /// rational algebra has infinitely many candidates and is rejected
    /// as not prime (characteristic zero), while characteristic two is
    /// rejected because classification needs to halve.
    pub fn new(
        algebra: &DendriformAlgebra,
        target: SearchTarget,
        constraint: EntryConstraint,
    ) -> Result<SearchSpace> {
        SearchSpace::with_cap(algebra, target, constraint, DEFAULT_SEARCH_CAP)
    }

    /// Builds a search space whose candidate count must stay within
    /// `cap`.
    pub fn with_cap(
        algebra: &DendriformAlgebra,
        target: SearchTarget,
        constraint: EntryConstraint,
        cap: u128,
    ) -> Result<SearchSpace> {
        let field = algebra.field();
        let p = match field {
            Field::Rational => return Err(Error::NotPrime(0)),
            Field::Gf(p) => p,
        };
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        let n = algebra.dim();
        let mut pinned = Vec::new();
        if let EntryConstraint::Fixed(entries) = &constraint {
            for (i, j, value) in entries {
                if *i >= n || *j >= n {
                    return Err(Error::DimensionMismatch {
                        context: "search space pinned entry",
                        expected: n,
                        found: (*i).max(*j),
                    });
                }
                if value.field() != field {
                    return Err(Error::FieldMismatch { context: "search space pinned entry" });
                }
                pinned.push((*i, *j));
            }
        }
        let mut free = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let keep = match &constraint {
                    EntryConstraint::Free => true,
                    EntryConstraint::Symmetric => i <= j,
                    EntryConstraint::Skew => i < j,
                    EntryConstraint::Fixed(_) => !pinned.contains(&(i, j)),
                };
                if keep {
                    free.push((i, j));
                }
            }
        }
        let mut size: u128 = 1;
        for _ in 0..free.len() {
            size = size.saturating_mul(u128::from(p));
        }
        if size > cap {
            return Err(Error::SearchSpaceTooLarge { size, cap });
        }
        Ok(SearchSpace { algebra: algebra.clone(), target, constraint, free, size })
    }

    /// The base algebra the search runs over.
    pub fn algebra(&self) -> &DendriformAlgebra {
        &self.algebra
    }

    /// The kind of object being enumerated.
    pub fn target(&self) -> SearchTarget {
        self.target
    }

    /// Number of entries that range freely over the field.
    pub fn free_entries(&self) -> usize {
        self.free.len()
    }

    /// Total number of candidates.
    pub fn size(&self) -> u128 {
        self.size
    }

    /// Decodes the candidate at `index` in the lexicographic order.
    ///
    /// Panics if `index` is out of range.
    pub fn candidate(&self, index: u128) -> Matrix {
        assert!(index < self.size, "candidate index {index} out of range {}", self.size);
        let field = self.algebra.field();
        let p = u128::from(field.characteristic());
        let n = self.algebra.dim();
        let mut digits = vec![0i64; self.free.len()];
        let mut rest = index;
        for slot in (0..self.free.len()).rev() {
            digits[slot] = (rest % p) as i64;
            rest /= p;
        }
        let mut matrix = Matrix::zero(field, n, n);
        if let EntryConstraint::Fixed(entries) = &self.constraint {
            for (i, j, value) in entries {
                matrix.set(*i, *j, value.clone());
            }
        }
        for (slot, &(i, j)) in self.free.iter().enumerate() {
            let value = field.from_i64(digits[slot]);
            match self.constraint {
                EntryConstraint::Skew => {
                    matrix.set(j, i, value.neg());
                    matrix.set(i, j, value);
                }
                EntryConstraint::Symmetric => {
                    matrix.set(j, i, value.clone());
                    matrix.set(i, j, value);
                }
                _ => matrix.set(i, j, value),
            }
        }
        matrix
    }
}

/// Scans the whole space in `shards` independent contiguous ranges and
/// concatenates the per-shard hits in index order, so the result does
/// not depend on how the shards are scheduled.
fn scan<T: Send>(
    space: &SearchSpace,
    shards: usize,
    keep: impl Fn(u128, Matrix) -> Option<T> + Sync,
) -> Vec<T> {
    let size = space.size();
    let shards = shards.clamp(1, size.clamp(1, 1 << 12) as usize);
    let base = size / shards as u128;
    let extra = size % shards as u128;
    let bounds: Vec<(u128, u128)> = (0..shards as u128)
        .map(|k| {
            let lo = k * base + k.min(extra);
            let hi = lo + base + u128::from(k < extra);
            (lo, hi)
        })
        .collect();
    let keep = &keep;
    thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .into_iter()
            .map(|(lo, hi)| {
                scope.spawn(move || {
                    (lo..hi)
                        .filter_map(|index| keep(index, space.candidate(index)))
                        .collect::<Vec<T>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|handle| handle.join().expect("search shard panicked"))
            .collect()
    })
}

/// A two-tensor satisfying the compatibility equation, found by
/// exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSolution {
    /// Position of the tensor in the lexicographic enumeration.
    pub index: u128,
    /// Coefficient matrix of the tensor.
    pub tensor: Matrix,
    /// Full classification evidence for the tensor.
    pub classification: Classification,
}

/// A Rota-Baxter operator matrix found by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBSolution {
    /// Position of the matrix in the lexicographic enumeration.
    pub index: u128,
    /// The operator matrix.
    pub matrix: Matrix,
}

/// Returns every two-tensor over GF(p) whose compatibility defect
/// vanishes, in lexicographic order, each tagged with its
/// classification.
pub fn enumerate_d_solutions(algebra: &DendriformAlgebra) -> Result<Vec<DSolution>> {
    enumerate_d_solutions_sharded(algebra, default_shards())
}

/// Sharded variant of [`enumerate_d_solutions`]; the result is
/// identical for every shard count.
pub fn enumerate_d_solutions_sharded(
    algebra: &DendriformAlgebra,
    shards: usize,
) -> Result<Vec<DSolution>> {
    let space = SearchSpace::new(algebra, SearchTarget::TwoTensor, EntryConstraint::Free)?;
    Ok(scan(&space, shards, |index, tensor| {
        let defect = d_equation_defect(algebra, &tensor)
            .expect("enumerated candidates match the algebra");
        if !defect.is_zero() {
            return None;
        }
        let classification = classify(algebra, &tensor)
            .expect("classification is defined over odd prime fields");
        Some(DSolution { index, tensor, classification })
    }))
}

/// Returns every Rota-Baxter operator matrix of the given weight over
/// GF(p), in lexicographic order.
pub fn enumerate_rb(algebra: &DendriformAlgebra, weight: &Scalar) -> Result<Vec<RBSolution>> {
    enumerate_rb_sharded(algebra, weight, default_shards())
}

/// Sharded variant of [`enumerate_rb`]; the result is identical for
/// every shard count.
pub fn enumerate_rb_sharded(
    algebra: &DendriformAlgebra,
    weight: &Scalar,
    shards: usize,
) -> Result<Vec<RBSolution>> {
    if weight.field() != algebra.field() {
        return Err(Error::FieldMismatch { context: "enumerate_rb" });
    }
    let space = SearchSpace::new(algebra, SearchTarget::RbOperator, EntryConstraint::Free)?;
    Ok(scan(&space, shards, |index, matrix| {
        let report = check_rb(algebra, &matrix, weight)
            .expect("enumerated candidates match the algebra");
        report.ok().then_some(RBSolution { index, matrix })
    }))
}

/// The shard count used by the unsharded entry points: one shard per
/// available hardware thread.
pub fn default_shards() -> usize {
    thread::available_parallelism().map(|count| count.get()).unwrap_or(1)
}

/// Recomputes the compatibility defect of a two-tensor by composing
/// multiplication-operator matrices with the two factor maps.
///
/// This is the same tensor as
/// [`d_equation_defect`](crate::bialgebra::d_equation_defect) but
/// realized through a different computation: with a = r_plus(f_p),
/// b = r_minus(f_q), c = r_minus(f_s) the images of the dual basis
/// under the factor maps, the (p, q, s) coefficient is the pairing of
/// f_p with b star c, minus the pairing of f_s with a prec r_plus(f_q),
/// minus the pairing of f_q with c succ a. Each product is evaluated by
/// applying a multiplication-operator matrix, so no code is shared with
/// the index-formula path.
///
/// The tensor must be square of the algebra's dimension over the
/// algebra's field; this is a caller obligation, not a checked error.
pub fn oracle_defect(algebra: &DendriformAlgebra, r: &Matrix) -> Tensor3 {
    debug_assert_eq!(r.field(), algebra.field(), "oracle_defect: field mismatch");
    debug_assert_eq!(r.rows(), algebra.dim(), "oracle_defect: row count mismatch");
    debug_assert_eq!(r.cols(), algebra.dim(), "oracle_defect: column count mismatch");
    let n = algebra.dim();
    let field = algebra.field();
    let plus = plus_matrix(r);
    let minus = minus_matrix(r);
    let plus_image: Vec<Vec<Scalar>> =
        (0..n).map(|i| plus.apply(&basis_vector(field, n, i))).collect();
    let minus_image: Vec<Vec<Scalar>> =
        (0..n).map(|i| minus.apply(&basis_vector(field, n, i))).collect();
    let mut defect = Tensor3::cube(field, n);
    for (q, minus_q) in minus_image.iter().enumerate() {
        let left_star = algebra.cal_l(minus_q);
        for (s, minus_s) in minus_image.iter().enumerate() {
            let product = left_star.apply(minus_s);
            for (p, value) in product.iter().enumerate() {
                defect.add_at(p, q, s, value);
            }
        }
    }
    for (p, plus_p) in plus_image.iter().enumerate() {
        let left_prec = algebra.l_prec(plus_p);
        for (q, plus_q) in plus_image.iter().enumerate() {
            let product = left_prec.apply(plus_q);
            for (s, value) in product.iter().enumerate() {
                defect.add_at(p, q, s, &value.neg());
            }
        }
    }
    for (s, minus_s) in minus_image.iter().enumerate() {
        let left_succ = algebra.l_succ(minus_s);
        for (p, plus_p) in plus_image.iter().enumerate() {
            let product = left_succ.apply(plus_p);
            for (q, value) in product.iter().enumerate() {
                defect.add_at(p, q, s, &value.neg());
            }
        }
    }
    defect
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::RMatrixClass;
    use crate::samples::{two_dim, two_dim_r};

    const F3: Field = Field::Gf(3);

    #[test]
    fn oracle_matches_index_formula_everywhere_over_gf3() {
        let a = two_dim(F3);
        let space = SearchSpace::new(&a, SearchTarget::TwoTensor, EntryConstraint::Free).unwrap();
        assert_eq!(space.size(), 81);
        for index in 0..space.size() {
            let r = space.candidate(index);
            assert_eq!(
                oracle_defect(&a, &r),
                d_equation_defect(&a, &r).unwrap(),
                "the two defect realizations agree on candidate {index}"
            );
        }
    }

    #[test]
    fn oracle_zero_and_fixture_values() {
        let a = two_dim(Field::Rational);
        let zero = Matrix::zero(Field::Rational, 2, 2);
        assert!(oracle_defect(&a, &zero).is_zero(), "the zero tensor has zero defect");
        let r = two_dim_r(Field::Rational);
        assert!(oracle_defect(&a, &r).is_zero(), "the fixture tensor has zero defect");
        assert_eq!(
            oracle_defect(&a, &r),
            d_equation_defect(&a, &r).unwrap(),
            "both realizations vanish on the fixture"
        );
        let bad = Matrix::identity(Field::Rational, 2);
        let defect = oracle_defect(&a, &bad);
        assert!(!defect.is_zero(), "the identity tensor fails the compatibility equation");
        assert_eq!(defect, d_equation_defect(&a, &bad).unwrap());
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let a = two_dim(F3);
        let space = SearchSpace::new(&a, SearchTarget::TwoTensor, EntryConstraint::Free).unwrap();
        assert!(space.candidate(0).is_zero(), "candidate zero is the zero matrix");
        let second = space.candidate(1);
        assert_eq!(*second.at(1, 1), F3.one(), "the last entry is the least significant digit");
        assert!(second.at(0, 0).is_zero() && second.at(0, 1).is_zero());
        let last = space.candidate(80);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(*last.at(i, j), F3.from_i64(2), "the final candidate is all twos");
            }
        }
    }

    #[test]
    fn constrained_spaces_have_expected_shapes() {
        let a = two_dim(F3);
        let symmetric =
            SearchSpace::new(&a, SearchTarget::TwoTensor, EntryConstraint::Symmetric).unwrap();
        assert_eq!(symmetric.size(), 27);
        let skew = SearchSpace::new(&a, SearchTarget::TwoTensor, EntryConstraint::Skew).unwrap();
        assert_eq!(skew.size(), 3);
        for index in 0..3 {
            let m = skew.candidate(index);
            assert!(m.add(&m.transpose()).is_zero(), "skew candidates are skew");
            assert!(m.at(0, 0).is_zero() && m.at(1, 1).is_zero());
        }
        let pinned = EntryConstraint::Fixed(vec![(1, 0, F3.from_i64(2))]);
        let fixed = SearchSpace::new(&a, SearchTarget::TwoTensor, pinned).unwrap();
        assert_eq!(fixed.size(), 27);
        assert_eq!(*fixed.candidate(0).at(1, 0), F3.from_i64(2), "pinned entries persist");
    }

    #[test]
    fn space_validation_rejects_bad_inputs() {
        let rational = two_dim(Field::Rational);
        assert_eq!(
            SearchSpace::new(&rational, SearchTarget::TwoTensor, EntryConstraint::Free),
            Err(Error::NotPrime(0)),
            "a rational base algebra cannot be enumerated"
        );
        let even = two_dim(Field::Gf(2));
        assert_eq!(
            SearchSpace::new(&even, SearchTarget::TwoTensor, EntryConstraint::Free),
            Err(Error::CharacteristicTwo)
        );
        let a = two_dim(F3);
        assert_eq!(
            SearchSpace::with_cap(&a, SearchTarget::TwoTensor, EntryConstraint::Free, 10),
            Err(Error::SearchSpaceTooLarge { size: 81, cap: 10 })
        );
        let out_of_range = EntryConstraint::Fixed(vec![(2, 0, F3.one())]);
        assert!(matches!(
            SearchSpace::new(&a, SearchTarget::TwoTensor, out_of_range),
            Err(Error::DimensionMismatch { .. })
        ));
        let wrong_field = EntryConstraint::Fixed(vec![(0, 0, Field::Rational.one())]);
        assert!(matches!(
            SearchSpace::new(&a, SearchTarget::TwoTensor, wrong_field),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn d_solutions_over_gf3_are_exactly_the_defect_kernel() {
        let a = two_dim(F3);
        let solutions = enumerate_d_solutions(&a).unwrap();
        let space = SearchSpace::new(&a, SearchTarget::TwoTensor, EntryConstraint::Free).unwrap();
        let mut hits = 0;
        for index in 0..space.size() {
            let r = space.candidate(index);
            let is_solution = oracle_defect(&a, &r).is_zero();
            let listed = solutions.iter().any(|s| s.index == index);
            assert_eq!(
                is_solution, listed,
                "membership in the enumeration matches the independent oracle at {index}"
            );
            hits += usize::from(listed);
        }
        assert_eq!(hits, solutions.len());
        let zero = solutions.iter().find(|s| s.tensor.is_zero()).expect("zero tensor listed");
        assert_eq!(
            zero.classification.class,
            RMatrixClass::Triangular,
            "the zero tensor is triangular"
        );
        let lift = two_dim_r(F3);
        let fixture = solutions
            .iter()
            .find(|s| s.tensor == lift)
            .expect("the reduced fixture tensor is listed");
        assert_eq!(fixture.classification.class, RMatrixClass::Factorizable);
        let indices: Vec<u128> = solutions.iter().map(|s| s.index).collect();
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        assert_eq!(indices, sorted, "solutions come out in lexicographic order");
    }

    #[test]
    fn sharded_scans_merge_deterministically() {
        let a = two_dim(F3);
        let single = enumerate_d_solutions_sharded(&a, 1).unwrap();
        for shards in [2, 3, 7, 81, 200] {
            assert_eq!(
                enumerate_d_solutions_sharded(&a, shards).unwrap(),
                single,
                "{shards} shards produce the same list as one"
            );
        }
        let weight = F3.one();
        let rb_single = enumerate_rb_sharded(&a, &weight, 1).unwrap();
        for shards in [2, 5, 80] {
            assert_eq!(enumerate_rb_sharded(&a, &weight, shards).unwrap(), rb_single);
        }
    }

    #[test]
    fn rb_enumeration_over_gf3_matches_checker_and_closes() {
        let a = two_dim(F3);
        let weight = F3.one();
        let solutions = enumerate_rb(&a, &weight).unwrap();
        let space = SearchSpace::new(&a, SearchTarget::RbOperator, EntryConstraint::Free).unwrap();
        for index in 0..space.size() {
            let p = space.candidate(index);
            let listed = solutions.iter().any(|s| s.index == index);
            assert_eq!(
                check_rb(&a, &p, &weight).unwrap().ok(),
                listed,
                "membership matches the checker at {index}"
            );
        }
        assert!(
            solutions.iter().any(|s| s.matrix.is_zero()),
            "the zero operator is always listed"
        );
        let minus_id = Matrix::identity(F3, 2).scale(&weight.neg());
        assert!(
            solutions.iter().any(|s| s.matrix == minus_id),
            "minus the weight times the identity is always listed"
        );
        let mut fixture = Matrix::zero(F3, 2, 2);
        fixture.set(1, 1, F3.from_i64(-1));
        assert!(
            solutions.iter().any(|s| s.matrix == fixture),
            "the fixture operator survives reduction mod three"
        );
        let id = Matrix::identity(F3, 2);
        for solution in &solutions {
            let companion = id.scale(&weight).add(&solution.matrix).neg();
            assert!(
                solutions.iter().any(|s| s.matrix == companion),
                "the enumerated set is closed under the companion involution"
            );
        }
    }

    #[test]
    fn rb_enumeration_rejects_mismatched_weight() {
        let a = two_dim(F3);
        assert_eq!(
            enumerate_rb(&a, &Field::Rational.one()),
            Err(Error::FieldMismatch { context: "enumerate_rb" })
        );
    }
}
