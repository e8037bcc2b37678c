//! Acceptance gate for the whole toolkit: nine criteria, each reproducing a
//! frozen worked example or an exhaustive property sweep end to end through
//! the public API. The runner prints one verdict line per criterion with
//! its runtime, enforces a per-criterion time bound, and exits nonzero if
//! any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dendriform::algebra::{check_associative, check_dendriform, sub_adjacent};
use dendriform::bialgebra::{
    canonical_r, check_lr_invariance, classify, d_equation_defect, double, dual_products,
    RMatrixClass,
};
use dendriform::rep::{
    check_action, check_dendriform_hom, coregular_rep, regular_rep, DendriformAction,
};
use dendriform::rota_baxter::{
    check_connes, check_omega_sharp_families, check_quadratic_rb, check_rb, check_rb_associative,
    check_rb_representation, check_relative_rb, factorizable_to_qrb, minus_products,
    plus_products, qrb_to_factorizable, rb_semidirect, semidirect_connes, SemidirectProjection,
};
use dendriform::search::{
    enumerate_d_solutions, enumerate_rb, oracle_defect, EntryConstraint, SearchSpace,
    SearchTarget,
};
use dendriform::tensor::{i_matrix, minus_matrix, plus_matrix};
use dendriform::{DendriformAlgebra, Field, Matrix, Scalar, Tensor3};
use dendrikit::format::{parse, parse_with_field};

const Q: Field = Field::Rational;
const F3: Field = Field::Gf(3);
const F5: Field = Field::Gf(5);

fn fixture_text(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn fixture_algebra() -> DendriformAlgebra {
    parse(&fixture_text("e1.alg")).expect("fixture parses").algebra()
}

fn fixture_algebra_over(field: Field) -> DendriformAlgebra {
    parse_with_field(&fixture_text("e1.alg"), Some(field))
        .expect("fixture re-reads over the prime field")
        .algebra()
}

fn fixture_r() -> Matrix {
    parse(&fixture_text("r21.tensor"))
        .expect("tensor fixture parses")
        .the_tensor()
        .expect("tensor attachment present")
        .clone()
}

fn fixture_form() -> Matrix {
    parse(&fixture_text("qrb.alg"))
        .expect("bundle fixture parses")
        .the_form()
        .expect("form attachment present")
        .clone()
}

/// The fixture operator for a given weight: P(e1) = 0, P(e2) = -weight e2.
fn fixture_operator(weight: &Scalar) -> Matrix {
    let mut p = Matrix::zero(Q, 2, 2);
    p.set(1, 1, weight.neg());
    p
}

fn criterion_1_fixture_algebra_and_bundles() {
    let algebra = fixture_algebra();
    assert!(check_dendriform(&algebra).ok(), "the fixture satisfies the dendriform axioms");

    let star = sub_adjacent(&algebra).expect("the sub-adjacent product exists");
    let mut expected = Tensor3::cube(Q, 2);
    expected.set(0, 0, 0, Q.one());
    expected.set(0, 1, 1, Q.one());
    assert_eq!(
        *star.constants(),
        expected,
        "the sub-adjacent product is exactly e1*e1=e1, e1*e2=e2"
    );

    let omega = fixture_form();
    for w in [1i64, 2, 3, -1] {
        let weight = Q.from_i64(w);
        let p = fixture_operator(&weight);
        let report = check_quadratic_rb(&algebra, &p, &omega, &weight)
            .expect("well-shaped bundle inputs");
        assert!(report.ok(), "the bundle passes the quadratic Rota-Baxter check at weight {w}");
    }
}

fn criterion_2_fixture_tensor_classifies_factorizable() {
    let algebra = fixture_algebra();
    let r = fixture_r();
    assert!(
        d_equation_defect(&algebra, &r).expect("defect computes").is_zero(),
        "the fixture tensor solves the compatibility equation"
    );
    let skew = r.sub(&r.transpose());
    assert!(
        check_lr_invariance(&algebra, &skew).expect("invariance computes").ok(),
        "the skew part is invariant"
    );
    assert_eq!(i_matrix(&r).rank(), 2, "the skew pairing has full rank");
    let classification = classify(&algebra, &r).expect("classification computes");
    assert_eq!(classification.class, RMatrixClass::Factorizable);
    assert_eq!(classification.class.name(), "factorizable");
}

fn criterion_3_bundle_round_trip_is_exact() {
    let algebra = fixture_algebra();
    let r = fixture_r();
    let expected_omega = fixture_form();
    for w in [1i64, 2, 3, -1] {
        let weight = Q.from_i64(w);
        let expected_p = fixture_operator(&weight);

        let (p, omega) = factorizable_to_qrb(&algebra, &r, &weight).expect("fixture converts");
        assert_eq!(p, expected_p, "P is exactly diag(0, -weight) at weight {w}");
        assert_eq!(omega, expected_omega, "omega is exactly the pairing e1* wedge e2*");

        let back = qrb_to_factorizable(&algebra, &expected_p, &expected_omega, &weight)
            .expect("fixture bundle converts back");
        assert_eq!(back, r, "the bundle rebuilds exactly e2 (x) e1 at weight {w}");

        // Both composites are identities on the fixtures.
        assert_eq!(
            qrb_to_factorizable(&algebra, &p, &omega, &weight).expect("round trip"),
            r
        );
        assert_eq!(
            factorizable_to_qrb(&algebra, &back, &weight).expect("round trip"),
            (expected_p, expected_omega.clone())
        );
    }
}

fn criterion_4_double_of_the_induced_pair() {
    let algebra = fixture_algebra();
    let dual = dual_products(&algebra, &fixture_r()).expect("dual products compute");
    let (dbl, r) = double(&algebra, &dual).expect("the pair is a bialgebra");
    assert_eq!(dbl.dim(), 4, "the double is four-dimensional");
    assert!(check_dendriform(&dbl).ok(), "the double satisfies the dendriform axioms");
    assert_eq!(r, canonical_r(Q, 2), "the double carries the canonical 2-tensor");
    assert_eq!(
        classify(&dbl, &r).expect("classification computes").class,
        RMatrixClass::Factorizable,
        "the canonical 2-tensor is factorizable"
    );
    // The skew pairing swaps the halves with one sign: (xi, x) -> (-x, xi).
    let expected = Matrix::from_fn(Q, 4, 4, |i, j| {
        if i == j + 2 {
            Q.one()
        } else if j == i + 2 {
            Q.from_i64(-1)
        } else {
            Q.zero()
        }
    });
    assert_eq!(i_matrix(&r), expected, "the skew pairing is the exact half-swap matrix");
}

fn criterion_5_gf3_equivalence_sweep() {
    let algebra = fixture_algebra_over(F3);
    let space = SearchSpace::new(&algebra, SearchTarget::TwoTensor, EntryConstraint::Free)
        .expect("the gf(3) space builds");
    assert_eq!(space.size(), 81, "the full space has 3^4 candidates");
    let solutions = enumerate_d_solutions(&algebra).expect("enumeration runs");
    let mut invariant_count = 0u32;
    for index in 0..space.size() {
        let r = space.candidate(index);
        let skew = r.sub(&r.transpose());
        if !check_lr_invariance(&algebra, &skew).expect("invariance computes").ok() {
            continue;
        }
        invariant_count += 1;
        let defect_zero = solutions.iter().any(|s| s.index == index);
        let dual = dual_products(&algebra, &r).expect("dual products compute");
        let structural = check_dendriform(&dual).ok()
            && check_dendriform_hom(&plus_matrix(&r), &dual, &algebra)
                .expect("hom check computes")
                .ok()
            && check_dendriform_hom(&minus_matrix(&r), &dual, &algebra)
                .expect("hom check computes")
                .ok();
        assert_eq!(
            defect_zero, structural,
            "zero defect must match the homomorphism characterization at index {index}"
        );
    }
    assert!(invariant_count > 2, "the invariant family is non-trivial");
}

fn criterion_6_half_products_actions_and_relative_operators() {
    let algebra = fixture_algebra();
    let r = fixture_r();
    let one = Q.one();

    let plus = plus_products(&algebra, &r).expect("plus products compute");
    assert!(check_dendriform(&plus).ok(), "the plus half products are dendriform");
    let minus = minus_products(&algebra, &r).expect("minus products compute");
    assert!(check_dendriform(&minus).ok(), "the minus half products are dendriform");

    for (label, target, half) in
        [("plus", &plus, plus_matrix(&r)), ("minus", &minus, minus_matrix(&r))]
    {
        let action = DendriformAction { rep: coregular_rep(&algebra), target: target.clone() };
        assert!(
            check_action(&algebra, &action).expect("action check computes").ok(),
            "the coregular quadruple acts on the {label} products"
        );
        assert!(
            check_relative_rb(&half, &algebra, target, &action, &one)
                .expect("relative check computes"),
            "the {label} half map is a relative Rota-Baxter operator of weight one"
        );
    }
}

fn criterion_7_musical_families_and_coregular_representation() {
    let algebra = fixture_algebra();
    let omega = fixture_form();
    for w in [1i64, 2, 3, -1] {
        let weight = Q.from_i64(w);
        let p = fixture_operator(&weight);
        assert!(
            check_omega_sharp_families(&algebra, &p, &omega, &weight)
                .expect("family check computes")
                .ok(),
            "all five intertwining families hold at weight {w}"
        );
        let coregular_t = Matrix::identity(Q, 2).scale(&weight).add(&p.transpose()).neg();
        assert!(
            check_rb_representation(&algebra, &p, &weight, &coregular_rep(&algebra), &coregular_t)
                .expect("representation check computes"),
            "the coregular Rota-Baxter representation holds at weight {w}"
        );
    }
}

fn criterion_8_defect_routes_agree_and_enumeration_is_exhaustive() {
    // Random sweep over GF(5): the index-formula defect and the
    // operator-composition oracle are independent implementations.
    let algebra5 = fixture_algebra_over(F5);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let r = Matrix::from_fn(F5, 2, 2, |_, _| F5.from_i64(rng.gen_range(0..5)));
        assert_eq!(
            d_equation_defect(&algebra5, &r).expect("defect computes"),
            oracle_defect(&algebra5, &r),
            "the two defect routes agree on a random gf(5) tensor"
        );
    }

    // Rational fixtures: the fixture algebra with a spread of exact
    // tensors, and the double with its canonical 2-tensor.
    let algebra = fixture_algebra();
    let r = fixture_r();
    let halves = Matrix::from_fn(Q, 2, 2, |i, j| {
        Q.parse(["1/2", "-3/7", "0", "5/3"][2 * i + j]).expect("literal parses")
    });
    let rational_tensors = [
        r.clone(),
        Matrix::zero(Q, 2, 2),
        Matrix::identity(Q, 2),
        r.add(&r.transpose()),
        halves,
    ];
    for t in &rational_tensors {
        assert_eq!(
            d_equation_defect(&algebra, t).expect("defect computes"),
            oracle_defect(&algebra, t),
            "the two defect routes agree on a rational fixture tensor"
        );
    }
    let dual = dual_products(&algebra, &r).expect("dual products compute");
    let (dbl, canonical) = double(&algebra, &dual).expect("double builds");
    assert_eq!(
        d_equation_defect(&dbl, &canonical).expect("defect computes"),
        oracle_defect(&dbl, &canonical),
        "the two defect routes agree on the double"
    );

    // Exhaustiveness: re-scan the full gf(3) space and compare memberships.
    let algebra3 = fixture_algebra_over(F3);
    let space = SearchSpace::new(&algebra3, SearchTarget::TwoTensor, EntryConstraint::Free)
        .expect("the gf(3) space builds");
    let solutions = enumerate_d_solutions(&algebra3).expect("enumeration runs");
    let mut found = 0usize;
    for index in 0..space.size() {
        let candidate = space.candidate(index);
        let is_solution = oracle_defect(&algebra3, &candidate).is_zero();
        let enumerated = solutions.iter().any(|s| s.index == index);
        assert_eq!(
            enumerated, is_solution,
            "the enumeration and the full-space re-scan agree at index {index}"
        );
        if is_solution {
            found += 1;
        }
    }
    assert_eq!(found, solutions.len(), "the re-scan finds exactly the enumerated set");
}

fn criterion_9_constructive_closures() {
    let algebra = fixture_algebra();

    // The coupled associative product with the canonical pairing form and
    // one-component rescaling passes every check for both projections.
    for w in [1i64, 2] {
        let weight = Q.from_i64(w);
        for projection in [SemidirectProjection::Base, SemidirectProjection::Dual] {
            let (coupled, p, omega) =
                semidirect_connes(&algebra, &weight, projection).expect("construction builds");
            assert!(check_associative(&coupled).ok(), "the coupled product is associative");
            let connes = check_connes(&coupled, &omega).expect("cocycle check computes");
            assert!(
                connes.ok() && connes.nondegenerate,
                "the pairing form is a nondegenerate cyclic cocycle"
            );
            assert!(
                check_rb_associative(&coupled, &p, &weight)
                    .expect("operator check computes")
                    .ok(),
                "the rescaling operator is Rota-Baxter of weight {w}"
            );
            let compat = p
                .transpose()
                .mat_mul(&omega)
                .add(&omega.mat_mul(&p))
                .add(&omega.scale(&weight));
            assert!(compat.is_zero(), "the operator is weight compatible with the form");
        }
    }

    // The semidirect sum with the regular representation extends the
    // fixture operator to a Rota-Baxter operator on the sum.
    let weight = Q.from_i64(2);
    let p = fixture_operator(&weight);
    let (sum, operator) = rb_semidirect(&algebra, &p, &weight, &regular_rep(&algebra), &p)
        .expect("the semidirect operator builds");
    assert!(
        check_rb(&sum, operator.matrix(), &weight)
            .expect("operator check computes")
            .ok(),
        "the semidirect operator is Rota-Baxter on the sum"
    );

    // Every enumerated Rota-Baxter set is closed under the companion
    // P tilde = -weight Id - P.
    let algebra3 = fixture_algebra_over(F3);
    let id = Matrix::identity(F3, 2);
    for w in [1i64, 2] {
        let weight3 = F3.from_i64(w);
        let hits = enumerate_rb(&algebra3, &weight3).expect("enumeration runs");
        assert!(!hits.is_empty(), "the weight-{w} operator set is non-empty");
        for hit in &hits {
            let tilde = id.scale(&weight3).add(&hit.matrix).neg();
            assert!(
                hits.iter().any(|other| other.matrix == tilde),
                "the companion of every enumerated operator is enumerated at weight {w}"
            );
        }
    }
}

fn main() {
    // Keep the output to one verdict line per criterion; failures are
    // reported from the caught panic payload instead of the default hook.
    std::panic::set_hook(Box::new(|_| {}));
    let criteria: Vec<(&str, u64, fn())> = vec![
        (
            "fixture algebra: axioms, sub-adjacent product, quadratic bundles at four weights",
            1,
            criterion_1_fixture_algebra_and_bundles,
        ),
        (
            "fixture 2-tensor: zero defect, invariant skew part, full rank, factorizable",
            1,
            criterion_2_fixture_tensor_classifies_factorizable,
        ),
        (
            "exact two-way round trip between the 2-tensor and its quadratic bundle",
            1,
            criterion_3_bundle_round_trip_is_exact,
        ),
        (
            "double of the induced pair: dendriform, canonical 2-tensor factorizable",
            1,
            criterion_4_double_of_the_induced_pair,
        ),
        (
            "gf(3) sweep: zero defect matches the dual-structure characterization",
            10,
            criterion_5_gf3_equivalence_sweep,
        ),
        (
            "half products dendriform, coregular actions, halves relative Rota-Baxter",
            1,
            criterion_6_half_products_actions_and_relative_operators,
        ),
        (
            "musical intertwining families and the coregular representation at four weights",
            1,
            criterion_7_musical_families_and_coregular_representation,
        ),
        (
            "defect routes agree on 1000 random and all fixture tensors; enumeration exhaustive",
            60,
            criterion_8_defect_routes_agree_and_enumeration_is_exhaustive,
        ),
        (
            "semidirect constructions pass all checks; operator sets close under companions",
            5,
            criterion_9_constructive_closures,
        ),
    ];

    let mut all_ok = true;
    for (number, (description, bound_secs, run)) in criteria.into_iter().enumerate() {
        let bound = Duration::from_secs(bound_secs);
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let in_time = elapsed < bound;
        let passed = result.is_ok() && in_time;
        all_ok &= passed;
        println!(
            "criterion {}: {} ({:.2}s < {bound_secs}s) {description}",
            number + 1,
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
        );
        if let Err(payload) = result {
            let message = payload
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| payload.downcast_ref::<&str>().copied())
                .unwrap_or("panic with non-string payload");
            println!("  failure: {message}");
        } else if !in_time {
            println!("  failure: exceeded the {bound_secs}s bound");
        }
    }
    if !all_ok {
        std::process::exit(1);
    }
}
