//! Parser and serializer contract: canonical round trips, exact value
//! normalization, and line-numbered rejection of malformed documents.

use dendriform::{Field, Matrix};
use dendrikit::format::{parse, parse_with_field, parse_vector, Document, FormatError};

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn fixture_files_are_in_canonical_form() {
    for name in ["e1.alg", "broken.alg", "r21.tensor", "qrb.alg"] {
        let text = fixture(name);
        let doc = parse(&text).expect("fixture files parse");
        assert_eq!(doc.serialize(), text, "{name} round-trips byte-identically");
        let again = parse(&doc.serialize()).expect("canonical output re-parses");
        assert_eq!(again, doc, "parse is the inverse of serialize on {name}");
    }
}

#[test]
fn serialization_normalizes_scalars_and_order() {
    let text = "\
# comment lines and odd ordering are accepted
field rational
dim 2
succ 2 1 2 -2/2
basis e1 e2
prec 2 1 2 4/4   # trailing comment
prec 1 1 1 -3/-3
succ 1 2 2 5/5
weight -3/6
";
    let doc = parse(text).expect("scrambled input parses");
    assert_eq!(
        doc.serialize(),
        "field rational\ndim 2\nbasis e1 e2\nprec 1 1 1 1\nprec 2 1 2 1\n\
         succ 1 2 2 1\nsucc 2 1 2 -1\nweight -1/2\n",
        "entries are sorted and every scalar is normalized"
    );
    let canonical = parse(&fixture("e1.alg")).unwrap();
    assert_eq!(doc.prec, canonical.prec, "the normalized model matches the fixture");
    assert_eq!(doc.succ, canonical.succ);
}

#[test]
fn prime_field_values_reduce() {
    let doc = parse("field gf 3\ndim 1\nprec 1 1 1 5\n").expect("gf document parses");
    assert_eq!(
        doc.serialize(),
        "field gf 3\ndim 1\nbasis e1\nprec 1 1 1 2\n",
        "gf(3) value 5 normalizes to 2 and the basis is defaulted"
    );
    let negative = parse("field gf 7\ndim 1\ntensor r 1 1 -1\n").unwrap();
    assert_eq!(*negative.tensors["r"].at(0, 0), Field::Gf(7).from_i64(6));
}

#[test]
fn explicit_zero_entries_leave_the_model_unchanged() {
    let with_zero = parse("field rational\ndim 2\nprec 1 2 1 0\nprec 1 1 1 1\n").unwrap();
    let without = parse("field rational\ndim 2\nprec 1 1 1 1\n").unwrap();
    assert_eq!(with_zero, without, "zero entries are not part of the model");
    assert!(!with_zero.serialize().contains("1 2 1"), "zero entries are never written");
}

#[test]
fn zero_attachments_survive_round_trips() {
    let doc = parse("field gf 3\ndim 2\ntensor zero\nmatrix P\nform w 1 2 1\n").unwrap();
    assert!(doc.tensors["zero"].is_zero(), "a bare name declares the zero attachment");
    assert!(doc.matrices["P"].is_zero());
    assert_eq!(
        doc.serialize(),
        "field gf 3\ndim 2\nbasis e1 e2\ntensor zero\nmatrix P\nform w 1 2 1\n",
        "all-zero attachments keep their declaration line"
    );
    let explicit = parse("field gf 3\ndim 2\ntensor zero 1 1 0\n").unwrap();
    assert_eq!(explicit.tensors["zero"], doc.tensors["zero"], "explicit zeros declare too");
    assert_eq!(parse(&doc.serialize()).unwrap(), doc);
}

#[test]
fn field_override_reinterprets_every_literal() {
    let text = fixture("e1.alg");
    let doc = parse_with_field(&text, Some(Field::Gf(3))).expect("override parse");
    assert_eq!(doc.field, Field::Gf(3));
    assert_eq!(
        *doc.succ.at(1, 0, 1),
        Field::Gf(3).from_i64(2),
        "-1 re-reads as 2 over gf(3)"
    );
    assert_eq!(
        parse_with_field("field rational\ndim 1\nprec 1 1 1 1/2\n", Some(Field::Gf(5))),
        Err(FormatError {
            line: 3,
            message: "cannot parse scalar '1/2': prime-field values must be integers".to_string()
        }),
        "fractions are rejected when re-reading over a prime field"
    );
}

#[test]
fn rep_blocks_round_trip() {
    let text = "\
field rational
dim 2
basis e1 e2
prec 1 1 1 1
rep carrier 3
rep lprec 1 1 1 1
rep lsucc 2 3 1 -1/2
rep rprec 1 2 3 2
rep rsucc 2 2 2 1
";
    let doc = parse(text).expect("rep block parses");
    let block = doc.rep.as_ref().expect("rep block present");
    assert_eq!(block.carrier, 3);
    assert_eq!(*block.l_succ[1].at(2, 0), Field::Rational.parse("-1/2").unwrap());
    assert_eq!(doc.serialize(), text, "rep entries serialize in family order");
    block.to_rep(doc.field, doc.dim).expect("the block builds a representation");
}

#[test]
fn report_lines_round_trip_and_stay_ordered() {
    let text = "\
field rational
dim 1
basis e1
report command classify
report ok true
report class triangular
";
    let doc = parse(text).expect("report lines parse");
    assert_eq!(doc.report.len(), 3);
    assert_eq!(doc.report[0], ["command", "classify"]);
    assert_eq!(doc.serialize(), text, "report lines are preserved verbatim in order");
}

#[test]
fn errors_carry_the_offending_line() {
    let cases: &[(&str, usize, &str)] = &[
        ("field rational\ndim 2\nfrobnicate 1\n", 3, "unknown directive `frobnicate`"),
        ("field rational\ndim 2\nprec 1 3 1 1\n", 3, "index 3 out of range 1..=2"),
        ("field rational\ndim 2\nprec 0 1 1 1\n", 3, "index 0 out of range 1..=2"),
        ("field rational\ndim 2\nprec 1 1 1\n", 3, "expected `prec <i> <j> <k> <value>`"),
        (
            "field rational\ndim 2\nprec 1 1 1 x\n",
            3,
            "cannot parse scalar 'x': expected an integer or numerator/denominator",
        ),
        ("field rational\ndim 1\nprec 1 1 1 1\nprec 1 1 1 2\n", 4, "duplicate prec entry (1 1 1)"),
        ("field rational\nfield gf 3\n", 2, "field declared twice"),
        ("field gf 4\ndim 1\n", 1, "4 is not prime"),
        ("field gf x\ndim 1\n", 1, "`x` is not a field size"),
        ("field rational\ndim 0\n", 2, "the dimension must be at least 1"),
        ("field rational\ndim 2\nbasis e1\n", 3, "expected 2 basis names, found 1"),
        ("field rational\ndim 2\nbasis e1 e1\n", 3, "basis name `e1` repeated"),
        ("basis e1\n", 1, "basis must come after dim"),
        ("prec 1 1 1 1\n", 1, "field and dim must be declared before entries"),
        ("field rational\ndim 1\nrep lprec 1 1 1 1\n", 3, "rep entries must come after `rep carrier`"),
        ("field rational\ndim 1\ntensor r 1 1 1\ntensor r 1 1 1\n", 4, "duplicate tensor entry r (1 1)"),
    ];
    for (text, line, message) in cases {
        let error = parse(text).expect_err("malformed document is rejected");
        assert_eq!(error.line, *line, "line number for {text:?}");
        assert_eq!(error.message, *message, "message for {text:?}");
    }
    let missing = parse("# nothing\n").expect_err("empty document is rejected");
    assert_eq!(missing.line, 0);
    assert_eq!(missing.message, "missing `field` line");
}

#[test]
fn attachment_lookup_prefers_canonical_names() {
    let doc = parse(
        "field rational\ndim 1\ntensor s 1 1 1\ntensor r 1 1 2\nmatrix Q 1 1 1\nform w 1 1 1\n",
    )
    .unwrap();
    assert_eq!(*doc.the_tensor().unwrap().at(0, 0), Field::Rational.from_i64(2), "named `r` wins");
    assert_eq!(*doc.the_matrix().unwrap().at(0, 0), Field::Rational.one(), "a unique matrix is found");
    assert_eq!(*doc.the_form().unwrap().at(0, 0), Field::Rational.one(), "a unique form is found");
    let ambiguous = parse("field rational\ndim 1\ntensor s 1 1 1\ntensor t 1 1 2\n").unwrap();
    let error = ambiguous.the_tensor().expect_err("two unnamed tensors are ambiguous");
    assert!(error.message.contains("ambiguous tensor attachment"), "{}", error.message);
    let empty = parse("field rational\ndim 1\n").unwrap();
    assert!(empty.the_tensor().is_err(), "a missing attachment is reported");
}

#[test]
fn documents_build_algebras_and_vectors() {
    let doc = parse(&fixture("e1.alg")).unwrap();
    let algebra = doc.algebra();
    assert_eq!(algebra.dim(), 2);
    assert_eq!(algebra.basis(), ["e1", "e2"]);
    assert!(dendriform::algebra::check_dendriform(&algebra).ok());
    let rebuilt = Document::from_algebra(&algebra);
    assert_eq!(rebuilt.serialize(), fixture("e1.alg"), "from_algebra inverts algebra()");

    let v = parse_vector(Field::Rational, 2, "1, -3/6").unwrap();
    assert_eq!(v[1], Field::Rational.parse("-1/2").unwrap());
    assert!(parse_vector(Field::Rational, 2, "1").is_err(), "wrong length is rejected");
    assert!(parse_vector(Field::Rational, 1, "q").is_err(), "bad coordinates are rejected");
}

#[test]
fn tensor_documents_carry_attachments_only() {
    let doc = parse(&fixture("r21.tensor")).unwrap();
    assert!(doc.prec.is_zero() && doc.succ.is_zero(), "a tensor file has no products");
    let r = doc.the_tensor().unwrap();
    let mut expected = Matrix::zero(Field::Rational, 2, 2);
    expected.set(1, 0, Field::Rational.one());
    assert_eq!(*r, expected, "the fixture tensor is e2 (x) e1");
}
