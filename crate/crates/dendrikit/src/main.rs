//! Command-line checks and constructions for dendriform algebras given by
//! structure constants: axiom verification, D-bialgebra and coboundary
//! classification, doubles, factorization, the quadratic Rota-Baxter
//! correspondence, and exhaustive prime-field searches.
//!
//! Exit codes are a contract: 0 when every check passes, 1 when a
//! mathematical check fails (a report is still produced), 2 on input or
//! usage errors. `--out <path>` writes a machine-readable report in the
//! same document format the commands read, so any derived object can be
//! fed straight back in.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dendriform::algebra::{check_dendriform, DendriformAxiom, DendriformReport};
use dendriform::bialgebra::{
    classify, coboundary_condition_formula, double, dual_products, factorize, CocycleEquation,
    RMatrixClass,
};
use dendriform::matrix::format_vector;
use dendriform::rota_baxter::{
    check_omega_sharp_families, check_quadratic_rb, factorizable_to_qrb,
    omega_sharp_family_formula, qrb_to_factorizable,
};
use dendriform::search::{
    default_shards, enumerate_d_solutions_sharded, enumerate_rb_sharded, oracle_defect,
};
use dendriform::{DendriformAlgebra, Field, Matrix, Scalar};
use dendrikit::format::{self, Document};

#[derive(Parser)]
#[command(
    name = "dendrikit",
    version,
    about = "Exact checks and constructions for dendriform algebras, their bialgebras, \
             r-matrices, and Rota-Baxter operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify the axioms of an object in a file
    #[command(subcommand)]
    Check(CheckCmd),
    /// Classify a 2-tensor up to factorizability
    Classify(TensorArgs),
    /// Compute the dual products induced by a 2-tensor
    DualProducts(TensorArgs),
    /// Build the dendriform double of a bialgebra pair
    Double(PairArgs),
    /// Split a vector through a factorizable 2-tensor
    Factorize(FactorizeArgs),
    /// Build the quadratic Rota-Baxter bundle of a factorizable 2-tensor
    ToQrb(ToQrbArgs),
    /// Rebuild the factorizable 2-tensor of a quadratic Rota-Baxter bundle
    FromQrb(BundleArgs),
    /// Enumerate solutions over a prime field, with verified certificates
    #[command(subcommand)]
    Search(SearchCmd),
    /// Check the musical intertwining families of a quadratic bundle
    OmegaSharp(BundleArgs),
}

#[derive(Subcommand)]
enum CheckCmd {
    /// The three dendriform axioms of an algebra
    Dendriform(FileArgs),
    /// The D-bialgebra conditions of an algebra/dual pair
    DBialgebra(PairArgs),
    /// The full quadratic Rota-Baxter bundle (A, P, omega, lambda)
    Qrb(BundleArgs),
}

#[derive(Subcommand)]
enum SearchCmd {
    /// All 2-tensors with zero D-equation defect
    DSolutions(SearchArgs),
    /// All Rota-Baxter operators of a given weight
    Rb(SearchArgs),
}

#[derive(Args)]
struct FileArgs {
    /// Algebra document
    file: PathBuf,
    /// Write the machine-readable report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PairArgs {
    /// Algebra document
    file: PathBuf,
    /// Dual algebra document (same field and dimension)
    dual: PathBuf,
    /// Write the machine-readable report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TensorArgs {
    /// Algebra document
    file: PathBuf,
    /// Document holding the 2-tensor (defaults to the algebra document)
    #[arg(long = "with-r")]
    with_r: Option<PathBuf>,
    /// Write the machine-readable report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FactorizeArgs {
    #[command(flatten)]
    tensor: TensorArgs,
    /// Vector to split, as comma-separated coordinates such as 1,0
    #[arg(long)]
    x: String,
}

#[derive(Args)]
struct ToQrbArgs {
    #[command(flatten)]
    tensor: TensorArgs,
    /// Rota-Baxter weight (defaults to the document's weight line)
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Args)]
struct BundleArgs {
    /// Document holding the algebra, operator matrix, and bilinear form
    file: PathBuf,
    /// Rota-Baxter weight (defaults to the document's weight line)
    #[arg(long)]
    lambda: Option<String>,
    /// Write the machine-readable report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Algebra document, re-read over GF(p)
    file: PathBuf,
    /// Prime field size to search over
    #[arg(long)]
    p: u64,
    /// Rota-Baxter weight (searches for operators only)
    #[arg(long)]
    lambda: Option<String>,
    /// Write the machine-readable report here
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A usage or input problem: exit code 2, message on stderr.
struct Usage(String);

impl From<format::FormatError> for Usage {
    fn from(e: format::FormatError) -> Usage {
        Usage(e.to_string())
    }
}

impl From<dendriform::Error> for Usage {
    fn from(e: dendriform::Error) -> Usage {
        Usage(e.to_string())
    }
}

/// What a command produced: a human summary, the machine report, and the
/// overall verdict that decides between exit codes 0 and 1.
struct Outcome {
    ok: bool,
    human: String,
    report: Document,
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.human);
            if let Some(path) = &outcome.out {
                if let Err(e) = std::fs::write(path, outcome.report.serialize()) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<Outcome, Usage> {
    match cmd {
        Cmd::Check(CheckCmd::Dendriform(args)) => check_dendriform_cmd(args),
        Cmd::Check(CheckCmd::DBialgebra(args)) => check_d_bialgebra_cmd(args),
        Cmd::Check(CheckCmd::Qrb(args)) => check_qrb_cmd(args),
        Cmd::Classify(args) => classify_cmd(args),
        Cmd::DualProducts(args) => dual_products_cmd(args),
        Cmd::Double(args) => double_cmd(args),
        Cmd::Factorize(args) => factorize_cmd(args),
        Cmd::ToQrb(args) => to_qrb_cmd(args),
        Cmd::FromQrb(args) => from_qrb_cmd(args),
        Cmd::Search(SearchCmd::DSolutions(args)) => search_d_solutions_cmd(args),
        Cmd::Search(SearchCmd::Rb(args)) => search_rb_cmd(args),
        Cmd::OmegaSharp(args) => omega_sharp_cmd(args),
    }
}

fn load(path: &Path) -> Result<Document, Usage> {
    load_over(path, None)
}

fn load_over(path: &Path, over: Option<Field>) -> Result<Document, Usage> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    format::parse_with_field(&text, over)
        .map_err(|e| Usage(format!("{}: {e}", path.display())))
}

/// Resolves the 2-tensor a command acts on: from the `--with-r` document
/// when given, otherwise from the algebra document itself.
fn resolve_tensor(doc: &Document, with_r: &Option<PathBuf>) -> Result<Matrix, Usage> {
    let (source, owner): (Document, &str) = match with_r {
        Some(path) => (load(path)?, "the --with-r document"),
        None => (doc.clone(), "the document"),
    };
    if source.field != doc.field || source.dim != doc.dim {
        return Err(Usage(
            "the 2-tensor document must share the algebra's field and dimension".to_string(),
        ));
    }
    source
        .the_tensor()
        .cloned()
        .map_err(|e| Usage(format!("{owner}: {e}")))
}

/// Resolves the Rota-Baxter weight: the `--lambda` flag wins, then the
/// document's weight line; a weight of zero is rejected.
fn resolve_weight(doc: &Document, flag: &Option<String>) -> Result<Scalar, Usage> {
    let weight = match flag {
        Some(text) => doc
            .field
            .parse(text)
            .map_err(|e| Usage(format!("--lambda: {e}")))?,
        None => doc.weight.clone().ok_or(Usage(
            "no weight given: pass --lambda or add a `weight` line to the document".to_string(),
        ))?,
    };
    if weight.is_zero() {
        return Err(Usage("the Rota-Baxter weight must be nonzero".to_string()));
    }
    Ok(weight)
}

fn shard_count() -> Result<usize, Usage> {
    match std::env::var("DENDRIKIT_THREADS") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or(Usage(format!(
                "DENDRIKIT_THREADS must be a positive integer, got `{text}`"
            ))),
        Err(_) => Ok(default_shards()),
    }
}

fn bool_token(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn axiom_token(axiom: DendriformAxiom) -> &'static str {
    match axiom {
        DendriformAxiom::PrecPrec => "prec-prec",
        DendriformAxiom::SuccPrec => "succ-prec",
        DendriformAxiom::SuccSucc => "succ-succ",
    }
}

fn cocycle_token(equation: CocycleEquation) -> &'static str {
    match equation {
        CocycleEquation::Prec => "prec-cocycle",
        CocycleEquation::Succ => "succ-cocycle",
        CocycleEquation::Mixed => "mixed-compatibility",
    }
}

fn report_header(doc: &mut Document, command: &str, ok: bool) {
    doc.report.push(vec!["command".to_string(), command.to_string()]);
    doc.report.push(vec!["ok".to_string(), bool_token(ok).to_string()]);
}

fn push_axiom_witnesses(doc: &mut Document, side: &str, report: &DendriformReport) {
    for v in &report.violations {
        doc.report.push(vec![
            "witness".to_string(),
            side.to_string(),
            axiom_token(v.axiom).to_string(),
            (v.triple.0 + 1).to_string(),
            (v.triple.1 + 1).to_string(),
            (v.triple.2 + 1).to_string(),
        ]);
    }
}

fn check_dendriform_cmd(args: FileArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.file)?;
    let algebra = doc.algebra();
    let report = check_dendriform(&algebra);
    let ok = report.ok();
    let mut human = format!(
        "check dendriform: {} (dim {} over {})\n",
        verdict(ok),
        algebra.dim(),
        algebra.field()
    );
    if !ok {
        human.push_str(&indent(&report.to_string()));
    }
    let mut out_doc = doc.clone();
    out_doc.report.clear();
    report_header(&mut out_doc, "check-dendriform", ok);
    push_axiom_witnesses(&mut out_doc, "axiom", &report);
    Ok(Outcome { ok, human, report: out_doc, out: args.out })
}

fn check_d_bialgebra_cmd(args: PairArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.file)?;
    let dual_doc = load(&args.dual)?;
    let algebra = doc.algebra();
    let dual = dual_doc.algebra();
    let report = dendriform::bialgebra::check_d_bialgebra(&algebra, &dual)?;
    let ok = report.ok();
    let mut human = format!("check d-bialgebra: {}\n", verdict(ok));
    human.push_str(&format!(
        "  algebra dendriform: {}\n  dual dendriform: {}\n  cocycles on the algebra: {}\n  cocycles on the dual: {}\n",
        verdict(report.algebra_dendriform.ok()),
        verdict(report.dual_dendriform.ok()),
        verdict(report.algebra_side.ok()),
        verdict(report.dual_side.ok()),
    ));
    for (label, side) in [("algebra", &report.algebra_side), ("dual", &report.dual_side)] {
        for v in &side.violations {
            human.push_str(&format!(
                "  {} fails on the {label} at ({}, {})\n",
                v.equation.name(),
                v.pair.0 + 1,
                v.pair.1 + 1
            ));
        }
    }
    let mut out_doc = doc.clone();
    out_doc.report.clear();
    report_header(&mut out_doc, "check-d-bialgebra", ok);
    for (name, flag) in [
        ("algebra-dendriform", report.algebra_dendriform.ok()),
        ("dual-dendriform", report.dual_dendriform.ok()),
        ("algebra-cocycles", report.algebra_side.ok()),
        ("dual-cocycles", report.dual_side.ok()),
    ] {
        out_doc.report.push(vec![
            "flag".to_string(),
            name.to_string(),
            bool_token(flag).to_string(),
        ]);
    }
    push_axiom_witnesses(&mut out_doc, "algebra-axiom", &report.algebra_dendriform);
    push_axiom_witnesses(&mut out_doc, "dual-axiom", &report.dual_dendriform);
    for (side, cocycles) in [("algebra", &report.algebra_side), ("dual", &report.dual_side)] {
        for v in &cocycles.violations {
            out_doc.report.push(vec![
                "witness".to_string(),
                format!("{side}-cocycle"),
                cocycle_token(v.equation).to_string(),
                (v.pair.0 + 1).to_string(),
                (v.pair.1 + 1).to_string(),
            ]);
        }
    }
    Ok(Outcome { ok, human, report: out_doc, out: args.out })
}

fn check_qrb_cmd(args: BundleArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.file)?;
    let algebra = doc.algebra();
    let p = doc.the_matrix()?.clone();
    let omega = doc.the_form()?.clone();
    let weight = resolve_weight(&doc, &args.lambda)?;
    let report = check_quadratic_rb(&algebra, &p, &omega, &weight)?;
    let ok = report.ok();
    let mut human = format!("check qrb: {} (weight {weight})\n", verdict(ok));
    human.push_str(&format!(
        "  dendriform axioms: {}\n  Rota-Baxter identity: {}\n  quadratic form: {} (antisymmetric: {}, rank {} of {})\n  weight compatibility: {}\n",
        verdict(report.dendriform.ok()),
        verdict(report.rota_baxter.ok()),
        verdict(report.quadratic.ok()),
        bool_token(report.quadratic.antisymmetric),
        report.quadratic.rank,
        report.quadratic.dim,
        verdict(report.compatibility.is_empty()),
    ));
    for v in &report.rota_baxter.violations {
        human.push_str(&format!(
            "  Rota-Baxter identity fails for {} at ({}, {}): defect {}\n",
            v.product,
            v.pair.0 + 1,
            v.pair.1 + 1,
            format_vector(&v.defect)
        ));
    }
    for v in &report.quadratic.violations {
        human.push_str(&format!(
            "  form invariance `{}` fails at ({}, {}, {})\n",
            v.equality,
            v.triple.0 + 1,
            v.triple.1 + 1,
            v.triple.2 + 1
        ));
    }
    for (i, j) in &report.compatibility {
        human.push_str(&format!("  weight compatibility fails at ({}, {})\n", i + 1, j + 1));
    }
    let mut out_doc = doc.clone();
    out_doc.weight = Some(weight);
    out_doc.report.clear();
    report_header(&mut out_doc, "check-qrb", ok);
    for (name, flag) in [
        ("dendriform", report.dendriform.ok()),
        ("rota-baxter", report.rota_baxter.ok()),
        ("quadratic-form", report.quadratic.ok()),
        ("weight-compatibility", report.compatibility.is_empty()),
    ] {
        out_doc.report.push(vec![
            "flag".to_string(),
            name.to_string(),
            bool_token(flag).to_string(),
        ]);
    }
    push_axiom_witnesses(&mut out_doc, "axiom", &report.dendriform);
    for v in &report.rota_baxter.violations {
        out_doc.report.push(vec![
            "witness".to_string(),
            "rota-baxter".to_string(),
            v.product.to_string(),
            (v.pair.0 + 1).to_string(),
            (v.pair.1 + 1).to_string(),
        ]);
    }
    for v in &report.quadratic.violations {
        out_doc.report.push(vec![
            "witness".to_string(),
            "quadratic-form".to_string(),
            (v.triple.0 + 1).to_string(),
            (v.triple.1 + 1).to_string(),
            (v.triple.2 + 1).to_string(),
        ]);
    }
    for (i, j) in &report.compatibility {
        out_doc.report.push(vec![
            "witness".to_string(),
            "weight-compatibility".to_string(),
            (i + 1).to_string(),
            (j + 1).to_string(),
        ]);
    }
    Ok(Outcome { ok, human, report: out_doc, out: args.out })
}

/// Shared classification step: runs `classify` and renders the evidence
/// into both the human summary and the report lines.
fn classification_outcome(
    algebra: &DendriformAlgebra,
    r: &Matrix,
    command: &str,
) -> Result<(bool, String, Document), Usage> {
    let c = classify(algebra, r)?;
    let ok = c.class != RMatrixClass::InvalidProducts;
    let mut human = format!("classification: {}\n", c.class);
    human.push_str(&format!(
        "  coboundary conditions: {}\n  dual products dendriform: {}\n  D-equation defect zero: {}\n  skew part invariant: {}\n  symmetric: {}\n  skew rank: {} of {}\n",
        verdict(c.coboundary.ok()),
        bool_token(c.dual_dendriform),
        bool_token(c.defect_zero),
        bool_token(c.skew_invariant),
        bool_token(c.symmetric),
        c.skew_rank,
        algebra.dim(),
    ));
    for v in &c.coboundary.violations {
        let at = match v.y {
            Some(y) => format!("({}, {})", v.x + 1, y + 1),
            None => format!("({})", v.x + 1),
        };
        human.push_str(&format!(
            "  condition {} fails at {at}: {}\n",
            v.condition,
            coboundary_condition_formula(v.condition)
        ));
    }
    let mut out_doc = Document::from_algebra(algebra);
    out_doc.tensors.insert("r".to_string(), r.clone());
    report_header(&mut out_doc, command, ok);
    out_doc.report.push(vec!["class".to_string(), c.class.name().to_string()]);
    for (name, flag) in [
        ("dual-dendriform", c.dual_dendriform),
        ("defect-zero", c.defect_zero),
        ("skew-invariant", c.skew_invariant),
        ("symmetric", c.symmetric),
    ] {
        out_doc.report.push(vec![
            "flag".to_string(),
            name.to_string(),
            bool_token(flag).to_string(),
        ]);
    }
    out_doc
        .report
        .push(vec!["skew-rank".to_string(), c.skew_rank.to_string()]);
    for v in &c.coboundary.violations {
        let mut line = vec![
            "witness".to_string(),
            "condition".to_string(),
            v.condition.to_string(),
            (v.x + 1).to_string(),
        ];
        if let Some(y) = v.y {
            line.push((y + 1).to_string());
        }
        out_doc.report.push(line);
    }
    Ok((ok, human, out_doc))
}

fn classify_cmd(args: TensorArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.file)?;
    let algebra = doc.algebra();
    let r = resolve_tensor(&doc, &args.with_r)?;
    let (ok, human, report) = classification_outcome(&algebra, &r, "classify")?;
    Ok(Outcome { ok, human, report, out: args.out })
}

fn dual_products_cmd(args: TensorArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.file)?;
    let algebra = doc.algebra();
    let r = resolve_tensor(&doc, &args.with_r)?;
    let dual = dual_products(&algebra, &r)?;
    let report = check_dendriform(&dual);
    let ok = report.ok();
    let mut human = format!(
        "dual products: {} (dim {} over {})\n",
        verdict(ok),
        dual.dim(),
        dual.field()
    );
    if !ok {
        human.push_str(&indent(&report.to_string()));
    }
    let mut out_doc = Document::from_algebra(&dual);
    report_header(&mut out_doc, "dual-products", ok);
    push_axiom_witnesses(&mut out_doc, "axiom", &report);
    Ok(Outcome { ok, human, report: out_doc, out: args.out })
}

fn double_cmd(args: PairArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.file)?;
    let dual_doc = load(&args.dual)?;
    let algebra = doc.algebra();
    let dual = dual_doc.algebra();
    let pair_report = dendriform::bialgebra::check_d_bialgebra(&algebra, &dual)?;
    if !pair_report.ok() {
        let human = format!(
            "double: FAILED\n  the pair is not a D-bialgebra (algebra dendriform: {}, dual dendriform: {}, cocycles: {})\n",
            verdict(pair_report.algebra_dendriform.ok()),
            verdict(pair_report.dual_dendriform.ok()),
            verdict(pair_report.algebra_side.ok() && pair_report.dual_side.ok()),
        );
        let mut out_doc = doc.clone();
        out_doc.report.clear();
        report_header(&mut out_doc, "double", false);
        return Ok(Outcome { ok: false, human, report: out_doc, out: args.out });
    }
    let (dbl, r) = double(&algebra, &dual)?;
    let dendriform_report = check_dendriform(&dbl);
    let c = classify(&dbl, &r)?;
    let ok = dendriform_report.ok() && c.class == RMatrixClass::Factorizable;
    let mut human = format!(
        "double: {} (dim {} over {})\n  dendriform axioms: {}\n  canonical 2-tensor: {}\n",
        verdict(ok),
        dbl.dim(),
        dbl.field(),
        verdict(dendriform_report.ok()),
        c.class,
    );
    if !dendriform_report.ok() {
        human.push_str(&indent(&dendriform_report.to_string()));
    }
    let mut out_doc = Document::from_algebra(&dbl);
    out_doc.tensors.insert("r".to_string(), r);
    report_header(&mut out_doc, "double", ok);
    out_doc.report.push(vec!["class".to_string(), c.class.name().to_string()]);
    push_axiom_witnesses(&mut out_doc, "axiom", &dendriform_report);
    Ok(Outcome { ok, human, report: out_doc, out: args.out })
}

fn factorize_cmd(args: FactorizeArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.tensor.file)?;
    let algebra = doc.algebra();
    let r = resolve_tensor(&doc, &args.tensor.with_r)?;
    let x = format::parse_vector(doc.field, doc.dim, &args.x)
        .map_err(|e| Usage(format!("--x: {e}")))?;
    let c = classify(&algebra, &r)?;
    if c.class != RMatrixClass::Factorizable {
        let human = format!(
            "factorize: FAILED\n  the 2-tensor is not factorizable (classification: {})\n",
            c.class
        );
        let mut out_doc = Document::from_algebra(&algebra);
        out_doc.tensors.insert("r".to_string(), r);
        report_header(&mut out_doc, "factorize", false);
        out_doc.report.push(vec!["class".to_string(), c.class.name().to_string()]);
        return Ok(Outcome { ok: false, human, report: out_doc, out: args.tensor.out });
    }
    let (x_plus, x_minus) = factorize(&algebra, &r, &x)?;
    let human = format!(
        "factorize: ok\n  x       = {}\n  x_plus  = {}\n  x_minus = {}\n  x = x_plus - x_minus\n",
        format_vector(&x),
        format_vector(&x_plus),
        format_vector(&x_minus),
    );
    let mut out_doc = Document::from_algebra(&algebra);
    out_doc.tensors.insert("r".to_string(), r);
    report_header(&mut out_doc, "factorize", true);
    for (name, v) in [("x", &x), ("x-plus", &x_plus), ("x-minus", &x_minus)] {
        for (i, value) in v.iter().enumerate() {
            if !value.is_zero() {
                out_doc.report.push(vec![
                    "vector".to_string(),
                    name.to_string(),
                    (i + 1).to_string(),
                    value.to_string(),
                ]);
            }
        }
    }
    Ok(Outcome { ok: true, human, report: out_doc, out: args.tensor.out })
}

fn to_qrb_cmd(args: ToQrbArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.tensor.file)?;
    let algebra = doc.algebra();
    let r = resolve_tensor(&doc, &args.tensor.with_r)?;
    let weight = resolve_weight(&doc, &args.lambda)?;
    let c = classify(&algebra, &r)?;
    if c.class != RMatrixClass::Factorizable {
        let human = format!(
            "to-qrb: FAILED\n  the 2-tensor is not factorizable (classification: {})\n",
            c.class
        );
        let mut out_doc = Document::from_algebra(&algebra);
        out_doc.tensors.insert("r".to_string(), r);
        report_header(&mut out_doc, "to-qrb", false);
        out_doc.report.push(vec!["class".to_string(), c.class.name().to_string()]);
        return Ok(Outcome { ok: false, human, report: out_doc, out: args.tensor.out });
    }
    let (p, omega) = factorizable_to_qrb(&algebra, &r, &weight)?;
    let human = format!(
        "to-qrb: ok (weight {weight})\n  operator P:\n{}  form omega:\n{}",
        indent(&indent(&p.to_string())),
        indent(&indent(&omega.to_string())),
    );
    let mut out_doc = Document::from_algebra(&algebra);
    out_doc.weight = Some(weight);
    out_doc.matrices.insert("P".to_string(), p);
    out_doc.forms.insert("omega".to_string(), omega);
    report_header(&mut out_doc, "to-qrb", true);
    Ok(Outcome { ok: true, human, report: out_doc, out: args.tensor.out })
}

fn from_qrb_cmd(args: BundleArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.file)?;
    let algebra = doc.algebra();
    let p = doc.the_matrix()?.clone();
    let omega = doc.the_form()?.clone();
    let weight = resolve_weight(&doc, &args.lambda)?;
    let bundle = check_quadratic_rb(&algebra, &p, &omega, &weight)?;
    if !bundle.ok() {
        let human = format!(
            "from-qrb: FAILED\n  the bundle is not quadratic Rota-Baxter (dendriform: {}, Rota-Baxter: {}, form: {}, compatibility: {})\n",
            verdict(bundle.dendriform.ok()),
            verdict(bundle.rota_baxter.ok()),
            verdict(bundle.quadratic.ok()),
            verdict(bundle.compatibility.is_empty()),
        );
        let mut out_doc = doc.clone();
        out_doc.weight = Some(weight);
        out_doc.report.clear();
        report_header(&mut out_doc, "from-qrb", false);
        return Ok(Outcome { ok: false, human, report: out_doc, out: args.out });
    }
    let r = qrb_to_factorizable(&algebra, &p, &omega, &weight)?;
    let human = format!(
        "from-qrb: ok (weight {weight})\n  factorizable 2-tensor r:\n{}",
        indent(&indent(&r.to_string())),
    );
    let mut out_doc = Document::from_algebra(&algebra);
    out_doc.tensors.insert("r".to_string(), r);
    report_header(&mut out_doc, "from-qrb", true);
    out_doc
        .report
        .push(vec!["class".to_string(), "factorizable".to_string()]);
    Ok(Outcome { ok: true, human, report: out_doc, out: args.out })
}

fn omega_sharp_cmd(args: BundleArgs) -> Result<Outcome, Usage> {
    let doc = load(&args.file)?;
    let algebra = doc.algebra();
    let p = doc.the_matrix()?.clone();
    let omega = doc.the_form()?.clone();
    let weight = resolve_weight(&doc, &args.lambda)?;
    let report = check_omega_sharp_families(&algebra, &p, &omega, &weight)?;
    let ok = report.ok();
    let mut human = format!("omega-sharp: {} (weight {weight})\n", verdict(ok));
    for family in 1..=5u8 {
        let fails: Vec<usize> = report
            .violations
            .iter()
            .filter(|v| v.family == family)
            .map(|v| v.witness + 1)
            .collect();
        if fails.is_empty() {
            human.push_str(&format!(
                "  family {family}: ok ({})\n",
                omega_sharp_family_formula(family)
            ));
        } else {
            human.push_str(&format!(
                "  family {family}: FAILED at basis {:?} ({})\n",
                fails,
                omega_sharp_family_formula(family)
            ));
        }
    }
    let mut out_doc = doc.clone();
    out_doc.weight = Some(weight);
    out_doc
        .matrices
        .insert("sharp".to_string(), omega.transpose());
    out_doc.report.clear();
    report_header(&mut out_doc, "omega-sharp", ok);
    for v in &report.violations {
        out_doc.report.push(vec![
            "witness".to_string(),
            "family".to_string(),
            v.family.to_string(),
            (v.witness + 1).to_string(),
        ]);
    }
    Ok(Outcome { ok, human, report: out_doc, out: args.out })
}

/// Loads the search document re-read over GF(p) and validates the field.
fn search_setup(args: &SearchArgs) -> Result<(Document, DendriformAlgebra, usize), Usage> {
    let field = Field::Gf(args.p);
    field.validate()?;
    let doc = load_over(&args.file, Some(field))?;
    let algebra = doc.algebra();
    let shards = shard_count()?;
    Ok((doc, algebra, shards))
}

fn hit_name(position: usize, total: usize) -> String {
    let width = total.to_string().len().max(3);
    format!("hit{position:0width$}")
}

fn search_d_solutions_cmd(args: SearchArgs) -> Result<Outcome, Usage> {
    if args.lambda.is_some() {
        return Err(Usage(
            "--lambda only applies to `search rb`".to_string(),
        ));
    }
    let (_, algebra, shards) = search_setup(&args)?;
    let hits = enumerate_d_solutions_sharded(&algebra, shards)?;
    for hit in &hits {
        assert!(
            oracle_defect(&algebra, &hit.tensor).is_zero(),
            "every reported solution must pass the independent oracle"
        );
    }
    let mut human = format!(
        "search d-solutions over gf {}: {} solutions (dim {})\n",
        args.p,
        hits.len(),
        algebra.dim()
    );
    let mut out_doc = Document::from_algebra(&algebra);
    report_header(&mut out_doc, "search-d-solutions", true);
    out_doc
        .report
        .push(vec!["total".to_string(), hits.len().to_string()]);
    for (position, hit) in hits.iter().enumerate() {
        let name = hit_name(position + 1, hits.len());
        human.push_str(&format!("  {name}: {}\n", hit.classification.class));
        out_doc.report.push(vec![
            "hit".to_string(),
            name.clone(),
            hit.classification.class.name().to_string(),
        ]);
        out_doc.tensors.insert(name, hit.tensor.clone());
    }
    Ok(Outcome { ok: true, human, report: out_doc, out: args.out })
}

fn search_rb_cmd(args: SearchArgs) -> Result<Outcome, Usage> {
    let (doc, algebra, shards) = search_setup(&args)?;
    let weight = resolve_weight(&doc, &args.lambda)?;
    let hits = enumerate_rb_sharded(&algebra, &weight, shards)?;
    let mut human = format!(
        "search rb over gf {} with weight {weight}: {} operators (dim {})\n",
        args.p,
        hits.len(),
        algebra.dim()
    );
    let mut out_doc = Document::from_algebra(&algebra);
    out_doc.weight = Some(weight.clone());
    report_header(&mut out_doc, "search-rb", true);
    out_doc
        .report
        .push(vec!["total".to_string(), hits.len().to_string()]);
    // The companion -lambda Id - P of a Rota-Baxter operator is one again;
    // record each hit's companion as evidence of that closure.
    let id = Matrix::identity(algebra.field(), algebra.dim());
    for (position, hit) in hits.iter().enumerate() {
        let name = hit_name(position + 1, hits.len());
        let tilde = id.scale(&weight).add(&hit.matrix).neg();
        let partner = hits
            .iter()
            .position(|other| other.matrix == tilde)
            .expect("the enumerated set is closed under the companion");
        let partner_name = hit_name(partner + 1, hits.len());
        human.push_str(&format!("  {name} (companion {partner_name})\n"));
        out_doc.report.push(vec![
            "hit".to_string(),
            name.clone(),
            "companion".to_string(),
            partner_name,
        ]);
        out_doc.matrices.insert(name, hit.matrix.clone());
    }
    Ok(Outcome { ok: true, human, report: out_doc, out: args.out })
}

fn indent(text: &str) -> String {
    text.lines()
        .map(|line| format!("  {line}\n"))
        .collect()
}
