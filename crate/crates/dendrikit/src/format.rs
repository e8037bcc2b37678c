//! The plain-text document format shared by every input and output of the
//! command-line tools.
//!
//! A document is a sequence of directives, one per line; `#` starts a
//! comment and blank lines are ignored. Indices are 1-based and scalars are
//! written exactly (`-1/2`, `3`, and over GF(p) any integer, reduced mod p):
//!
//! ```text
//! field rational          # or: field gf <p>
//! dim <n>
//! basis <n names>         # optional, defaults to e1 .. en
//! prec <i> <j> <k> <value>    # coefficient of k in (basis i) prec (basis j)
//! succ <i> <j> <k> <value>
//! weight <value>          # optional Rota-Baxter weight
//! tensor <name> <i> <j> <value>   # a 2-tensor sum r_ij e_i (x) e_j
//! matrix <name> <i> <j> <value>   # a linear map, entry (row i, col j)
//! form <name> <i> <j> <value>     # a bilinear form, value on (e_i, e_j)
//! tensor <name>            # bare name: declares an all-zero attachment

//! rep carrier <m>          # a representation on an m-dimensional space
//! rep lsucc <i> <row> <col> <value>   # likewise rsucc, lprec, rprec
//! report <tokens...>       # verdict lines attached to derived documents
//! ```
//!
//! Unknown directives, malformed arities, out-of-range indices, and
//! duplicate entries are rejected with the offending line number. Reading a
//! document and writing it back produces the canonical form: directives in
//! the order above, entries sorted, zero entries omitted, scalars
//! normalized (so `-3/6` becomes `-1/2`). Parsing is the inverse of
//! serialization on the document model.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use dendriform::rep::DendriformRep;
use dendriform::{DendriformAlgebra, Field, Matrix, Scalar, Tensor3};

/// A document rejection with the 1-based line it occurred on (0 when the
/// problem concerns the file as a whole).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for FormatError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

/// The action matrices of a representation block, indexed by basis element
/// of the algebra acting on an m-dimensional carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepBlock {
    pub carrier: usize,
    pub l_succ: Vec<Matrix>,
    pub r_succ: Vec<Matrix>,
    pub l_prec: Vec<Matrix>,
    pub r_prec: Vec<Matrix>,
}

impl RepBlock {
    fn zero(field: Field, dim: usize, carrier: usize) -> RepBlock {
        let family = vec![Matrix::zero(field, carrier, carrier); dim];
        RepBlock {
            carrier,
            l_succ: family.clone(),
            r_succ: family.clone(),
            l_prec: family.clone(),
            r_prec: family,
        }
    }

    /// Builds the representation the block describes.
    pub fn to_rep(&self, field: Field, base_dim: usize) -> dendriform::Result<DendriformRep> {
        DendriformRep::new(
            field,
            base_dim,
            self.carrier,
            self.l_succ.clone(),
            self.r_succ.clone(),
            self.l_prec.clone(),
            self.r_prec.clone(),
        )
    }
}

/// The parsed content of a document: an algebra presentation plus any
/// number of named attachments and verdict lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    pub prec: Tensor3,
    pub succ: Tensor3,
    pub weight: Option<Scalar>,
    pub tensors: BTreeMap<String, Matrix>,
    pub matrices: BTreeMap<String, Matrix>,
    pub forms: BTreeMap<String, Matrix>,
    pub rep: Option<RepBlock>,
    pub report: Vec<Vec<String>>,
}

impl Document {
    /// Starts a document from an algebra, with no attachments.
    pub fn from_algebra(algebra: &DendriformAlgebra) -> Document {
        Document {
            field: algebra.field(),
            dim: algebra.dim(),
            basis: algebra.basis().to_vec(),
            prec: algebra.prec_constants().clone(),
            succ: algebra.succ_constants().clone(),
            weight: None,
            tensors: BTreeMap::new(),
            matrices: BTreeMap::new(),
            forms: BTreeMap::new(),
            rep: None,
            report: Vec::new(),
        }
    }

    /// The dendriform algebra presented by the document. The axioms are not
    /// checked here; use the checkers for that.
    pub fn algebra(&self) -> DendriformAlgebra {
        DendriformAlgebra::new(
            self.field,
            self.dim,
            Some(self.basis.clone()),
            self.prec.clone(),
            self.succ.clone(),
        )
        .expect("a parsed document always presents a well-shaped algebra")
    }

    /// Looks up the attachment a command should act on: the entry named
    /// `preferred` if present, else the unique entry of the section.
    fn unique<'a>(
        section: &'a BTreeMap<String, Matrix>,
        kind: &str,
        preferred: &str,
    ) -> Result<&'a Matrix, FormatError> {
        if let Some(m) = section.get(preferred) {
            return Ok(m);
        }
        match section.len() {
            1 => Ok(section.values().next().expect("len checked")),
            0 => err(0, format!("the document has no {kind} attachment")),
            _ => {
                let names: Vec<&str> = section.keys().map(String::as_str).collect();
                err(
                    0,
                    format!(
                        "ambiguous {kind} attachment: found {} and none is named `{preferred}`",
                        names.join(", ")
                    ),
                )
            }
        }
    }

    /// The 2-tensor a command should act on (`r` or the unique tensor).
    pub fn the_tensor(&self) -> Result<&Matrix, FormatError> {
        Self::unique(&self.tensors, "tensor", "r")
    }

    /// The operator matrix a command should act on (`P` or the unique one).
    pub fn the_matrix(&self) -> Result<&Matrix, FormatError> {
        Self::unique(&self.matrices, "matrix", "P")
    }

    /// The bilinear form a command should act on (`omega` or the unique one).
    pub fn the_form(&self) -> Result<&Matrix, FormatError> {
        Self::unique(&self.forms, "form", "omega")
    }

    /// Writes the canonical text of the document.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("field {}\n", self.field));
        out.push_str(&format!("dim {}\n", self.dim));
        out.push_str(&format!("basis {}\n", self.basis.join(" ")));
        write_tensor3(&mut out, "prec", &self.prec);
        write_tensor3(&mut out, "succ", &self.succ);
        if let Some(w) = &self.weight {
            out.push_str(&format!("weight {w}\n"));
        }
        for (keyword, section) in
            [("tensor", &self.tensors), ("matrix", &self.matrices), ("form", &self.forms)]
        {
            for (name, m) in section {
                write_matrix(&mut out, keyword, name, m);
            }
        }
        if let Some(rep) = &self.rep {
            out.push_str(&format!("rep carrier {}\n", rep.carrier));
            for (family, matrices) in [
                ("lprec", &rep.l_prec),
                ("lsucc", &rep.l_succ),
                ("rprec", &rep.r_prec),
                ("rsucc", &rep.r_succ),
            ] {
                for (i, m) in matrices.iter().enumerate() {
                    for row in 0..m.rows() {
                        for col in 0..m.cols() {
                            let v = m.at(row, col);
                            if !v.is_zero() {
                                out.push_str(&format!(
                                    "rep {family} {} {} {} {v}\n",
                                    i + 1,
                                    row + 1,
                                    col + 1
                                ));
                            }
                        }
                    }
                }
            }
        }
        for tokens in &self.report {
            out.push_str(&format!("report {}\n", tokens.join(" ")));
        }
        out
    }
}

fn write_tensor3(out: &mut String, keyword: &str, t: &Tensor3) {
    let (a, b, c) = t.dims();
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                let v = t.at(i, j, k);
                if !v.is_zero() {
                    out.push_str(&format!("{keyword} {} {} {} {v}\n", i + 1, j + 1, k + 1));
                }
            }
        }
    }
}

fn write_matrix(out: &mut String, keyword: &str, name: &str, m: &Matrix) {
    if m.is_zero() {
        out.push_str(&format!("{keyword} {name}\n"));
        return;
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.at(i, j);
            if !v.is_zero() {
                out.push_str(&format!("{keyword} {name} {} {} {v}\n", i + 1, j + 1));
            }
        }
    }
}

/// Parses a document, taking every scalar in its declared field.
pub fn parse(source: &str) -> Result<Document, FormatError> {
    parse_with_field(source, None)
}

/// Parses a document. With an override, the declared field line is still
/// required and checked for shape, but the document is read in the override
/// field instead: every scalar literal is re-interpreted there (fractional
/// literals are rejected over a prime field).
pub fn parse_with_field(source: &str, over: Option<Field>) -> Result<Document, FormatError> {
    let mut field: Option<Field> = None;
    let mut dim: Option<usize> = None;
    let mut basis: Option<Vec<String>> = None;
    let mut prec: Option<Tensor3> = None;
    let mut succ: Option<Tensor3> = None;
    let mut weight: Option<Scalar> = None;
    let mut tensors: BTreeMap<String, Matrix> = BTreeMap::new();
    let mut matrices: BTreeMap<String, Matrix> = BTreeMap::new();
    let mut forms: BTreeMap<String, Matrix> = BTreeMap::new();
    let mut rep: Option<RepBlock> = None;
    let mut report: Vec<Vec<String>> = Vec::new();
    let mut seen_products: HashSet<(bool, usize, usize, usize)> = HashSet::new();
    let mut seen_entries: HashSet<(u8, String, usize, usize)> = HashSet::new();
    let mut seen_rep: HashSet<(u8, usize, usize, usize)> = HashSet::new();

    for (idx, raw) in source.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let need = |n: usize, usage: &str| -> Result<(), FormatError> {
            if tokens.len() == n {
                Ok(())
            } else {
                err(line, format!("expected `{usage}`"))
            }
        };
        match tokens[0] {
            "field" => {
                if field.is_some() {
                    return err(line, "field declared twice");
                }
                let declared = match tokens[1..] {
                    ["rational"] => Field::Rational,
                    ["gf", p] => {
                        let p: u64 = p
                            .parse()
                            .map_err(|_| FormatError {
                                line,
                                message: format!("`{p}` is not a field size"),
                            })?;
                        let f = Field::Gf(p);
                        f.validate().map_err(|e| FormatError { line, message: e.to_string() })?;
                        f
                    }
                    _ => return err(line, "expected `field rational` or `field gf <p>`"),
                };
                field = Some(over.unwrap_or(declared));
            }
            "dim" => {
                if dim.is_some() {
                    return err(line, "dim declared twice");
                }
                need(2, "dim <n>")?;
                let n: usize = tokens[1]
                    .parse()
                    .map_err(|_| FormatError {
                        line,
                        message: format!("`{}` is not a dimension", tokens[1]),
                    })?;
                if n == 0 {
                    return err(line, "the dimension must be at least 1");
                }
                dim = Some(n);
            }
            "basis" => {
                if basis.is_some() {
                    return err(line, "basis declared twice");
                }
                let n = dim.ok_or(FormatError {
                    line,
                    message: "basis must come after dim".to_string(),
                })?;
                if tokens.len() != n + 1 {
                    return err(line, format!("expected {n} basis names, found {}", tokens.len() - 1));
                }
                let names: Vec<String> = tokens[1..].iter().map(|s| s.to_string()).collect();
                let mut seen = HashSet::new();
                for name in &names {
                    if !seen.insert(name) {
                        return err(line, format!("basis name `{name}` repeated"));
                    }
                }
                basis = Some(names);
            }
            "prec" | "succ" => {
                let is_prec = tokens[0] == "prec";
                let (f, n) = declared(field, dim, line)?;
                need(5, if is_prec { "prec <i> <j> <k> <value>" } else { "succ <i> <j> <k> <value>" })?;
                let i = index(tokens[1], n, line)?;
                let j = index(tokens[2], n, line)?;
                let k = index(tokens[3], n, line)?;
                let v = scalar(f, tokens[4], line)?;
                if !seen_products.insert((is_prec, i, j, k)) {
                    return err(line, format!("duplicate {} entry ({} {} {})", tokens[0], i + 1, j + 1, k + 1));
                }
                let t = if is_prec { &mut prec } else { &mut succ };
                t.get_or_insert_with(|| Tensor3::cube(f, n)).set(i, j, k, v);
            }
            "weight" => {
                if weight.is_some() {
                    return err(line, "weight declared twice");
                }
                let (f, _) = declared(field, dim, line)?;
                need(2, "weight <value>")?;
                weight = Some(scalar(f, tokens[1], line)?);
            }
            "tensor" | "matrix" | "form" => {
                let (f, n) = declared(field, dim, line)?;
                if tokens.len() == 2 {
                    let section = match tokens[0] {
                        "tensor" => &mut tensors,
                        "matrix" => &mut matrices,
                        _ => &mut forms,
                    };
                    section
                        .entry(tokens[1].to_string())
                        .or_insert_with(|| Matrix::zero(f, n, n));
                    continue;
                }
                need(5, &format!("{} <name> <i> <j> <value>", tokens[0]))?;
                let name = tokens[1].to_string();
                let i = index(tokens[2], n, line)?;
                let j = index(tokens[3], n, line)?;
                let v = scalar(f, tokens[4], line)?;
                let (tag, section) = match tokens[0] {
                    "tensor" => (0u8, &mut tensors),
                    "matrix" => (1, &mut matrices),
                    _ => (2, &mut forms),
                };
                if !seen_entries.insert((tag, name.clone(), i, j)) {
                    return err(line, format!("duplicate {} entry {name} ({} {})", tokens[0], i + 1, j + 1));
                }
                section
                    .entry(name)
                    .or_insert_with(|| Matrix::zero(f, n, n))
                    .set(i, j, v);
            }
            "rep" => {
                let (f, n) = declared(field, dim, line)?;
                match tokens.get(1).copied() {
                    Some("carrier") => {
                        if rep.is_some() {
                            return err(line, "rep carrier declared twice");
                        }
                        need(3, "rep carrier <m>")?;
                        let m: usize = tokens[2].parse().map_err(|_| FormatError {
                            line,
                            message: format!("`{}` is not a carrier dimension", tokens[2]),
                        })?;
                        if m == 0 {
                            return err(line, "the carrier dimension must be at least 1");
                        }
                        rep = Some(RepBlock::zero(f, n, m));
                    }
                    Some(family @ ("lsucc" | "rsucc" | "lprec" | "rprec")) => {
                        let block = rep.as_mut().ok_or(FormatError {
                            line,
                            message: "rep entries must come after `rep carrier`".to_string(),
                        })?;
                        need(6, &format!("rep {family} <i> <row> <col> <value>"))?;
                        let i = index(tokens[2], n, line)?;
                        let row = index(tokens[3], block.carrier, line)?;
                        let col = index(tokens[4], block.carrier, line)?;
                        let v = scalar(f, tokens[5], line)?;
                        let (tag, matrices) = match family {
                            "lsucc" => (0u8, &mut block.l_succ),
                            "rsucc" => (1, &mut block.r_succ),
                            "lprec" => (2, &mut block.l_prec),
                            _ => (3, &mut block.r_prec),
                        };
                        if !seen_rep.insert((tag, i, row, col)) {
                            return err(
                                line,
                                format!("duplicate rep {family} entry ({} {} {})", i + 1, row + 1, col + 1),
                            );
                        }
                        matrices[i].set(row, col, v);
                    }
                    _ => {
                        return err(
                            line,
                            "expected `rep carrier <m>` or `rep lsucc|rsucc|lprec|rprec <i> <row> <col> <value>`",
                        )
                    }
                }
            }
            "report" => {
                if tokens.len() < 2 {
                    return err(line, "expected `report <tokens...>`");
                }
                report.push(tokens[1..].iter().map(|s| s.to_string()).collect());
            }
            other => return err(line, format!("unknown directive `{other}`")),
        }
    }

    let field = field.ok_or(FormatError { line: 0, message: "missing `field` line".to_string() })?;
    let dim = dim.ok_or(FormatError { line: 0, message: "missing `dim` line".to_string() })?;
    Ok(Document {
        field,
        dim,
        basis: basis.unwrap_or_else(|| (1..=dim).map(|i| format!("e{i}")).collect()),
        prec: prec.unwrap_or_else(|| Tensor3::cube(field, dim)),
        succ: succ.unwrap_or_else(|| Tensor3::cube(field, dim)),
        weight,
        tensors,
        matrices,
        forms,
        rep,
        report,
    })
}

fn declared(field: Option<Field>, dim: Option<usize>, line: usize) -> Result<(Field, usize), FormatError> {
    match (field, dim) {
        (Some(f), Some(n)) => Ok((f, n)),
        _ => err(line, "field and dim must be declared before entries"),
    }
}

fn index(token: &str, dim: usize, line: usize) -> Result<usize, FormatError> {
    let i: usize = token
        .parse()
        .map_err(|_| FormatError { line, message: format!("`{token}` is not an index") })?;
    if i == 0 || i > dim {
        return err(line, format!("index {i} out of range 1..={dim}"));
    }
    Ok(i - 1)
}

fn scalar(field: Field, token: &str, line: usize) -> Result<Scalar, FormatError> {
    field.parse(token).map_err(|e| FormatError { line, message: e.to_string() })
}

/// Parses a comma-separated coordinate vector such as `1,0,-1/2`.
pub fn parse_vector(field: Field, dim: usize, text: &str) -> Result<Vec<Scalar>, FormatError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != dim {
        return err(0, format!("expected {dim} comma-separated coordinates, found {}", parts.len()));
    }
    parts.iter().map(|p| scalar(field, p, 0)).collect()
}
