//! JSON document formats for every entity the CLI reads or writes: algebras,
//! modules, groups, extensions, the four certificate kinds, and repdim
//! reports. One tagged top-level `Document` type covers all files, so a
//! single loader can dispatch on the `kind` field. Scalars are stored as
//! decimal integers and reduced mod p on load; loading re-runs the same
//! structural validation as the in-memory constructors, so a deserialized
//! object is exactly as trustworthy as a freshly built one.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::ext::{
    make_extension, Extension, FrobeniusSystem, SeparabilityCert, SplitCert, SummandCert,
};
use crate::group::FiniteGroup;
use crate::linalg::{check_modulus, Fp, Matrix};
use crate::module::Module;
use crate::repdim::{LowerProvenance, RepdimReport};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Document types
// ---------------------------------------------------------------------------

/// Matrix payload; the modulus lives on the enclosing document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub p: u32,
    pub dim: usize,
    /// row i*dim + j holds the coordinates of b_i * b_j
    pub table: Vec<Vec<u64>>,
    pub unit: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub p: u32,
    pub dim: usize,
    /// one dim x dim action matrix per algebra basis element
    pub action: Vec<MatrixDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub order: usize,
    /// flat Cayley table, row-major; identity has index 0
    pub table: Vec<usize>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionDoc {
    pub b: AlgebraDoc,
    pub a: AlgebraDoc,
    pub embed: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCertDoc {
    pub retraction: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparabilityCertDoc {
    pub casimir: Vec<u64>,
    pub pairs: Vec<(Vec<u64>, Vec<u64>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusSystemDoc {
    pub e_map: MatrixDoc,
    pub xs: Vec<Vec<u64>>,
    pub ys: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandCertDoc {
    pub copies: usize,
    pub injection: MatrixDoc,
    pub retraction: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepdimReportDoc {
    pub algebra_dim: usize,
    pub lower: usize,
    pub lower_provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ModuleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_label: Option<String>,
    pub exact: bool,
    pub self_injective: bool,
    pub loewy_length: usize,
    pub candidates_tried: usize,
}

/// Tagged union covering every file the CLI reads or writes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Algebra(AlgebraDoc),
    Module(ModuleDoc),
    Group(GroupDoc),
    Extension(ExtensionDoc),
    SplitCert(SplitCertDoc),
    SeparabilityCert(SeparabilityCertDoc),
    FrobeniusSystem(FrobeniusSystemDoc),
    SummandCert(SummandCertDoc),
    RepdimReport(RepdimReportDoc),
}

// ---------------------------------------------------------------------------
// Scalar and matrix conversions
// ---------------------------------------------------------------------------

fn reduce(v: u64, p: u32) -> Fp {
    (v % u64::from(p)) as Fp
}

fn vec_to_doc(v: &[Fp]) -> Vec<u64> {
    v.iter().map(|&x| u64::from(x)).collect()
}

fn vec_from_doc(v: &[u64], p: u32, field: &str, want: usize) -> Result<Vec<Fp>> {
    if v.len() != want {
        return Err(Error::Parse(format!(
            "field `{field}`: expected {want} entries, found {}",
            v.len()
        )));
    }
    Ok(v.iter().map(|&x| reduce(x, p)).collect())
}

pub fn matrix_to_doc(m: &Matrix) -> MatrixDoc {
    MatrixDoc {
        rows: m.rows,
        cols: m.cols,
        entries: (0..m.rows).map(|r| vec_to_doc(m.row(r))).collect(),
    }
}

pub fn matrix_from_doc(doc: &MatrixDoc, p: u32, field: &str) -> Result<Matrix> {
    if doc.entries.len() != doc.rows {
        return Err(Error::Parse(format!(
            "field `{field}`: {} rows declared, {} present",
            doc.rows,
            doc.entries.len()
        )));
    }
    let mut data = Vec::with_capacity(doc.rows * doc.cols);
    for (r, row) in doc.entries.iter().enumerate() {
        data.extend(vec_from_doc(row, p, &format!("{field}[{r}]"), doc.cols)?);
    }
    Ok(Matrix::from_flat(doc.rows, doc.cols, data, p))
}

// ---------------------------------------------------------------------------
// Entity conversions
// ---------------------------------------------------------------------------

pub fn algebra_to_doc(alg: &Algebra) -> AlgebraDoc {
    AlgebraDoc {
        p: alg.p,
        dim: alg.dim,
        table: alg.table.iter().map(|row| vec_to_doc(row)).collect(),
        unit: vec_to_doc(&alg.unit),
        labels: alg.labels.clone(),
    }
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<Algebra> {
    check_modulus(doc.p)?;
    if doc.table.len() != doc.dim * doc.dim {
        return Err(Error::Parse(format!(
            "field `table`: expected {} rows for dim {}, found {}",
            doc.dim * doc.dim,
            doc.dim,
            doc.table.len()
        )));
    }
    let mut table = Vec::with_capacity(doc.table.len());
    for (i, row) in doc.table.iter().enumerate() {
        table.push(vec_from_doc(row, doc.p, &format!("table[{i}]"), doc.dim)?);
    }
    let unit = vec_from_doc(&doc.unit, doc.p, "unit", doc.dim)?;
    let mut alg = Algebra::new(doc.p, table, unit)?;
    if let Some(labels) = &doc.labels {
        if labels.len() != doc.dim {
            return Err(Error::Parse(format!(
                "field `labels`: expected {} names, found {}",
                doc.dim,
                labels.len()
            )));
        }
        alg.labels = Some(labels.clone());
    }
    let report = alg.validate();
    if !report.is_ok() {
        return Err(Error::Parse(format!(
            "algebra document fails validation: {report:?}"
        )));
    }
    Ok(alg)
}

pub fn module_to_doc(m: &Module) -> ModuleDoc {
    ModuleDoc {
        p: m.p,
        dim: m.dim,
        action: m.action.iter().map(matrix_to_doc).collect(),
    }
}

/// Loads a module document and validates the action against `alg`.
pub fn module_from_doc(alg: &Algebra, doc: &ModuleDoc) -> Result<Module> {
    if doc.p != alg.p {
        return Err(Error::ModulusMismatch(doc.p, alg.p));
    }
    if doc.action.len() != alg.dim {
        return Err(Error::Parse(format!(
            "field `action`: expected {} matrices for an algebra of dim {}, found {}",
            alg.dim,
            alg.dim,
            doc.action.len()
        )));
    }
    let mut action = Vec::with_capacity(doc.action.len());
    for (i, mdoc) in doc.action.iter().enumerate() {
        let m = matrix_from_doc(mdoc, doc.p, &format!("action[{i}]"))?;
        if m.rows != doc.dim || m.cols != doc.dim {
            return Err(Error::Parse(format!(
                "field `action[{i}]`: expected a {0} x {0} matrix, found {1} x {2}",
                doc.dim, m.rows, m.cols
            )));
        }
        action.push(m);
    }
    Module::new(alg, action)
}

pub fn group_to_doc(g: &FiniteGroup) -> GroupDoc {
    GroupDoc {
        order: g.order,
        table: g.table.clone(),
        labels: g.labels.clone(),
    }
}

pub fn group_from_doc(doc: &GroupDoc) -> Result<FiniteGroup> {
    if doc.table.len() != doc.order * doc.order {
        return Err(Error::Parse(format!(
            "field `table`: expected {} entries for order {}, found {}",
            doc.order * doc.order,
            doc.order,
            doc.table.len()
        )));
    }
    let labels = if doc.labels.is_empty() {
        None
    } else if doc.labels.len() == doc.order {
        Some(doc.labels.clone())
    } else {
        return Err(Error::Parse(format!(
            "field `labels`: expected {} names, found {}",
            doc.order,
            doc.labels.len()
        )));
    };
    FiniteGroup::from_table(doc.table.clone(), labels)
}

pub fn extension_to_doc(ext: &Extension) -> ExtensionDoc {
    ExtensionDoc {
        b: algebra_to_doc(&ext.b),
        a: algebra_to_doc(&ext.a),
        embed: matrix_to_doc(&ext.embed),
    }
}

pub fn extension_from_doc(doc: &ExtensionDoc) -> Result<Extension> {
    let b = algebra_from_doc(&doc.b)?;
    let a = algebra_from_doc(&doc.a)?;
    let embed = matrix_from_doc(&doc.embed, a.p, "embed")?;
    make_extension(&b, &a, embed)
}

pub fn split_cert_to_doc(cert: &SplitCert) -> SplitCertDoc {
    SplitCertDoc {
        retraction: matrix_to_doc(&cert.retraction),
    }
}

pub fn split_cert_from_doc(doc: &SplitCertDoc, p: u32) -> Result<SplitCert> {
    Ok(SplitCert {
        retraction: matrix_from_doc(&doc.retraction, p, "retraction")?,
    })
}

pub fn separability_cert_to_doc(cert: &SeparabilityCert) -> SeparabilityCertDoc {
    SeparabilityCertDoc {
        casimir: vec_to_doc(&cert.casimir),
        pairs: cert
            .pairs
            .iter()
            .map(|(x, y)| (vec_to_doc(x), vec_to_doc(y)))
            .collect(),
    }
}

pub fn separability_cert_from_doc(
    doc: &SeparabilityCertDoc,
    p: u32,
    a_dim: usize,
    tensor_dim: usize,
) -> Result<SeparabilityCert> {
    let casimir = vec_from_doc(&doc.casimir, p, "casimir", tensor_dim)?;
    let mut pairs = Vec::with_capacity(doc.pairs.len());
    for (i, (x, y)) in doc.pairs.iter().enumerate() {
        pairs.push((
            vec_from_doc(x, p, &format!("pairs[{i}].0"), a_dim)?,
            vec_from_doc(y, p, &format!("pairs[{i}].1"), a_dim)?,
        ));
    }
    Ok(SeparabilityCert { casimir, pairs })
}

pub fn frobenius_system_to_doc(sys: &FrobeniusSystem) -> FrobeniusSystemDoc {
    FrobeniusSystemDoc {
        e_map: matrix_to_doc(&sys.e_map),
        xs: sys.xs.iter().map(|x| vec_to_doc(x)).collect(),
        ys: sys.ys.iter().map(|y| vec_to_doc(y)).collect(),
    }
}

pub fn frobenius_system_from_doc(
    doc: &FrobeniusSystemDoc,
    p: u32,
    a_dim: usize,
) -> Result<FrobeniusSystem> {
    let e_map = matrix_from_doc(&doc.e_map, p, "e_map")?;
    let xs = doc
        .xs
        .iter()
        .enumerate()
        .map(|(i, x)| vec_from_doc(x, p, &format!("xs[{i}]"), a_dim))
        .collect::<Result<Vec<_>>>()?;
    let ys = doc
        .ys
        .iter()
        .enumerate()
        .map(|(i, y)| vec_from_doc(y, p, &format!("ys[{i}]"), a_dim))
        .collect::<Result<Vec<_>>>()?;
    if xs.len() != ys.len() {
        return Err(Error::Parse(format!(
            "field `ys`: expected {} vectors to match `xs`, found {}",
            xs.len(),
            ys.len()
        )));
    }
    Ok(FrobeniusSystem { e_map, xs, ys })
}

pub fn summand_cert_to_doc(cert: &SummandCert) -> SummandCertDoc {
    SummandCertDoc {
        copies: cert.copies,
        injection: matrix_to_doc(&cert.injection),
        retraction: matrix_to_doc(&cert.retraction),
    }
}

pub fn summand_cert_from_doc(doc: &SummandCertDoc, p: u32) -> Result<SummandCert> {
    Ok(SummandCert {
        copies: doc.copies,
        injection: matrix_from_doc(&doc.injection, p, "injection")?,
        retraction: matrix_from_doc(&doc.retraction, p, "retraction")?,
    })
}

fn provenance_name(p: &LowerProvenance) -> &'static str {
    match p {
        LowerProvenance::Semisimple => "semisimple",
        LowerProvenance::NoRepdimOne => "no-repdim-one",
        LowerProvenance::HigmanRepInfinite => "higman-rep-infinite",
        LowerProvenance::UserAssertion => "user-assertion",
    }
}

fn provenance_from_name(name: &str) -> Result<LowerProvenance> {
    match name {
        "semisimple" => Ok(LowerProvenance::Semisimple),
        "no-repdim-one" => Ok(LowerProvenance::NoRepdimOne),
        "higman-rep-infinite" => Ok(LowerProvenance::HigmanRepInfinite),
        "user-assertion" => Ok(LowerProvenance::UserAssertion),
        other => Err(Error::Parse(format!(
            "field `lower_provenance`: unknown value `{other}`"
        ))),
    }
}

pub fn repdim_report_to_doc(report: &RepdimReport) -> RepdimReportDoc {
    RepdimReportDoc {
        algebra_dim: report.algebra_dim,
        lower: report.lower,
        lower_provenance: provenance_name(&report.lower_provenance).to_string(),
        upper: report.upper,
        witness: report.witness.as_ref().map(module_to_doc),
        witness_label: report.witness_label.clone(),
        exact: report.exact,
        self_injective: report.self_injective,
        loewy_length: report.loewy_length,
        candidates_tried: report.candidates_tried,
    }
}

/// Rebuilds a report; the witness is re-validated against `alg`.
pub fn repdim_report_from_doc(alg: &Algebra, doc: &RepdimReportDoc) -> Result<RepdimReport> {
    let witness = doc
        .witness
        .as_ref()
        .map(|w| module_from_doc(alg, w))
        .transpose()?;
    Ok(RepdimReport {
        algebra_dim: doc.algebra_dim,
        lower: doc.lower,
        lower_provenance: provenance_from_name(&doc.lower_provenance)?,
        upper: doc.upper,
        witness,
        witness_label: doc.witness_label.clone(),
        exact: doc.exact,
        self_injective: doc.self_injective,
        loewy_length: doc.loewy_length,
        candidates_tried: doc.candidates_tried,
    })
}

// ---------------------------------------------------------------------------
// Text and file I/O
// ---------------------------------------------------------------------------

/// Deterministic pretty-printed JSON: identical documents serialize to
/// identical bytes (struct field order is fixed by the type definitions).
pub fn to_json(doc: &Document) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serialization is infallible");
    out.push('\n');
    out
}

/// Parses a document, mapping serde errors to `Error::Parse` with the line
/// and column of the offending token.
pub fn from_json(text: &str) -> Result<Document> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

pub fn read_document(path: &std::path::Path) -> Result<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_document(path: &std::path::Path, doc: &Document) -> Result<()> {
    std::fs::write(path, to_json(doc))
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}
