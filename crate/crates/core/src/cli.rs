//! Command dispatch for `quiver-tt`. Every command reads one `.quiver` file
//! (two or more for `compare-points`) and prints a JSON report.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::complex::{BoundedComplex, GradedDims};
use crate::dsl::{parse_quiver, QuiverSpec};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Vector};
use crate::quiver::{compatibility, PathAlgebra, Quiver};
use crate::reconstruct::{assemble_a, center_and_z, rational_points};
use crate::rep::{unit_filtration, RepMorphism, Representation};
use crate::spectrum::{ideal_of, presheaf_sections, sheaf_sections, spc, IdealDescriptor, SectionAlgebra};

pub const SCHEMA: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "quiver-tt", version, about = "Prime spectra and reconstruction for quivers with tensor relations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Purpose {
    Algebra,
    Spectrum,
    Sheaf,
    Presheaf,
    Support,
    Reconstruct,
    Filtration,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a file and build its path algebra.
    Validate {
        file: PathBuf,
        /// Also require what the named command needs.
        #[arg(long = "for", value_enum, default_value = "algebra")]
        purpose: Purpose,
    },
    /// Points of the spectrum and the discreteness certificate.
    Spectrum { file: PathBuf },
    /// Sections of the structure sheaf over an open set.
    Sheaf {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        open: Vec<String>,
    },
    /// Sections of `W ↦ End(U_W)` over an open set.
    Presheaf {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        open: Vec<String>,
    },
    /// Support and cohomology of a complex given as JSON.
    Support {
        file: PathBuf,
        #[arg(long)]
        complex: PathBuf,
    },
    /// Assemble `A(D(Q))` and compare it with the path algebra.
    Reconstruct { file: PathBuf },
    /// Decide whether the relations are tensor relations.
    CheckTensor { file: PathBuf },
    /// The filtration of the unit along the admissible order.
    Filtration { file: PathBuf },
    /// Compatibility of a full subquiver with the relations.
    Compat {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        verts: Vec<String>,
    },
    /// Compare the spectra and presheaves of several quivers.
    ComparePoints {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
    },
}

/// A finished command: the JSON document and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

impl Outcome {
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("values serialize")
    }
}

/// 1 for refusals on mathematical grounds, 2 for malformed input.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotTensor { .. }
        | Error::Incompatible { .. }
        | Error::NotProper
        | Error::Inconsistent { .. } => 1,
        _ => 2,
    }
}

pub fn error_report(command: &str, e: &Error) -> Value {
    let mut detail = json!({ "kind": kind(e), "message": e.to_string() });
    match e {
        Error::Parse { line, col, .. } => {
            detail["line"] = json!(line);
            detail["col"] = json!(col);
        }
        Error::NotTensor { generator, test } => {
            detail["generator"] = json!(generator);
            detail["test"] = json!(test.to_string());
        }
        Error::Incompatible { intersection, reduced } => {
            detail["intersection"] = json!(intersection);
            detail["reduced"] = json!(reduced);
        }
        _ => {}
    }
    json!({ "schema": SCHEMA, "command": command, "ok": false, "error": detail })
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::NotOrdered { .. } => "not_ordered",
        Error::UnknownVertex(_) => "unknown_vertex",
        Error::UnknownArrow(_) => "unknown_arrow",
        Error::Duplicate(_) => "duplicate",
        Error::NotComposable(_) => "not_composable",
        Error::NotHomogeneous(_) => "not_homogeneous",
        Error::TrivialPathInRelation(_) => "trivial_path",
        Error::QuiverMismatch => "quiver_mismatch",
        Error::NotStable(_) => "not_stable",
        Error::NotChainMap(_) => "not_chain_map",
        Error::NotComplex(_) => "not_complex",
        Error::RelationViolated(_) => "relation_violated",
        Error::NotTensor { .. } => "not_tensor",
        Error::Incompatible { .. } => "incompatible",
        Error::NotProper => "not_proper",
        Error::NotQuiverMorphism(_) => "not_quiver_morphism",
        Error::Inconsistent { .. } => "inconsistent",
        Error::Parse { .. } => "parse",
        Error::Invalid(_) => "invalid",
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Spectrum { .. } => "spectrum",
            Command::Sheaf { .. } => "sheaf",
            Command::Presheaf { .. } => "presheaf",
            Command::Support { .. } => "support",
            Command::Reconstruct { .. } => "reconstruct",
            Command::CheckTensor { .. } => "check-tensor",
            Command::Filtration { .. } => "filtration",
            Command::Compat { .. } => "compat",
            Command::ComparePoints { .. } => "compare-points",
        }
    }
}

/// Parses `args` (without the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("quiver-tt")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => run_command(&cli.command),
        Err(e) => Outcome {
            report: json!({
                "schema": SCHEMA,
                "ok": false,
                "error": { "kind": "usage", "message": e.to_string() },
            }),
            code: 2,
        },
    }
}

pub fn run_command(cmd: &Command) -> Outcome {
    match dispatch(cmd) {
        Ok(mut report) => {
            report["schema"] = json!(SCHEMA);
            report["command"] = json!(cmd.name());
            report["ok"] = json!(true);
            Outcome { report, code: 0 }
        }
        Err(e) => Outcome {
            report: error_report(cmd.name(), &e),
            code: exit_code(&e),
        },
    }
}

fn dispatch(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Validate { file, purpose } => validate(&load(file)?, *purpose),
        Command::Spectrum { file } => spectrum(&load(file)?),
        Command::Sheaf { file, open } => sections(&load(file)?, open, false),
        Command::Presheaf { file, open } => sections(&load(file)?, open, true),
        Command::Support { file, complex } => support(&load(file)?, complex),
        Command::Reconstruct { file } => reconstruct(&load(file)?),
        Command::CheckTensor { file } => check_tensor(&load(file)?),
        Command::Filtration { file } => filtration(&load(file)?),
        Command::Compat { file, verts } => compat(&load(file)?, verts),
        Command::ComparePoints { files } => {
            let loaded = files.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
            compare_points(&loaded)
        }
    }
}

/// A parsed file together with its algebra.
pub struct Loaded {
    pub spec: QuiverSpec,
    pub algebra: PathAlgebra,
}

impl Loaded {
    pub fn from_text(text: &str) -> Result<Loaded> {
        let spec = parse_quiver(text)?;
        let algebra = spec.algebra()?;
        Ok(Loaded { spec, algebra })
    }

    fn header(&self) -> Value {
        let q = self.algebra.quiver();
        json!({
            "name": self.spec.name,
            "field": self.spec.field.to_string(),
            "vertices": q.vertices(),
        })
    }
}

fn load(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read `{}`: {e}", path.display())))?;
    Loaded::from_text(&text)
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| json!(x.to_string())).collect())
}

fn matrix(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| scalars(r)).collect())
}

fn labels(q: &Quiver, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| q.vertex_label(v).to_string()).collect()
}

fn graded(g: &GradedDims) -> Value {
    Value::Object(g.iter().map(|(d, n)| (d.to_string(), json!(n))).collect())
}

fn ideal(q: &Quiver, i: &IdealDescriptor) -> Value {
    json!({ "support_bound": labels(q, i.bound().iter().copied()) })
}

/// Sparse form of an element: basis label to coefficient.
fn element(basis: &[String], v: &[Scalar]) -> Value {
    Value::Object(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (basis[k].clone(), json!(c.to_string())))
            .collect(),
    )
}

fn products(basis: &[String], table: &[Vec<Vector>]) -> Value {
    let mut out = Vec::new();
    for (i, row) in table.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if v.iter().any(|c| !c.is_zero()) {
                out.push(json!({ "left": basis[i], "right": basis[j], "product": element(basis, v) }));
            }
        }
    }
    Value::Array(out)
}

fn needs_tensor(p: Purpose) -> bool {
    p != Purpose::Algebra
}

fn validate(l: &Loaded, purpose: Purpose) -> Result<Value> {
    let check = l.algebra.tensor_check();
    if needs_tensor(purpose) {
        l.algebra.require_tensor()?;
    }
    let mut out = l.header();
    out["arrows"] = json!(l.spec.arrows.len());
    out["relations"] = json!(l.spec.relations.iter().map(|r| r.pretty()).collect::<Vec<_>>());
    out["algebra_dim"] = json!(l.algebra.dim());
    out["tensor"] = json!(check.is_tensor);
    out["purpose"] = json!(format!("{purpose:?}").to_lowercase());
    Ok(out)
}

fn spectrum(l: &Loaded) -> Result<Value> {
    let report = spc(&l.algebra)?;
    let q = l.algebra.quiver();
    let points: Vec<Value> = report
        .points
        .iter()
        .map(|p| {
            json!({
                "vertex": p.label,
                "prime": ideal(q, &p.prime),
                "open": report.open_singletons[p.vertex],
            })
        })
        .collect();
    let mut out = l.header();
    out["points"] = Value::Array(points);
    out["count"] = json!(report.len());
    out["discrete"] = json!(report.is_discrete());
    Ok(out)
}

fn resolve_vertices(q: &Quiver, names: &[String]) -> Result<Vec<usize>> {
    names
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| q.vertex_index(s.trim()))
        .collect()
}

fn section_report(q: &Quiver, s: &SectionAlgebra) -> Value {
    json!({
        "open": labels(q, s.open.iter().copied()),
        "dim": s.dim(),
        "basis": s.basis,
        "values": matrix(&s.values),
        "products": products(&s.basis, &s.table),
        "commutative": s.is_commutative(),
        "componentwise": s.is_componentwise(),
    })
}

fn sections(l: &Loaded, open: &[String], presheaf: bool) -> Result<Value> {
    l.algebra.require_tensor()?;
    let q = l.algebra.quiver();
    let w = resolve_vertices(q, open)?;
    let s = if presheaf {
        presheaf_sections(&l.algebra, &w)?
    } else {
        sheaf_sections(&l.algebra, &w)?
    };
    let mut out = l.header();
    out["sections"] = section_report(q, &s);
    if presheaf {
        let sub = q.full_subquiver(&s.open)?;
        out["components"] = json!(sub.quiver.component_count());
    }
    Ok(out)
}

fn reconstruct(l: &Loaded) -> Result<Value> {
    let alg = &l.algebra;
    let q = alg.quiver();
    let a = assemble_a(alg)?;
    let points = rational_points(alg)?;
    let center = center_and_z(alg, &a)?;
    let blocks: Vec<Value> = a
        .blocks
        .iter()
        .map(|b| {
            json!({
                "from": q.vertex_label(b.n),
                "to": q.vertex_label(b.m),
                "paths": b.paths,
                "module_maps": b.module_maps,
            })
        })
        .collect();
    let mut out = l.header();
    out["dim"] = json!(a.dim());
    out["basis"] = json!(a.labels);
    out["blocks"] = Value::Array(blocks);
    out["round_trip"] = json!(a.round_trip);
    out["isomorphic"] = json!(a.isomorphic);
    out["associative"] = json!(a.is_associative());
    out["unital"] = json!(a.is_unital());
    out["points"] = json!({
        "count": points.points.len(),
        "pattern": points.pattern,
        "certified": points.certified(),
    });
    out["center"] = json!({
        "dim": center.dim(),
        "components": center.components,
        "basis": center.center.iter().map(|z| element(&a.labels, z)).collect::<Vec<_>>(),
        "z_certified": center.certified(),
    });
    Ok(out)
}

fn check_tensor(l: &Loaded) -> Result<Value> {
    let check = l.algebra.tensor_check();
    let mut out = l.header();
    out["tensor"] = json!(check.is_tensor);
    out["witness"] = match check.witness {
        Some(w) => json!({ "relation": w.display, "index": w.relation, "test": w.test.to_string() }),
        None => Value::Null,
    };
    Ok(out)
}

fn filtration(l: &Loaded) -> Result<Value> {
    l.algebra.require_tensor()?;
    let q = l.algebra.quiver();
    let f = unit_filtration(&l.algebra)?;
    let steps: Vec<Value> = f
        .steps
        .iter()
        .map(|s| {
            json!({
                "vertex": q.vertex_label(s.vertex),
                "dims": s.k.dims(),
                "extended_unit": s.is_extended_unit,
                "satisfies_relations": s.satisfies_relations,
                "suffix_compatible": s.suffix_compatible,
                "quotient_is_simple": s.quotient_iso.is_some(),
            })
        })
        .collect();
    let mut out = l.header();
    out["order"] = json!(labels(q, f.order.iter().copied()));
    out["steps"] = Value::Array(steps);
    out["certified"] = json!(f.certified());
    Ok(out)
}

fn compat(l: &Loaded, verts: &[String]) -> Result<Value> {
    let q = l.algebra.quiver();
    let w = resolve_vertices(q, verts)?;
    let c = compatibility(q, l.algebra.field(), l.algebra.relations(), &w)?;
    let mut sorted = w.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = l.header();
    out["verts"] = json!(labels(q, sorted));
    out["compatible"] = json!(c.compatible);
    out["intersection"] = json!(c.intersection_display());
    out["reduced"] = json!(c.reduced_display());
    Ok(out)
}

/// Spectra compared as spaces, presheaves compared on every open set under
/// the bijection that matches points in vertex order.
fn compare_points(files: &[Loaded]) -> Result<Value> {
    let mut summaries = Vec::new();
    let mut reports = Vec::new();
    for l in files {
        let r = spc(&l.algebra)?;
        summaries.push(json!({
            "name": l.spec.name,
            "count": r.len(),
            "discrete": r.is_discrete(),
        }));
        reports.push(r);
    }
    let n = reports[0].len();
    let homeomorphic = reports.iter().all(|r| r.len() == n && r.is_discrete());
    let mut presheaves = homeomorphic;
    if homeomorphic && n <= 12 {
        for mask in 1u32..(1 << n) {
            let w: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
            let first = presheaf_or_none(&files[0].algebra, &w)?;
            for l in &files[1..] {
                let other = presheaf_or_none(&l.algebra, &w)?;
                presheaves &= match (&first, &other) {
                    (Some(a), Some(b)) => a.same_structure(b),
                    (None, None) => true,
                    _ => false,
                };
            }
        }
    }
    let sheaves = homeomorphic
        && files.iter().all(|l| {
            sheaf_sections(&l.algebra, &(0..n).collect::<Vec<_>>())
                .map(|s| s.dim() == n && s.is_componentwise())
                .unwrap_or(false)
        });
    Ok(json!({
        "files": summaries,
        "homeomorphic": homeomorphic,
        "sheaves_isomorphic": sheaves,
        "presheaves_isomorphic": presheaves && n <= 12,
    }))
}

fn presheaf_or_none(alg: &PathAlgebra, w: &[usize]) -> Result<Option<SectionAlgebra>> {
    match presheaf_sections(alg, w) {
        Ok(s) => Ok(Some(s)),
        Err(Error::Incompatible { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// A scalar written as a JSON number or string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    fn read(&self, field: Field) -> Result<Scalar> {
        match self {
            ScalarText::Int(n) => Ok(field.from_i64(*n)),
            ScalarText::Text(s) => field.parse(s),
        }
    }
}

type MatrixText = Vec<Vec<ScalarText>>;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermText {
    /// Vertex label to dimension; missing vertices are zero.
    pub dims: BTreeMap<String, usize>,
    /// Arrow label to matrix (rows); missing arrows are zero.
    #[serde(default)]
    pub maps: BTreeMap<String, MatrixText>,
}

/// A bounded complex in the `support --complex` input format.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexText {
    pub start: i32,
    pub terms: Vec<TermText>,
    /// One map per consecutive pair of terms, vertex label to matrix.
    #[serde(default)]
    pub differentials: Vec<BTreeMap<String, MatrixText>>,
}

fn read_matrix(field: Field, rows: usize, cols: usize, text: Option<&MatrixText>, what: &str) -> Result<Matrix> {
    let Some(text) = text else {
        return Ok(Matrix::zeros(field, rows, cols));
    };
    if text.len() != rows || text.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("{what} must be {rows}x{cols}")));
    }
    let entries = text
        .iter()
        .map(|r| r.iter().map(|x| x.read(field)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, entries)
}

impl ComplexText {
    pub fn build(&self, q: Arc<Quiver>, field: Field) -> Result<BoundedComplex> {
        let mut terms = Vec::new();
        for t in &self.terms {
            let mut dims = vec![0; q.vertex_count()];
            for (label, &d) in &t.dims {
                dims[q.vertex_index(label)?] = d;
            }
            for label in t.maps.keys() {
                q.arrow_index(label)?;
            }
            let maps = q
                .arrows()
                .iter()
                .map(|a| {
                    read_matrix(field, dims[a.target], dims[a.source], t.maps.get(&a.label), &format!("map of `{}`", a.label))
                })
                .collect::<Result<Vec<_>>>()?;
            terms.push(Representation::new(Arc::clone(&q), field, dims, maps)?);
        }
        let expected = self.terms.len().saturating_sub(1);
        if self.differentials.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "{} terms need {expected} differentials",
                self.terms.len()
            )));
        }
        let mut diffs = Vec::new();
        for (i, d) in self.differentials.iter().enumerate() {
            for label in d.keys() {
                q.vertex_index(label)?;
            }
            let components = (0..q.vertex_count())
                .map(|v| {
                    let label = q.vertex_label(v);
                    read_matrix(field, terms[i + 1].dim(v), terms[i].dim(v), d.get(label), &format!("differential at `{label}`"))
                })
                .collect::<Result<Vec<_>>>()?;
            diffs.push(RepMorphism { components });
        }
        BoundedComplex::new(q, field, self.start, terms, diffs)
    }
}

pub fn parse_complex(text: &str, alg: &PathAlgebra) -> Result<BoundedComplex> {
    let parsed: ComplexText = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    let c = parsed.build(alg.quiver_arc(), alg.field())?;
    for (k, r) in alg.relations().iter().enumerate() {
        for i in c.degrees() {
            if let Some(t) = c.term(i) {
                if !t.relation_matrix(r).is_zero() {
                    return Err(Error::RelationViolated(format!(
                        "term {i} violates relation {k}: {}",
                        r.display(alg.quiver())
                    )));
                }
            }
        }
    }
    Ok(c)
}

fn support(l: &Loaded, complex: &Path) -> Result<Value> {
    l.algebra.require_tensor()?;
    let text = std::fs::read_to_string(complex)
        .map_err(|e| Error::Invalid(format!("cannot read `{}`: {e}", complex.display())))?;
    let c = parse_complex(&text, &l.algebra)?;
    let q = l.algebra.quiver();
    let report = spc(&l.algebra)?;
    let supp: BTreeSet<usize> = c.support();
    let cohomology: serde_json::Map<String, Value> = (0..q.vertex_count())
        .map(|v| (q.vertex_label(v).to_string(), graded(&c.cohomology_at(v))))
        .collect();
    let closed = report.closed_set(std::slice::from_ref(&c));
    let mut out = l.header();
    out["support"] = json!(labels(q, supp.iter().copied()));
    out["cohomology"] = Value::Object(cohomology);
    out["acyclic"] = json!(c.is_acyclic());
    out["ideal"] = ideal(q, &ideal_of(q, std::slice::from_ref(&c)));
    out["in_primes"] = json!(labels(q, report.open_of(&c)));
    out["closed_set_agrees"] = json!(closed.agrees());
    Ok(out)
}
