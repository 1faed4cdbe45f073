//! JSON fixture files: schema, canonical serialization and resolution into
//! validated engine objects.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use coring_lab_core::algebra::{check_algebra, check_module, Action, Algebra, Bimodule, Subalgebra};
use coring_lab_core::coring::{
    check_comodule, check_comodule_map, check_coring, coaction_from_grouplike, is_grouplike, sweedler_coring, Comodule,
    Coring,
};
use coring_lab_core::galois::{coaction_from_can, comatrix_coring, ComatrixData};
use coring_lab_core::linalg::{format_rational, parse_rational, ExactMatrix, Vector};

/// Rows of rational strings.
pub type MatrixSpec = Vec<Vec<String>>;
pub type VectorSpec = Vec<String>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureFile {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subalgebras: BTreeMap<String, SubalgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bimodules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub corings: BTreeMap<String, CoringSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub grouplikes: BTreeMap<String, GrouplikeSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub comodules: BTreeMap<String, ComoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorphismSpec>,
}

/// `products[i * dim + j]` is `e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub products: Vec<VectorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<VectorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraSpec {
    pub algebra: String,
    /// Spanning vectors in the ambient algebra.
    pub basis: Vec<VectorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    /// An algebra or subalgebra name.
    pub algebra: String,
    pub matrices: Vec<MatrixSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<ActionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<ActionSpec>,
}

/// Either explicit (`carrier`, `delta`, `epsilon`) or built from a
/// `sweedler` subalgebra or a `comatrix` bimodule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoringSpec {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweedler: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comatrix: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrouplikeSpec {
    pub coring: String,
    pub element: VectorSpec,
}

/// Explicit (`carrier`, `coaction`), `cofree`, induced by a `grouplike`, or
/// the `tautological` coaction of the bimodule behind a comatrix coring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleSpec {
    pub coring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub cofree: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grouplike: Option<String>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub tautological: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub source: String,
    pub target: String,
    pub matrix: MatrixSpec,
}

/// Object sets for `report`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportConfig {
    pub sigma: String,
    #[serde(default)]
    pub comodules: Vec<String>,
    #[serde(default)]
    pub bmodules: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Issue {
    pub location: String,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadError {
    pub issues: Vec<Issue>,
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.issues.iter().map(Issue::to_string).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

impl std::error::Error for LoadError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Lenient,
}

pub fn vector_spec(v: &[coring_lab_core::linalg::Rational]) -> VectorSpec {
    v.iter().map(format_rational).collect()
}

pub fn matrix_spec(m: &ExactMatrix) -> MatrixSpec {
    (0..m.rows()).map(|r| vector_spec(m.row(r))).collect()
}

fn parse_vector(v: &[String], len: usize, loc: &str) -> Result<Vector, Issue> {
    if v.len() != len {
        return Err(issue(loc, format!("expected {len} entries, found {}", v.len())));
    }
    v.iter()
        .map(|s| parse_rational(s).map_err(|e| issue(loc, e.to_string())))
        .collect()
}

fn parse_matrix(m: &MatrixSpec, rows: usize, cols: usize, loc: &str) -> Result<ExactMatrix, Issue> {
    if m.len() != rows {
        return Err(issue(loc, format!("expected a {rows}x{cols} matrix, found {} rows", m.len())));
    }
    let mut out = ExactMatrix::zeros(rows, cols);
    for (r, row) in m.iter().enumerate() {
        let parsed = parse_vector(row, cols, &format!("{loc}[{r}]"))?;
        for (c, x) in parsed.into_iter().enumerate() {
            out.set(r, c, x);
        }
    }
    Ok(out)
}

fn issue(loc: &str, message: impl Into<String>) -> Issue {
    Issue { location: loc.to_string(), message: message.into() }
}

fn normalize_vector(v: &mut VectorSpec) {
    for s in v.iter_mut() {
        if let Ok(q) = parse_rational(s) {
            *s = format_rational(&q);
        }
    }
}

fn normalize_matrix(m: &mut MatrixSpec) {
    m.iter_mut().for_each(normalize_vector);
}

impl FixtureFile {
    pub fn parse(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text).map_err(|e| LoadError { issues: vec![issue("<file>", format!("parse error: {e}"))] })
    }

    /// Rationals rewritten in lowest terms; maps are already ordered.
    pub fn canonicalize(&self) -> Self {
        let mut f = self.clone();
        for a in f.algebras.values_mut() {
            a.products.iter_mut().for_each(normalize_vector);
            if let Some(u) = &mut a.unit {
                normalize_vector(u);
            }
        }
        for s in f.subalgebras.values_mut() {
            s.basis.iter_mut().for_each(normalize_vector);
        }
        for m in f.modules.values_mut().chain(f.bimodules.values_mut()) {
            for a in m.left.iter_mut().chain(m.right.iter_mut()) {
                a.matrices.iter_mut().for_each(normalize_matrix);
            }
        }
        for c in f.corings.values_mut() {
            c.delta.iter_mut().chain(c.epsilon.iter_mut()).for_each(normalize_matrix);
        }
        for g in f.grouplikes.values_mut() {
            normalize_vector(&mut g.element);
        }
        for c in f.comodules.values_mut() {
            c.coaction.iter_mut().for_each(normalize_matrix);
        }
        for m in f.morphisms.values_mut() {
            normalize_matrix(&mut m.matrix);
        }
        f
    }

    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.canonicalize()).expect("fixture serializes");
        s.push('\n');
        s
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

#[derive(Clone, Debug)]
pub struct Grouplike {
    pub coring: String,
    pub element: Vector,
}

#[derive(Clone, Debug)]
pub struct Morphism {
    pub source: String,
    pub target: String,
    pub map: ExactMatrix,
}

/// A fully resolved fixture. Modules and bimodules share one namespace.
#[derive(Clone, Debug, Default)]
pub struct Fixture {
    pub algebras: BTreeMap<String, Arc<Algebra>>,
    pub subalgebras: BTreeMap<String, Subalgebra>,
    pub modules: BTreeMap<String, Bimodule>,
    pub corings: BTreeMap<String, Arc<Coring>>,
    pub comatrix: BTreeMap<String, ComatrixData>,
    pub grouplikes: BTreeMap<String, Grouplike>,
    pub comodules: BTreeMap<String, Comodule>,
    pub morphisms: BTreeMap<String, Morphism>,
    pub warnings: Vec<Issue>,
    pub digest: String,
}

impl Fixture {
    pub fn comodule(&self, name: &str) -> Result<&Comodule, Issue> {
        self.comodules.get(name).ok_or_else(|| issue(name, "unresolved comodule reference"))
    }

    pub fn module(&self, name: &str) -> Result<&Bimodule, Issue> {
        self.modules.get(name).ok_or_else(|| issue(name, "unresolved module reference"))
    }

    pub fn coring(&self, name: &str) -> Result<&Arc<Coring>, Issue> {
        self.corings.get(name).ok_or_else(|| issue(name, "unresolved coring reference"))
    }

    pub fn morphism(&self, name: &str) -> Result<&Morphism, Issue> {
        self.morphisms.get(name).ok_or_else(|| issue(name, "unresolved morphism reference"))
    }
}

struct Loader<'a> {
    file: &'a FixtureFile,
    mode: Mode,
    out: Fixture,
    errors: Vec<Issue>,
}

fn axiom_summary(report: &coring_lab_core::axioms::AxiomReport) -> String {
    report
        .failures()
        .map(|c| match &c.witness {
            Some(w) => format!("{} ({w})", c.name),
            None => c.name.clone(),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

impl Loader<'_> {
    fn axiom(&mut self, loc: String, failure: Option<String>) {
        if let Some(message) = failure {
            let i = issue(&loc, format!("axiom failure: {message}"));
            match self.mode {
                Mode::Strict => self.errors.push(i),
                Mode::Lenient => self.out.warnings.push(i),
            }
        }
    }

    fn report(&mut self, loc: String, report: &coring_lab_core::axioms::AxiomReport) {
        let failure = (!report.passed()).then(|| axiom_summary(report));
        self.axiom(loc, failure);
    }

    /// Looks up a name, distinguishing undeclared names from declared ones that failed to load.
    fn missing(&self, loc: &str, kind: &str, name: &str, declared: bool) -> Issue {
        if declared {
            issue(loc, format!("depends on invalid {kind} '{name}'"))
        } else {
            issue(loc, format!("unresolved {kind} reference '{name}'"))
        }
    }

    fn acting_algebra(&self, loc: &str, name: &str) -> Result<Arc<Algebra>, Issue> {
        if let Some(a) = self.out.algebras.get(name) {
            return Ok(a.clone());
        }
        if let Some(s) = self.out.subalgebras.get(name) {
            return Ok(s.algebra.clone());
        }
        let declared = self.file.algebras.contains_key(name) || self.file.subalgebras.contains_key(name);
        Err(self.missing(loc, "algebra", name, declared))
    }

    fn algebras(&mut self) {
        for (name, spec) in &self.file.algebras {
            let loc = format!("algebras.{name}");
            let built = (|| {
                let n = spec.dim;
                if spec.products.len() != n * n {
                    return Err(issue(&loc, format!("expected {} products, found {}", n * n, spec.products.len())));
                }
                let mut structure = Vec::with_capacity(n * n * n);
                for (k, p) in spec.products.iter().enumerate() {
                    structure.extend(parse_vector(p, n, &format!("{loc}.products[{k}]"))?);
                }
                let unit = spec.unit.as_ref().map(|u| parse_vector(u, n, &format!("{loc}.unit"))).transpose()?;
                Algebra::new(n, structure, unit).map_err(|e| issue(&loc, e.to_string()))
            })();
            match built {
                Ok(a) => {
                    self.report(loc, &check_algebra(&a));
                    self.out.algebras.insert(name.clone(), Arc::new(a));
                }
                Err(e) => self.errors.push(e),
            }
        }
    }

    fn subalgebras(&mut self) {
        for (name, spec) in &self.file.subalgebras {
            let loc = format!("subalgebras.{name}");
            let built = (|| {
                let ambient = self
                    .out
                    .algebras
                    .get(&spec.algebra)
                    .cloned()
                    .ok_or_else(|| self.missing(&loc, "algebra", &spec.algebra, self.file.algebras.contains_key(&spec.algebra)))?;
                let cols = spec
                    .basis
                    .iter()
                    .enumerate()
                    .map(|(k, v)| parse_vector(v, ambient.dim(), &format!("{loc}.basis[{k}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                let gens = ExactMatrix::from_columns(ambient.dim(), &cols);
                Subalgebra::new(ambient, &gens).map_err(|e| issue(&loc, e.to_string()))
            })();
            match built {
                Ok(s) => {
                    self.out.subalgebras.insert(name.clone(), s);
                }
                Err(e) => self.errors.push(e),
            }
        }
    }

    fn action(&self, loc: &str, spec: &ActionSpec, dim: usize) -> Result<Action, Issue> {
        let alg = self.acting_algebra(loc, &spec.algebra)?;
        if spec.matrices.len() != alg.dim() {
            return Err(issue(loc, format!("expected {} action matrices, found {}", alg.dim(), spec.matrices.len())));
        }
        let mats = spec
            .matrices
            .iter()
            .enumerate()
            .map(|(k, m)| parse_matrix(m, dim, dim, &format!("{loc}.matrices[{k}]")))
            .collect::<Result<Vec<_>, _>>()?;
        Action::new(alg, mats).map_err(|e| issue(loc, e.to_string()))
    }

    fn modules(&mut self) {
        let entries: Vec<(String, &ModuleSpec)> = self
            .file
            .modules
            .iter()
            .map(|(n, s)| (format!("modules.{n}"), s))
            .chain(self.file.bimodules.iter().map(|(n, s)| (format!("bimodules.{n}"), s)))
            .collect();
        let names: Vec<&String> = self.file.modules.keys().chain(self.file.bimodules.keys()).collect();
        for ((loc, spec), name) in entries.into_iter().zip(names) {
            if self.out.modules.contains_key(name) {
                self.errors.push(issue(&loc, format!("name '{name}' is declared as both module and bimodule")));
                continue;
            }
            let built = (|| {
                let left = spec.left.as_ref().map(|a| self.action(&format!("{loc}.left"), a, spec.dim)).transpose()?;
                let right = spec.right.as_ref().map(|a| self.action(&format!("{loc}.right"), a, spec.dim)).transpose()?;
                Bimodule::new(spec.dim, left, right).map_err(|e| issue(&loc, e.to_string()))
            })();
            match built {
                Ok(m) => {
                    self.report(loc, &check_module(&m));
                    self.out.modules.insert(name.clone(), m);
                }
                Err(e) => self.errors.push(e),
            }
        }
    }

    fn module_declared(&self, name: &str) -> bool {
        self.file.modules.contains_key(name) || self.file.bimodules.contains_key(name)
    }

    fn get_module(&self, loc: &str, name: &str) -> Result<Bimodule, Issue> {
        self.out
            .modules
            .get(name)
            .cloned()
            .ok_or_else(|| self.missing(loc, "module", name, self.module_declared(name)))
    }

    fn corings(&mut self) {
        for (name, spec) in &self.file.corings {
            let loc = format!("corings.{name}");
            let built = (|| -> Result<(Coring, Option<ComatrixData>), Issue> {
                let alg = self
                    .out
                    .algebras
                    .get(&spec.algebra)
                    .cloned()
                    .ok_or_else(|| self.missing(&loc, "algebra", &spec.algebra, self.file.algebras.contains_key(&spec.algebra)))?;
                let explicit = spec.carrier.is_some() || spec.delta.is_some() || spec.epsilon.is_some();
                let kinds = [explicit, spec.sweedler.is_some(), spec.comatrix.is_some()];
                if kinds.iter().filter(|&&k| k).count() != 1 {
                    return Err(issue(&loc, "give exactly one of carrier/delta/epsilon, sweedler or comatrix"));
                }
                let (coring, data) = if let Some(sub) = &spec.sweedler {
                    let s = self
                        .out
                        .subalgebras
                        .get(sub)
                        .ok_or_else(|| self.missing(&loc, "subalgebra", sub, self.file.subalgebras.contains_key(sub)))?;
                    (sweedler_coring(s).map_err(|e| issue(&loc, e.to_string()))?, None)
                } else if let Some(sigma) = &spec.comatrix {
                    let s = self.get_module(&loc, sigma)?;
                    let data = comatrix_coring(&s).map_err(|e| issue(&loc, e.to_string()))?;
                    ((*data.coring).clone(), Some(data))
                } else {
                    let carrier_name = spec.carrier.as_ref().ok_or_else(|| issue(&loc, "missing carrier"))?;
                    let carrier = self.get_module(&format!("{loc}.carrier"), carrier_name)?;
                    let delta_spec = spec.delta.as_ref().ok_or_else(|| issue(&loc, "missing delta"))?;
                    let eps_spec = spec.epsilon.as_ref().ok_or_else(|| issue(&loc, "missing epsilon"))?;
                    let square = coring_lab_core::algebra::tensor_over(&carrier, &carrier).map_err(|e| issue(&loc, e.to_string()))?;
                    let delta = parse_matrix(delta_spec, square.dim(), carrier.dim(), &format!("{loc}.delta"))?;
                    let epsilon = parse_matrix(eps_spec, alg.dim(), carrier.dim(), &format!("{loc}.epsilon"))?;
                    (Coring::new(alg.clone(), carrier, delta, epsilon).map_err(|e| issue(&loc, e.to_string()))?, None)
                };
                if *coring.algebra != *alg {
                    return Err(issue(&loc, format!("coring is not over algebra '{}'", spec.algebra)));
                }
                Ok((coring, data))
            })();
            match built {
                Ok((mut coring, data)) => {
                    self.report(loc, &check_coring(&coring));
                    for (gname, g) in &self.file.grouplikes {
                        if g.coring == *name {
                            if let Ok(v) = parse_vector(&g.element, coring.dim(), &format!("grouplikes.{gname}.element")) {
                                coring.candidates.push(v);
                            }
                        }
                    }
                    let coring = Arc::new(coring);
                    if let Some(mut d) = data {
                        d.coring = coring.clone();
                        self.out.comatrix.insert(name.clone(), d);
                    }
                    self.out.corings.insert(name.clone(), coring);
                }
                Err(e) => self.errors.push(e),
            }
        }
    }

    fn get_coring(&self, loc: &str, name: &str) -> Result<Arc<Coring>, Issue> {
        self.out
            .corings
            .get(name)
            .cloned()
            .ok_or_else(|| self.missing(loc, "coring", name, self.file.corings.contains_key(name)))
    }

    fn grouplikes(&mut self) {
        for (name, spec) in &self.file.grouplikes {
            let loc = format!("grouplikes.{name}");
            let built = (|| {
                let c = self.get_coring(&loc, &spec.coring)?;
                let v = parse_vector(&spec.element, c.dim(), &format!("{loc}.element"))?;
                Ok::<_, Issue>((c, v))
            })();
            match built {
                Ok((c, v)) => {
                    let ok = is_grouplike(&c, &v);
                    self.axiom(loc, (!ok).then(|| "Δ(g) ≠ g⊗g or ε(g) ≠ 1".to_string()));
                    self.out.grouplikes.insert(name.clone(), Grouplike { coring: spec.coring.clone(), element: v });
                }
                Err(e) => self.errors.push(e),
            }
        }
    }

    fn comodules(&mut self) {
        for (name, spec) in &self.file.comodules {
            let loc = format!("comodules.{name}");
            let built = (|| {
                let c = self.get_coring(&loc, &spec.coring)?;
                let explicit = spec.coaction.is_some();
                let kinds = [explicit, spec.cofree, spec.grouplike.is_some(), spec.tautological];
                if kinds.iter().filter(|&&k| k).count() != 1 {
                    return Err(issue(&loc, "give exactly one of coaction, cofree, grouplike or tautological"));
                }
                let err = |e: coring_lab_core::Error| issue(&loc, e.to_string());
                if spec.cofree {
                    return Comodule::cofree(c).map_err(err);
                }
                if let Some(g) = &spec.grouplike {
                    let gl = self
                        .out
                        .grouplikes
                        .get(g)
                        .ok_or_else(|| self.missing(&loc, "grouplike", g, self.file.grouplikes.contains_key(g)))?;
                    if gl.coring != spec.coring {
                        return Err(issue(&loc, format!("grouplike '{g}' belongs to coring '{}'", gl.coring)));
                    }
                    return coaction_from_grouplike(c, &gl.element).map_err(err);
                }
                if spec.tautological {
                    let data = self
                        .out
                        .comatrix
                        .get(&spec.coring)
                        .ok_or_else(|| issue(&loc, format!("coring '{}' is not a comatrix coring", spec.coring)))?;
                    let id = ExactMatrix::identity(data.tensor.dim());
                    return coaction_from_can(data, &c, &id).map_err(err);
                }
                let carrier_name = spec.carrier.as_ref().ok_or_else(|| issue(&loc, "missing carrier"))?;
                let carrier = self.get_module(&format!("{loc}.carrier"), carrier_name)?;
                let tensor = coring_lab_core::algebra::tensor_over(&carrier, &c.carrier).map_err(err)?;
                let coaction = parse_matrix(spec.coaction.as_ref().unwrap(), tensor.dim(), carrier.dim(), &format!("{loc}.coaction"))?;
                Comodule::new(c, carrier, coaction).map_err(err)
            })();
            match built {
                Ok(x) => {
                    self.report(loc, &check_comodule(&x));
                    self.out.comodules.insert(name.clone(), x);
                }
                Err(e) => self.errors.push(e),
            }
        }
    }

    fn morphisms(&mut self) {
        for (name, spec) in &self.file.morphisms {
            let loc = format!("morphisms.{name}");
            let built = (|| {
                let dims = |n: &str| -> Result<usize, Issue> {
                    if let Some(x) = self.out.comodules.get(n) {
                        Ok(x.dim())
                    } else if let Some(m) = self.out.modules.get(n) {
                        Ok(m.dim())
                    } else {
                        let declared = self.module_declared(n) || self.file.comodules.contains_key(n);
                        Err(self.missing(&loc, "module or comodule", n, declared))
                    }
                };
                let (ds, dt) = (dims(&spec.source)?, dims(&spec.target)?);
                let map = parse_matrix(&spec.matrix, dt, ds, &format!("{loc}.matrix"))?;
                Ok::<_, Issue>(Morphism { source: spec.source.clone(), target: spec.target.clone(), map })
            })();
            match built {
                Ok(m) => {
                    let failure = morphism_failure(&self.out, &m);
                    self.axiom(loc, failure);
                    self.out.morphisms.insert(name.clone(), m);
                }
                Err(e) => self.errors.push(e),
            }
        }
    }
}

/// Why `m` is not a morphism of its declared kind, if it is not.
pub fn morphism_failure(fixture: &Fixture, m: &Morphism) -> Option<String> {
    if let (Some(x), Some(y)) = (fixture.comodules.get(&m.source), fixture.comodules.get(&m.target)) {
        return match check_comodule_map(&m.map, x, y) {
            Ok(true) => None,
            Ok(false) => Some("not a comodule map".into()),
            Err(e) => Some(e.to_string()),
        };
    }
    let (Some(x), Some(y)) = (fixture.modules.get(&m.source), fixture.modules.get(&m.target)) else {
        return Some("source and target must both be modules or both comodules".into());
    };
    let sides = [(x.right(), y.right(), "right"), (x.left(), y.left(), "left")];
    for (a, b, side) in sides {
        match (a, b) {
            (Some(a), Some(b)) => {
                if a.algebra != b.algebra {
                    return Some(format!("{side} actions are over different algebras"));
                }
                for (k, (ma, mb)) in a.matrices.iter().zip(&b.matrices).enumerate() {
                    if &m.map * ma != mb * &m.map {
                        return Some(format!("not {side}-linear for e{}", k + 1));
                    }
                }
            }
            (None, None) => {}
            _ => return Some(format!("only one side carries a {side} action")),
        }
    }
    None
}

/// Resolves and validates a fixture. Axiom failures are errors in strict mode
/// and warnings in lenient mode; parse, shape and reference problems are always errors.
pub fn resolve(file: &FixtureFile, mode: Mode, digest: String) -> Result<Fixture, LoadError> {
    let mut loader = Loader { file, mode, out: Fixture { digest, ..Fixture::default() }, errors: Vec::new() };
    loader.algebras();
    loader.subalgebras();
    loader.modules();
    loader.corings();
    loader.grouplikes();
    loader.comodules();
    loader.morphisms();
    if loader.errors.is_empty() {
        Ok(loader.out)
    } else {
        Err(LoadError { issues: loader.errors })
    }
}

pub fn load_str(text: &str, mode: Mode) -> Result<Fixture, LoadError> {
    let file = FixtureFile::parse(text)?;
    resolve(&file, mode, digest(text.as_bytes()))
}

pub fn load_fixture(path: &std::path::Path, mode: Mode) -> Result<Fixture, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError { issues: vec![issue(&path.display().to_string(), format!("cannot read: {e}"))] })?;
    load_str(&text, mode)
}

pub fn load_config(path: &std::path::Path) -> Result<ReportConfig, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError { issues: vec![issue(&path.display().to_string(), format!("cannot read: {e}"))] })?;
    serde_json::from_str(&text)
        .map_err(|e| LoadError { issues: vec![issue(&path.display().to_string(), format!("parse error: {e}"))] })
}
