//! Command drivers. Each returns a [`ReportDocument`] or an input error.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use coring_lab_core::algebra::{algebra_firmness, check_algebra, check_module, Bimodule};
use coring_lab_core::axioms::AxiomReport;
use coring_lab_core::coring::{
    check_comodule, check_coring, coaction_from_grouplike, coinvariants, endomorphism_ring, is_grouplike,
    sweedler_coring, Comodule,
};
use coring_lab_core::galois::{
    adjunction_counit, check_left_coaction, comatrix_coring, cotensor, equivalence_report, triangle_right,
    DiagnosticsReport, GaloisSetup, MorphismSample, Verdict,
};
use coring_lab_core::linalg::is_isomorphism;

use crate::fixture::{matrix_spec, morphism_failure, Fixture, Issue, LoadError, MatrixSpec, ReportConfig};

pub const TOOL: &str = "coring-lab";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckVerdict {
    pub subject: String,
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Consistency {
    pub consistent: bool,
    pub checked: usize,
    pub inconsistent: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub fixture_digest: String,
    pub summary: Vec<String>,
    pub verdicts: Vec<CheckVerdict>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, MatrixSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<DiagnosticsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistency: Option<Consistency>,
    pub warnings: Vec<String>,
}

impl ReportDocument {
    fn new(command: &str, fixture: &Fixture) -> Self {
        ReportDocument {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            fixture_digest: fixture.digest.clone(),
            summary: Vec::new(),
            verdicts: Vec::new(),
            matrices: BTreeMap::new(),
            diagnostics: None,
            consistency: None,
            warnings: fixture.warnings.iter().map(Issue::to_string).collect(),
        }
    }

    fn axioms(&mut self, subject: &str, report: &AxiomReport) {
        for c in &report.checks {
            self.verdicts.push(CheckVerdict {
                subject: subject.into(),
                check: c.name.clone(),
                passed: c.passed,
                witness: c.witness.clone(),
            });
        }
    }

    fn verdict(&mut self, subject: &str, check: &str, passed: bool, witness: Option<String>) {
        self.verdicts.push(CheckVerdict { subject: subject.into(), check: check.into(), passed, witness });
    }

    fn diagnostic(&mut self, category: &str, v: &Verdict) {
        let witness = (!v.detail.is_empty()).then(|| v.detail.clone());
        self.verdict(category, &v.subject, v.holds, witness);
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed) && self.consistency.as_ref().is_none_or(|c| c.consistent)
    }

    /// 0 when every verdict holds, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {} {}\n", self.tool, self.version, self.command, self.fixture_digest);
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        for s in &self.summary {
            out.push_str(s);
            out.push('\n');
        }
        for v in &self.verdicts {
            let status = if v.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}: {}", v.subject, v.check));
            if let Some(w) = &v.witness {
                out.push_str(&format!(" ({w})"));
            }
            out.push('\n');
        }
        if let Some(c) = &self.consistency {
            let word = if c.consistent { "consistent" } else { "INCONSISTENT" };
            out.push_str(&format!("theorem consistency: {word} ({} checks)\n", c.checked));
            for s in &c.inconsistent {
                out.push_str(&format!("  inconsistent: {s}\n"));
            }
        }
        out
    }
}

fn input(location: &str, message: impl ToString) -> LoadError {
    LoadError { issues: vec![Issue { location: location.into(), message: message.to_string() }] }
}

fn lookup<T>(r: Result<T, Issue>) -> Result<T, LoadError> {
    r.map_err(|i| LoadError { issues: vec![i] })
}

/// Axiom checks for every object, or only those named `object`.
pub fn check(fixture: &Fixture, object: Option<&str>) -> Result<ReportDocument, LoadError> {
    let mut doc = ReportDocument::new("check", fixture);
    let wanted = |name: &str| object.is_none_or(|o| o == name);
    let mut seen = false;
    for (name, a) in &fixture.algebras {
        if !wanted(name) {
            continue;
        }
        seen = true;
        let subject = format!("algebras.{name}");
        doc.axioms(&subject, &check_algebra(a));
        if !a.is_unital() {
            match algebra_firmness(a.clone()) {
                Ok(f) => {
                    doc.verdict(&subject, "firm", f.firm, None);
                    doc.verdict(&subject, "d⁺ = d⁻", f.inverses_agree, None);
                }
                Err(e) => doc.verdict(&subject, "firm", false, Some(e.to_string())),
            }
        }
    }
    for (name, m) in &fixture.modules {
        if wanted(name) {
            seen = true;
            doc.axioms(&format!("modules.{name}"), &check_module(m));
        }
    }
    for (name, c) in &fixture.corings {
        if wanted(name) {
            seen = true;
            doc.axioms(&format!("corings.{name}"), &check_coring(c));
        }
    }
    for (name, g) in &fixture.grouplikes {
        if wanted(name) {
            seen = true;
            let ok = is_grouplike(&fixture.corings[&g.coring], &g.element);
            doc.verdict(&format!("grouplikes.{name}"), "Δ(g) = g⊗g, ε(g) = 1", ok, None);
        }
    }
    for (name, x) in &fixture.comodules {
        if wanted(name) {
            seen = true;
            doc.axioms(&format!("comodules.{name}"), &check_comodule(x));
        }
    }
    for (name, m) in &fixture.morphisms {
        if wanted(name) {
            seen = true;
            let failure = morphism_failure(fixture, m);
            doc.verdict(&format!("morphisms.{name}"), "morphism", failure.is_none(), failure);
        }
    }
    if let (Some(o), false) = (object, seen) {
        return Err(input(o, "no object with this name"));
    }
    let failed = doc.verdicts.iter().filter(|v| !v.passed).count();
    doc.summary.push(format!("CHECK: {} checks, {failed} failed", doc.verdicts.len()));
    Ok(doc)
}

pub fn sweedler(fixture: &Fixture, algebra: &str, subalgebra: &str) -> Result<ReportDocument, LoadError> {
    let a = fixture.algebras.get(algebra).ok_or_else(|| input(algebra, "unresolved algebra reference"))?;
    let b = fixture.subalgebras.get(subalgebra).ok_or_else(|| input(subalgebra, "unresolved subalgebra reference"))?;
    if b.ambient != *a {
        return Err(input(subalgebra, format!("not a subalgebra of '{algebra}'")));
    }
    let ctx = |e: coring_lab_core::Error| input(&format!("sweedler({algebra}, {subalgebra})"), e);
    let c = Arc::new(sweedler_coring(b).map_err(ctx)?);
    let mut doc = ReportDocument::new("sweedler", fixture);
    doc.axioms("C", &check_coring(&c));
    let g = c.candidates[0].clone();
    doc.verdict("C", "1⊗1 is grouplike", is_grouplike(&c, &g), None);
    let coinv = coinvariants(&c, &g).map_err(ctx)?;
    let x = coaction_from_grouplike(c.clone(), &g).map_err(ctx)?;
    let end = endomorphism_ring(&x).map_err(ctx)?;
    doc.summary.push(format!("SWEEDLER: {algebra} ⊗_{subalgebra} {algebra} has dimension {}", c.dim()));
    doc.summary.push(format!("coinvariants of 1⊗1: dimension {}", coinv.dim()));
    doc.summary.push(format!("End({algebra}, ρ_g): dimension {}", end.algebra.dim()));
    doc.matrices.insert("delta".into(), matrix_spec(&c.delta));
    doc.matrices.insert("epsilon".into(), matrix_spec(&c.epsilon));
    Ok(doc)
}

pub fn comatrix(fixture: &Fixture, sigma: &str) -> Result<ReportDocument, LoadError> {
    let s = lookup(fixture.module(sigma))?;
    let data = comatrix_coring(s).map_err(|e| input(&format!("comatrix({sigma})"), e))?;
    let mut doc = ReportDocument::new("comatrix", fixture);
    doc.axioms("Σ*⊗_B Σ", &check_coring(&data.coring));
    let dual_ok = data.dual_basis.verify(s, &data.dual).map_err(|e| input(sigma, e))?;
    doc.verdict(sigma, "dual basis Σ e_i e*_i(x) = x", dual_ok, None);
    doc.summary.push(format!(
        "COMATRIX: Σ* has dimension {}, Σ*⊗_B Σ has dimension {}",
        data.dual.module.dim(),
        data.coring.dim()
    ));
    doc.matrices.insert("delta".into(), matrix_spec(&data.coring.delta));
    doc.matrices.insert("epsilon".into(), matrix_spec(&data.coring.epsilon));
    Ok(doc)
}

fn setup(fixture: &Fixture, sigma: &str, coring: Option<&str>) -> Result<GaloisSetup, LoadError> {
    let x = lookup(fixture.comodule(sigma))?;
    if let Some(c) = coring {
        let c = lookup(fixture.coring(c))?;
        if !Arc::ptr_eq(c, &x.coring) {
            return Err(input(sigma, format!("comodule is not over coring '{}'", coring.unwrap())));
        }
    }
    if x.carrier.left().is_none() {
        return Err(input(sigma, "Σ needs a left B-action"));
    }
    GaloisSetup::new(x.clone()).map_err(|e| input(sigma, e))
}

fn galois_line(s: &GaloisSetup) -> String {
    let v = s.galois_verdict();
    format!("GALOIS: {} ({})", if v.holds { "yes" } else { "no" }, v.detail)
}

pub fn can(fixture: &Fixture, sigma: &str, coring: Option<&str>) -> Result<ReportDocument, LoadError> {
    let s = setup(fixture, sigma, coring)?;
    let mut doc = ReportDocument::new("can", fixture);
    doc.axioms("can", &s.morphism);
    doc.axioms("α on Σ*", &check_left_coaction(&s.data, s.coring(), &s.alpha));
    doc.summary.push(format!("CAN: {}×{} of rank {}", s.can.rows(), s.can.cols(), s.can_rank()));
    doc.summary.push(galois_line(&s));
    doc.matrices.insert("can".into(), matrix_spec(&s.can));
    Ok(doc)
}

pub fn galois(fixture: &Fixture, sigma: &str, coring: Option<&str>) -> Result<ReportDocument, LoadError> {
    let s = setup(fixture, sigma, coring)?;
    let mut doc = ReportDocument::new("galois", fixture);
    let v = s.galois_verdict();
    doc.summary.push(galois_line(&s));
    doc.verdict(sigma, "can is an isomorphism", v.holds, Some(v.detail));
    Ok(doc)
}

pub fn cotensor_cmd(fixture: &Fixture, comodule: &str, sigma: &str) -> Result<ReportDocument, LoadError> {
    let s = setup(fixture, sigma, None)?;
    let x: &Comodule = lookup(fixture.comodule(comodule))?;
    if !Arc::ptr_eq(&x.coring, s.coring()) {
        return Err(input(comodule, format!("comodule is not over the coring of '{sigma}'")));
    }
    let ctx = |e: coring_lab_core::Error| input(&format!("cotensor({comodule}, {sigma})"), e);
    let ct = cotensor(&s, x).map_err(ctx)?;
    let counit = adjunction_counit(&s, x).map_err(ctx)?;
    let tri = triangle_right(&s, x).map_err(ctx)?;
    let mut doc = ReportDocument::new("cotensor", fixture);
    doc.summary.push(format!("COTENSOR: {comodule} □ Σ† has dimension {}", ct.dim()));
    doc.summary.push(format!(
        "counit ε̂: {}×{}, {}",
        counit.map.rows(),
        counit.map.cols(),
        if is_isomorphism(&counit.map) { "iso" } else { "not iso" }
    ));
    doc.verdict(comodule, "R(ε̂) ∘ η̂_R = id", tri.is_none(), tri);
    Ok(doc)
}

pub fn report(fixture: &Fixture, config: &ReportConfig) -> Result<ReportDocument, LoadError> {
    let s = setup(fixture, &config.sigma, None)?;
    let comodules = config
        .comodules
        .iter()
        .map(|n| {
            let x = lookup(fixture.comodule(n))?;
            if !Arc::ptr_eq(&x.coring, s.coring()) {
                return Err(input(n, "comodule is not over the coring of Σ"));
            }
            Ok((n.clone(), x.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let bmodules: Vec<(String, Bimodule)> = config
        .bmodules
        .iter()
        .map(|n| Ok((n.clone(), lookup(fixture.module(n))?.clone())))
        .collect::<Result<_, LoadError>>()?;
    let morphisms = config
        .morphisms
        .iter()
        .map(|n| {
            let m = lookup(fixture.morphism(n))?;
            Ok(MorphismSample {
                name: n.clone(),
                source: lookup(fixture.module(&m.source))?.clone(),
                target: lookup(fixture.module(&m.target))?.clone(),
                map: m.map.clone(),
            })
        })
        .collect::<Result<Vec<_>, LoadError>>()?;
    let diag = equivalence_report(&s, &comodules, &bmodules, &morphisms).map_err(|e| input("report", e))?;
    let mut doc = ReportDocument::new("report", fixture);
    doc.summary.push(galois_line(&s));
    let eq = diag.equivalence.unwrap_or(false);
    doc.summary.push(format!("fully faithful: {}", yes_no(diag.fully_faithful)));
    doc.summary.push(format!("equivalence on samples: {}", yes_no(eq)));
    if diag.vacuous {
        doc.summary.push("no comodules sampled: fully-faithfulness check is vacuous".into());
    }
    doc.diagnostic("galois", &diag.galois);
    for (cat, vs) in [
        ("counit iso", &diag.counit_iso),
        ("unit iso", &diag.unit_iso),
        ("preserves equalizer", &diag.preserves_equalizers),
        ("reflects iso", &diag.reflects_iso_samples),
        ("structural", &diag.structural),
    ] {
        for v in vs {
            doc.diagnostic(cat, v);
        }
    }
    doc.consistency = Some(Consistency {
        consistent: diag.consistent(),
        checked: diag.theorem_consistency.len(),
        inconsistent: diag.theorem_consistency.iter().filter(|v| !v.holds).map(|v| v.subject.clone()).collect(),
    });
    doc.diagnostics = Some(diag);
    Ok(doc)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::fixture::{resolve, Mode};

    fn load(name: &str) -> Fixture {
        let e = catalog::entry(name).unwrap();
        resolve(&e.fixture, Mode::Strict, "sha256:test".into()).unwrap()
    }

    #[test]
    fn text_output_marks_failures() {
        let f = load("grp");
        let doc = galois(&f, "Sigma", Some("C")).unwrap();
        assert_eq!(doc.exit_code(), 1);
        let text = doc.to_text();
        assert!(text.contains("GALOIS: no (rank 1 of 2)"));
        assert!(text.contains("FAIL Sigma: can is an isomorphism"));
    }

    #[test]
    fn wrong_coring_is_an_input_error() {
        let f = load("sw");
        assert!(galois(&f, "Sigma", Some("missing")).is_err());
        assert!(check(&f, Some("missing")).is_err());
    }

    #[test]
    fn check_of_one_object_only() {
        let f = load("sw");
        let doc = check(&f, Some("g")).unwrap();
        assert_eq!(doc.verdicts.len(), 1);
        assert!(doc.passed());
    }
}
