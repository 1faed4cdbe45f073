//! Shipped fixtures, generated from the engine's own constructors.

use std::collections::BTreeMap;
use std::sync::Arc;

use coring_lab_core::algebra::{tensor_over, Action, Algebra, Bimodule, Subalgebra};
use coring_lab_core::coring::{group_coalgebra, matrix_coalgebra, sweedler_coring, Coring};
use coring_lab_core::galois::comatrix_coring;
use coring_lab_core::linalg::{rational, unit_vector, zero_vector, ExactMatrix};

use crate::fixture::{
    matrix_spec, vector_spec, ActionSpec, AlgebraSpec, ComoduleSpec, CoringSpec, FixtureFile, GrouplikeSpec, ModuleSpec,
    MorphismSpec, ReportConfig, SubalgebraSpec,
};

pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub fixture: FixtureFile,
    pub config: Option<ReportConfig>,
}

pub const NAMES: [&str; 8] = ["triv", "sw", "sw-broken-counit", "grp", "grp-broken-counit", "mat", "nonflat", "nonunital"];

pub fn entry(name: &str) -> Option<CatalogEntry> {
    let (description, fixture, config) = match name {
        "triv" => ("trivial coring A over A = Q(√2)", triv(), Some(triv_config())),
        "sw" => ("Sweedler coring of Q ⊂ Q(√2)", sw(false), Some(sw_config())),
        "sw-broken-counit" => ("Sweedler coring with ε replaced by 0", sw(true), None),
        "grp" => ("group coalgebra Q[Z/2] with Σ = Q, ρ(u) = u⊗e", grp(), Some(grp_config())),
        "grp-broken-counit" => ("group coalgebra Q[Z/2] with a broken counit", grp_broken(), None),
        "mat" => ("matrix coalgebra with Σ = Q²", mat(), Some(mat_config())),
        "nonflat" => ("Σ = B ⊕ Q over B = Q[x]/(x²): equalizer preservation fails", nonflat(), Some(nonflat_config())),
        "nonunital" => ("trivial coring over the firm non-unital ring of 1×2 row matrices", nonunital(), None),
        _ => return None,
    };
    let name = NAMES.iter().find(|n| **n == name)?;
    Some(CatalogEntry { name, description, fixture, config })
}

pub fn all() -> Vec<CatalogEntry> {
    NAMES.iter().filter_map(|n| entry(n)).collect()
}

pub fn algebra_spec(a: &Algebra) -> AlgebraSpec {
    let n = a.dim();
    AlgebraSpec {
        dim: n,
        products: (0..n * n).map(|k| vector_spec(&a.basis_product(k / n, k % n))).collect(),
        unit: a.unit().map(|u| vector_spec(u)),
    }
}

fn action_spec(algebra: &str, a: &Action) -> ActionSpec {
    ActionSpec { algebra: algebra.into(), matrices: a.matrices.iter().map(matrix_spec).collect() }
}

/// `left` and `right` name the acting algebras of whichever sides `m` carries.
pub fn module_spec(m: &Bimodule, left: &str, right: &str) -> ModuleSpec {
    ModuleSpec {
        dim: m.dim(),
        left: m.left().map(|a| action_spec(left, a)),
        right: m.right().map(|a| action_spec(right, a)),
    }
}

fn explicit_coring(algebra: &str, carrier: &str, c: &Coring) -> CoringSpec {
    CoringSpec {
        algebra: algebra.into(),
        carrier: Some(carrier.into()),
        delta: Some(matrix_spec(&c.delta)),
        epsilon: Some(matrix_spec(&c.epsilon)),
        sweedler: None,
        comatrix: None,
    }
}

fn comodule(coring: &str) -> ComoduleSpec {
    ComoduleSpec { coring: coring.into(), carrier: None, coaction: None, cofree: false, grouplike: None, tautological: false }
}

fn cofree(coring: &str) -> ComoduleSpec {
    ComoduleSpec { cofree: true, ..comodule(coring) }
}

fn by_grouplike(coring: &str, g: &str) -> ComoduleSpec {
    ComoduleSpec { grouplike: Some(g.into()), ..comodule(coring) }
}

fn explicit_comodule(coring: &str, carrier: &str, coaction: &ExactMatrix) -> ComoduleSpec {
    ComoduleSpec { carrier: Some(carrier.into()), coaction: Some(matrix_spec(coaction)), ..comodule(coring) }
}

fn morphism(source: &str, target: &str, map: &ExactMatrix) -> MorphismSpec {
    MorphismSpec { source: source.into(), target: target.into(), matrix: matrix_spec(map) }
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn over_q(q: &Arc<Algebra>, dim: usize) -> Bimodule {
    let id = || Action::new(q.clone(), vec![ExactMatrix::identity(dim)]).expect("identity action");
    Bimodule::new(dim, Some(id()), Some(id())).expect("Q-bimodule")
}

fn right_q(q: &Arc<Algebra>, dim: usize) -> Bimodule {
    Bimodule::right_module(q.clone(), dim, vec![ExactMatrix::identity(dim)]).expect("Q-module")
}

fn swap() -> ExactMatrix {
    ExactMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])
}

fn triv() -> FixtureFile {
    let a = Arc::new(Algebra::quadratic_field(2));
    let c = Coring::trivial(a.clone()).expect("Q(√2) is unital");
    let mut f = FixtureFile::default();
    f.algebras.insert("A".into(), algebra_spec(&a));
    f.bimodules.insert("A".into(), module_spec(&Bimodule::regular(a.clone()), "A", "A"));
    f.modules.insert("A_right".into(), module_spec(&Bimodule::regular_right(a.clone()), "A", "A"));
    f.corings.insert("C".into(), explicit_coring("A", "A", &c));
    f.grouplikes.insert("one".into(), GrouplikeSpec { coring: "C".into(), element: vector_spec(a.unit().unwrap()) });
    f.comodules.insert("C".into(), cofree("C"));
    f.comodules.insert("A_one".into(), by_grouplike("C", "one"));
    // Right A-linear endomorphisms of A are left multiplications.
    let s = a.left_multiplication(&unit_vector(2, 1));
    f.morphisms.insert("times_s".into(), morphism("A_right", "A_right", &s));
    f.morphisms.insert("zero".into(), morphism("A_right", "A_right", &ExactMatrix::zeros(2, 2)));
    f
}

fn triv_config() -> ReportConfig {
    ReportConfig {
        sigma: "C".into(),
        comodules: names(&["A_one", "C"]),
        bmodules: names(&["A_right"]),
        morphisms: names(&["times_s", "zero"]),
    }
}

fn sw(broken: bool) -> FixtureFile {
    let a = Arc::new(Algebra::quadratic_field(2));
    let b = Subalgebra::scalars(a.clone()).expect("1 ∈ A");
    let c = sweedler_coring(&b).expect("Sweedler coring");
    let mut f = FixtureFile::default();
    f.algebras.insert("A".into(), algebra_spec(&a));
    f.subalgebras.insert("B".into(), SubalgebraSpec { algebra: "A".into(), basis: vec![vector_spec(a.unit().unwrap())] });
    f.bimodules.insert("AA".into(), module_spec(&c.carrier, "A", "A"));
    let mut spec = explicit_coring("A", "AA", &c);
    if broken {
        spec.epsilon = Some(matrix_spec(&ExactMatrix::zeros(c.epsilon.rows(), c.epsilon.cols())));
        f.corings.insert("C".into(), spec);
        return f;
    }
    f.corings.insert("C".into(), spec);
    let g = c.candidates[0].clone();
    f.grouplikes.insert("g".into(), GrouplikeSpec { coring: "C".into(), element: vector_spec(&g) });
    let reg = Bimodule::regular(a.clone());
    let sigma = reg.clone().with_left(reg.left().unwrap().restrict(&b, 2).unwrap()).unwrap();
    f.bimodules.insert("Sigma".into(), module_spec(&sigma, "B", "A"));
    // ρ(a) = (1⊗1)·a under Σ ⊗_A C ≅ C.
    let sc = tensor_over(&sigma, &c.carrier).unwrap();
    let unit = a.unit().unwrap().clone();
    let cols: Vec<_> = (0..2)
        .map(|k| sc.class_of(&unit, &c.carrier.act_right(&unit_vector(2, k)).unwrap().apply(&g)))
        .collect();
    f.comodules.insert("Sigma".into(), explicit_comodule("C", "Sigma", &ExactMatrix::from_columns(sc.dim(), &cols)));
    f.comodules.insert("C".into(), cofree("C"));
    f.comodules.insert("A_g".into(), by_grouplike("C", "g"));
    let bq = b.algebra.clone();
    f.modules.insert("B".into(), module_spec(&right_q(&bq, 1), "B", "B"));
    f.modules.insert("B2".into(), module_spec(&right_q(&bq, 2), "B", "B"));
    f.morphisms.insert("swap".into(), morphism("B2", "B2", &swap()));
    f.morphisms.insert("diagonal".into(), morphism("B", "B2", &ExactMatrix::from_i64_rows(&[&[1], &[1]])));
    f
}

fn sw_config() -> ReportConfig {
    ReportConfig {
        sigma: "Sigma".into(),
        comodules: names(&["A_g", "C"]),
        bmodules: names(&["B", "B2"]),
        morphisms: names(&["diagonal", "swap"]),
    }
}

fn grp_carrier() -> (Arc<Algebra>, Coring) {
    let c = group_coalgebra(2).expect("group coalgebra");
    (c.algebra.clone(), c)
}

fn grp() -> FixtureFile {
    let (q, c) = grp_carrier();
    let mut f = FixtureFile::default();
    f.algebras.insert("Q".into(), algebra_spec(&q));
    f.bimodules.insert("QZ2".into(), module_spec(&c.carrier, "Q", "Q"));
    f.corings.insert("C".into(), explicit_coring("Q", "QZ2", &c));
    for (name, k) in [("e", 0), ("s", 1)] {
        f.grouplikes.insert(name.into(), GrouplikeSpec { coring: "C".into(), element: vector_spec(&unit_vector(2, k)) });
    }
    let sigma = over_q(&q, 1);
    f.bimodules.insert("Sigma".into(), module_spec(&sigma, "Q", "Q"));
    let sc = tensor_over(&sigma, &c.carrier).unwrap();
    let rho = ExactMatrix::column_vector(&sc.class_of(&[rational(1)], &unit_vector(2, 0)));
    f.comodules.insert("Sigma".into(), explicit_comodule("C", "Sigma", &rho));
    f.comodules.insert("C".into(), cofree("C"));
    f.comodules.insert("Q_e".into(), by_grouplike("C", "e"));
    f.comodules.insert("Q_s".into(), by_grouplike("C", "s"));
    f.modules.insert("B".into(), module_spec(&right_q(&q, 1), "Q", "Q"));
    f
}

fn grp_config() -> ReportConfig {
    ReportConfig {
        sigma: "Sigma".into(),
        comodules: names(&["C", "Q_e", "Q_s"]),
        bmodules: names(&["B"]),
        morphisms: Vec::new(),
    }
}

fn grp_broken() -> FixtureFile {
    let (q, c) = grp_carrier();
    let mut f = FixtureFile::default();
    f.algebras.insert("Q".into(), algebra_spec(&q));
    f.bimodules.insert("QZ2".into(), module_spec(&c.carrier, "Q", "Q"));
    let mut spec = explicit_coring("Q", "QZ2", &c);
    spec.epsilon = Some(vec![vec!["1".into(), "0".into()]]);
    f.corings.insert("C".into(), spec);
    f
}

fn mat() -> FixtureFile {
    let c = matrix_coalgebra(2).expect("matrix coalgebra");
    let q = c.algebra.clone();
    let mut f = FixtureFile::default();
    f.algebras.insert("Q".into(), algebra_spec(&q));
    f.bimodules.insert("M2".into(), module_spec(&c.carrier, "Q", "Q"));
    f.corings.insert("C".into(), explicit_coring("Q", "M2", &c));
    let sigma = over_q(&q, 2);
    f.bimodules.insert("Sigma".into(), module_spec(&sigma, "Q", "Q"));
    // ρ(e_j) = Σ_i e_i ⊗ E_ij.
    let sc = tensor_over(&sigma, &c.carrier).unwrap();
    let cols: Vec<_> = (0..2)
        .map(|j| {
            let mut col = zero_vector(sc.dim());
            for i in 0..2 {
                for (o, v) in col.iter_mut().zip(sc.class_of(&unit_vector(2, i), &unit_vector(4, i * 2 + j))) {
                    *o += v;
                }
            }
            col
        })
        .collect();
    f.comodules.insert("Sigma".into(), explicit_comodule("C", "Sigma", &ExactMatrix::from_columns(sc.dim(), &cols)));
    f.comodules.insert("C".into(), cofree("C"));
    f.modules.insert("B".into(), module_spec(&right_q(&q, 1), "Q", "Q"));
    f.modules.insert("B2".into(), module_spec(&right_q(&q, 2), "Q", "Q"));
    f.morphisms.insert("swap".into(), morphism("B2", "B2", &swap()));
    f.morphisms.insert("project".into(), morphism("B2", "B", &ExactMatrix::from_i64_rows(&[&[1, 0]])));
    f
}

fn mat_config() -> ReportConfig {
    ReportConfig {
        sigma: "Sigma".into(),
        comodules: names(&["C", "Sigma"]),
        bmodules: names(&["B", "B2"]),
        morphisms: names(&["project", "swap"]),
    }
}

fn nonflat_sigma() -> (Arc<Algebra>, Arc<Algebra>, Bimodule) {
    let q = Arc::new(Algebra::scalars());
    let b = Arc::new(Algebra::truncated_polynomial(2));
    let x = ExactMatrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
    let sigma = Bimodule::new(
        3,
        Some(Action::new(b.clone(), vec![ExactMatrix::identity(3), x]).unwrap()),
        Some(Action::new(q.clone(), vec![ExactMatrix::identity(3)]).unwrap()),
    )
    .unwrap();
    (q, b, sigma)
}

fn nonflat() -> FixtureFile {
    let (q, b, sigma) = nonflat_sigma();
    let data = comatrix_coring(&sigma).expect("Σ is finitely generated projective");
    // g = q* ⊗ q for the projection q* onto the Q summand.
    let q_star = data.dual.hom.coordinates(&ExactMatrix::from_i64_rows(&[&[0, 0, 1]])).unwrap();
    let g = data.tensor.class_of(&q_star, &unit_vector(3, 2));
    let mut f = FixtureFile::default();
    f.algebras.insert("Q".into(), algebra_spec(&q));
    f.algebras.insert("B".into(), algebra_spec(&b));
    f.bimodules.insert("Sigma".into(), module_spec(&sigma, "B", "Q"));
    f.corings.insert(
        "C".into(),
        CoringSpec {
            algebra: "Q".into(),
            carrier: None,
            delta: None,
            epsilon: None,
            sweedler: None,
            comatrix: Some("Sigma".into()),
        },
    );
    f.grouplikes.insert("g".into(), GrouplikeSpec { coring: "C".into(), element: vector_spec(&g) });
    f.comodules.insert("Sigma".into(), ComoduleSpec { tautological: true, ..comodule("C") });
    f.comodules.insert("C".into(), cofree("C"));
    f.comodules.insert("X_q".into(), by_grouplike("C", "g"));
    f.modules.insert("B".into(), module_spec(&Bimodule::regular_right(b.clone()), "B", "B"));
    f
}

fn nonflat_config() -> ReportConfig {
    ReportConfig {
        sigma: "Sigma".into(),
        comodules: names(&["C", "Sigma", "X_q"]),
        bmodules: names(&["B"]),
        morphisms: Vec::new(),
    }
}

fn nonunital() -> FixtureFile {
    let r = Arc::new(Algebra::row_matrices(2));
    let c = Coring::trivial(r.clone()).expect("row matrices are firm");
    let mut f = FixtureFile::default();
    f.algebras.insert("R".into(), algebra_spec(&r));
    f.bimodules.insert("R".into(), module_spec(&Bimodule::regular(r.clone()), "R", "R"));
    f.corings.insert("C".into(), explicit_coring("R", "R", &c));
    f.comodules.insert("C".into(), cofree("C"));
    f
}

/// Canonical JSON of every shipped file, keyed by file name.
pub fn files() -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    for e in all() {
        out.insert(format!("{}.json", e.name), e.fixture.to_canonical_json());
        if let Some(cfg) = &e.config {
            let mut s = serde_json::to_string_pretty(cfg).expect("config serializes");
            s.push('\n');
            out.insert(format!("{}.report.json", e.name), s);
        }
    }
    out
}
